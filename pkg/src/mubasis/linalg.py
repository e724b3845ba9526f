"""Small exact dense linear algebra over a Field (raw values)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .arith import Field, Raw


def rank(field: Field, rows: Sequence[Sequence[Raw]]) -> int:
    """Rank by forward elimination on a copy."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        src = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if src is None:
            continue
        m[r], m[src] = m[src], m[r]
        inv = field.inv(m[r][c])
        for i in range(r + 1, len(m)):
            x = m[i][c]
            if x:
                f = field.mul(x, inv)
                m[i] = [field.sub(u, field.mul(f, v)) for u, v in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def first_dependency(field: Field, vectors: Sequence[Sequence[Raw]]) -> list[Raw] | None:
    """Nonzero ``alpha`` with ``sum alpha_i * vectors[i] == 0``, or None if independent.

    Vectors are added one at a time; the first one that reduces to zero
    against its predecessors yields the relation, so ``alpha`` is supported
    on a prefix and its last nonzero entry is 1.
    """
    k = len(vectors)
    basis: list[tuple[int, list[Raw], dict[int, Raw]]] = []  # (pivot, vec, combo)
    for idx, v in enumerate(vectors):
        vec = list(v)
        combo = {idx: field.one}
        for piv, bvec, bcombo in basis:
            x = vec[piv]
            if x:
                f = field.div(x, bvec[piv])
                vec = [field.sub(u, field.mul(f, w)) for u, w in zip(vec, bvec)]
                for j, c in bcombo.items():
                    combo[j] = field.sub(combo.get(j, field.zero), field.mul(f, c))
        piv = next((i for i, x in enumerate(vec) if x != 0), None)
        if piv is None:
            alpha = [field.zero] * k
            for j, c in combo.items():
                alpha[j] = c
            return alpha
        basis.append((piv, vec, combo))
    return None


def integer_scaled(alpha: Sequence[Fraction]) -> list[Fraction]:
    """Rescale a rational vector to coprime integer entries (sign kept)."""
    den = 1
    for x in alpha:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(x * den) for x in alpha]
    g = 0
    for x in ints:
        g = gcd(g, x)
    g = g or 1
    return [Fraction(x // g) for x in ints]
