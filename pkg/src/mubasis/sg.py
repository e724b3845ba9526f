"""Song-Goldman μ-basis algorithm, used as an independent oracle and benchmark rival.

Starts from the obvious syzygies ``[.. -a_j .. a_i ..]`` and repeatedly
cancels the leading vector of the highest-degree member against the others
until ``n - 1`` nonzero syzygies remain.  When ``gcd(a) != 1`` the result is
a μ-basis multiplied by ``gcd(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .arith import Field, Raw
from .errors import InternalContradictionError
from .hhk import MuBasisMatrix
from .linalg import first_dependency, integer_scaled
from .poly import InputVector, Polynomial, PolyVector


@dataclass
class SgState:
    """Syzygies kept sorted by non-increasing degree, with cached degrees and leading vectors."""

    syzygies: list[PolyVector]
    leading_vectors: list[list[Raw]] = field(default_factory=list)
    degrees: list[int] = field(default_factory=list)
    iterations: int = 0

    def __post_init__(self):
        # stable sort, highest degree first
        self.syzygies.sort(key=lambda u: -u.degree)
        self.degrees = [u.degree for u in self.syzygies]
        self.leading_vectors = [u.leading_vector for u in self.syzygies]

    @property
    def r(self) -> int:
        return len(self.syzygies)

    def replace(self, j: int, u: PolyVector) -> None:
        """Drop member ``j`` and, if ``u`` is nonzero, re-insert it where a stable sort would."""
        del self.syzygies[j], self.degrees[j], self.leading_vectors[j]
        if u.is_zero():
            return
        deg = u.degree
        # members before j are strictly higher than u; u precedes equal-degree members after it
        k = j
        while k < len(self.degrees) and self.degrees[k] > deg:
            k += 1
        self.syzygies.insert(k, u)
        self.degrees.insert(k, deg)
        self.leading_vectors.insert(k, u.leading_vector)


def obvious_syzygies(a: InputVector) -> list[PolyVector]:
    """Nonzero ``u_ij`` for ``i < j``: ``-a_j`` in slot ``i``, ``a_i`` in slot ``j``."""
    f = a.field
    n = len(a)
    zero = Polynomial.zero(f)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if a[i].is_zero() and a[j].is_zero():
                continue
            entries = [zero] * n
            entries[i] = -a[j]
            entries[j] = a[i]
            out.append(PolyVector(entries, f))
    return out


def leading_nullvector(field: Field, ms: Sequence[Sequence[Raw]]) -> list[Raw]:
    """Nonzero ``alpha`` with ``sum alpha_i m_i == 0``; integral over the rationals."""
    alpha = first_dependency(field, ms)
    if alpha is None:
        raise InternalContradictionError(f"{len(ms)} leading vectors are independent")
    if field.modulus is None:
        alpha = integer_scaled(alpha)
    return alpha


def _combine(state: SgState, j: int, alpha: list[Raw]) -> PolyVector:
    f = state.syzygies[j].field
    n = len(state.syzygies[j])
    dj = state.degrees[j]
    acc = [list(e.coeffs) for e in state.syzygies[j].scale(alpha[j])]
    for k in range(j + 1, state.r):
        c = alpha[k]
        if not c:
            continue
        shift = dj - state.degrees[k]
        for r, e in enumerate(state.syzygies[k]):
            row = acc[r]
            coeffs = e.coeffs
            need = shift + len(coeffs)
            if len(row) < need:
                row.extend([f.zero] * (need - len(row)))
            for t, x in enumerate(coeffs):
                if x:
                    row[shift + t] = f.add(row[shift + t], f.mul(c, x))
    return PolyVector([Polynomial._raw(f, row) for row in acc[:n]], f)


def sg_mu_basis(
    a: InputVector,
    *,
    max_iterations: int | None = None,
    on_step: Callable[[SgState], None] | None = None,
) -> MuBasisMatrix:
    """Song-Goldman reduction; columns returned in increasing degree.

    ``on_step`` is called with the state after every reduction step.
    """
    n = len(a)
    state = SgState(obvious_syzygies(a))
    while state.r > n - 1:
        if max_iterations is not None and state.iterations >= max_iterations:
            raise InternalContradictionError("Song-Goldman iteration limit reached")
        alpha = leading_nullvector(a.field, state.leading_vectors)
        j = next(i for i, x in enumerate(alpha) if x)
        state.replace(j, _combine(state, j, alpha))
        state.iterations += 1
        if on_step is not None:
            on_step(state)
    cols = sorted(state.syzygies, key=lambda u: u.degree)
    return MuBasisMatrix(a.field, tuple(cols))
