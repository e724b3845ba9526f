"""The block-shifted coefficient matrix of an input vector and the flattening maps.

For ``a = c_0 + c_1 s + ... + c_d s^d`` with row vectors ``c_j`` of length
``n``, the matrix ``A`` has ``2d+1`` rows and ``d+1`` column blocks of width
``n``; block ``k`` holds ``c_0, ..., c_d`` shifted down by ``k`` rows.  A
polynomial vector ``h`` of degree at most ``t`` flattens to the stacked
coefficient blocks ``w_0, ..., w_t`` (:func:`sharp`) and back (:func:`flat`),
and ``dot(a, flat(v)) == flat(A v)``.

Row and column indices in the public vocabulary are 1-based; the storage is
0-based Python lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arith import Field, Raw
from .errors import DegreeOverflowError, DimensionError
from .poly import MINUS_INFINITY, InputVector, Polynomial, PolyVector


@dataclass(frozen=True)
class CoeffMatrix:
    """Dense row-major ``(2d+1) x n(d+1)`` coefficient matrix."""

    field: Field
    block_width: int
    degree: int
    data: tuple[tuple[Raw, ...], ...]

    @property
    def rows(self) -> int:
        return 2 * self.degree + 1

    @property
    def cols(self) -> int:
        return self.block_width * (self.degree + 1)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def entry(self, i: int, j: int) -> Raw:
        """Entry at 1-based row ``i`` and column ``j``."""
        return self.data[i - 1][j - 1]

    def column(self, j: int) -> list[Raw]:
        """A fresh copy of 1-based column ``j``."""
        return [row[j - 1] for row in self.data]

    def to_lists(self) -> list[list[Raw]]:
        return [list(r) for r in self.data]


@dataclass(frozen=True)
class FlatVector:
    """Stacked coefficient blocks: ``data[k*m + r]`` is coeff of ``s**k`` in entry ``r``."""

    field: Field
    data: tuple[Raw, ...]
    block_width: int

    def __post_init__(self):
        if self.block_width < 1 or len(self.data) % self.block_width:
            raise DimensionError(
                f"length {len(self.data)} is not a multiple of block width {self.block_width}"
            )

    @property
    def levels(self) -> int:
        return len(self.data) // self.block_width

    def __len__(self):
        return len(self.data)


def build_A(a: InputVector) -> CoeffMatrix:
    """Coefficient matrix of ``a`` (see module docstring)."""
    f = a.field
    n, d = len(a), a.degree
    c = a.coefficient_rows()
    zero = f.zero
    rows = []
    for i in range(2 * d + 1):
        row = [zero] * (n * (d + 1))
        # block k contributes c_{i-k}
        for k in range(max(0, i - d), min(d, i) + 1):
            row[k * n:(k + 1) * n] = c[i - k]
        rows.append(tuple(row))
    return CoeffMatrix(f, n, d, tuple(rows))


def sharp(h: PolyVector, t: int) -> FlatVector:
    deg = h.degree
    if deg is not MINUS_INFINITY and deg > t:
        raise DegreeOverflowError(f"vector of degree {deg} does not fit degree bound {t}")
    data = [e.coeff(k) for k in range(t + 1) for e in h]
    return FlatVector(h.field, tuple(data), len(h))


def flat(v: FlatVector) -> PolyVector:
    m = v.block_width
    return PolyVector(
        [Polynomial._raw(v.field, v.data[r::m]) for r in range(m)], v.field
    )


def flat_from(field: Field, data: Sequence, block_width: int) -> PolyVector:
    """Convenience: :func:`flat` of raw or coercible values."""
    return flat(FlatVector(field, tuple(field.coerce(x) for x in data), block_width))


def apply_A(A: CoeffMatrix, v: FlatVector) -> FlatVector:
    """``A v`` as a width-1 flat vector (i.e. a polynomial's coefficients)."""
    if len(v) != A.cols:
        raise DimensionError(f"matrix has {A.cols} columns, vector has length {len(v)}")
    if v.field != A.field:
        raise DimensionError(f"vector over {v.field}, matrix over {A.field}")
    f = A.field
    p = f.modulus
    x = v.data
    out = []
    for row in A.data:
        acc = f.zero
        for aij, xj in zip(row, x):
            if aij and xj:
                acc += aij * xj
        out.append(acc % p if p else acc)
    return FlatVector(f, tuple(out), 1)
