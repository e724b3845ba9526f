"""Checks that a claimed μ-basis really is one, and gcd recovery from a μ-basis.

Module generation is not tested directly.  Instead a basis must pass four
elementary exact checks: every column is a syzygy, the leading vectors are
independent, the degrees sum to ``deg a - deg gcd(a)``, and the signed
maximal minors are proportional to ``a / gcd(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Raw
from .errors import DimensionError, InternalContradictionError
from .hhk import MuBasisMatrix, compute_mu_basis
from .linalg import rank
from .poly import MINUS_INFINITY, InputVector, Polynomial, PolyVector, dot, euclid_gcd, long_division


@dataclass(frozen=True)
class Report:
    name: str
    passed: bool
    detail: str = ""

    def __bool__(self):
        return self.passed

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{self.name}: {status}" + (f" ({self.detail})" if self.detail else "")


def _conform(a: InputVector, M: MuBasisMatrix) -> None:
    if M.n != len(a):
        raise DimensionError(f"basis rows ({M.n}) do not match input length ({len(a)})")
    if M.field != a.field:
        raise DimensionError(f"basis over {M.field}, input over {a.field}")


def check_syzygies(a: InputVector, M: MuBasisMatrix) -> Report:
    _conform(a, M)
    for j, col in enumerate(M, start=1):
        if not dot(a, col).is_zero():
            return Report("syzygy", False, f"a * column {j} != 0")
    return Report("syzygy", True)


def check_lv_independence(M: MuBasisMatrix) -> Report:
    want = M.n - 1
    if len(M) != want:
        return Report("lv-independence", False, f"{len(M)} columns, expected {want}")
    lvs = []
    for j, col in enumerate(M, start=1):
        if col.is_zero():
            return Report("lv-independence", False, f"column {j} is zero")
        lvs.append(col.leading_vector)
    got = rank(M.field, lvs)
    if got != want:
        return Report("lv-independence", False, f"rank {got}, expected {want}")
    return Report("lv-independence", True)


def check_degree_sum(a: InputVector, M: MuBasisMatrix) -> Report:
    _conform(a, M)
    degs = M.degrees
    if any(d is MINUS_INFINITY for d in degs):
        return Report("degree-sum", False, "zero column")
    want = a.degree - euclid_gcd(a).degree
    got = sum(degs)
    return Report("degree-sum", got == want, f"sum {got}, expected {want}")


def determinant(rows: list[list[Polynomial]]) -> Polynomial:
    """Determinant over K[s] by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    size = len(m)
    if size == 0:
        raise DimensionError("empty matrix")
    field = m[0][0].field
    if any(len(r) != size for r in m):
        raise DimensionError("determinant of a non-square matrix")
    sign = 1
    prev = Polynomial.constant(field, 1)
    for k in range(size - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, size) if not m[i][k].is_zero()), None)
            if swap is None:
                return Polynomial.zero(field)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = pivot * m[i][j] - m[i][k] * m[k][j]
                q, r = long_division(num, prev)
                if not r.is_zero():
                    raise InternalContradictionError("inexact Bareiss division")
                m[i][j] = q
        prev = pivot
    det = m[-1][-1]
    return -det if sign < 0 else det


def outer_product(M: MuBasisMatrix) -> PolyVector:
    """Signed maximal minors ``h_i = (-1)**i det(M without row i)``, ``i`` 1-based."""
    n, cols = M.shape
    if cols != n - 1:
        raise DimensionError(f"expected an n x (n-1) matrix, got {n} x {cols}")
    rows = M.rows()
    if n == 1:
        raise DimensionError("outer product needs n >= 2")
    h = []
    for i in range(n):
        minor = determinant(rows[:i] + rows[i + 1:])
        h.append(-minor if (i + 1) % 2 else minor)
    return PolyVector(h, M.field)


def check_outer_product(a: InputVector, M: MuBasisMatrix) -> Report:
    """``a == alpha * gcd(a) * h`` for one nonzero scalar ``alpha``, recovered."""
    _conform(a, M)
    name = "outer-product"
    h = outer_product(M)
    if h.is_zero():
        return Report(name, False, "outer product is zero")
    f = a.field
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if a[i] * h[j] != a[j] * h[i]:
                return Report(name, False, f"a_{i + 1} h_{j + 1} != a_{j + 1} h_{i + 1}")
    g = euclid_gcd(a)
    gh = [g * x for x in h]
    i0 = next((i for i in range(len(a)) if not a[i].is_zero()), None)
    if i0 is None or gh[i0].is_zero():
        return Report(name, False, "no index with a_i and h_i both nonzero")
    alpha: Raw = f.div(a[i0].leading_coefficient, gh[i0].leading_coefficient)
    for i in range(len(a)):
        if a[i] != gh[i].scale(alpha):
            return Report(name, False, f"a_{i + 1} != alpha * gcd * h_{i + 1}")
    return Report(name, True, f"alpha = {f.format(alpha)}")


def verify_basis(a: InputVector, M: MuBasisMatrix) -> list[Report]:
    """All four checks, in a fixed order."""
    return [
        check_syzygies(a, M),
        check_lv_independence(M),
        check_degree_sum(a, M),
        check_outer_product(a, M),
    ]


def gcd_via_mubasis(a: InputVector) -> Polynomial:
    """Monic gcd of ``a`` as the quotient ``a_i / h_i`` for the outer product ``h``."""
    M = compute_mu_basis(a)
    h = outer_product(M)
    i = next((i for i in range(len(a)) if not a[i].is_zero() and not h[i].is_zero()), None)
    if i is None:
        raise InternalContradictionError("outer product vanishes wherever a is nonzero")
    q, r = long_division(a[i], h[i])
    if not r.is_zero():
        raise InternalContradictionError(f"h_{i + 1} does not divide a_{i + 1}")
    return q.monic()
