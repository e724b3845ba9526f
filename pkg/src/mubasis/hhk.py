"""μ-bases by partial reduced row-echelon form of the coefficient matrix.

Pipeline::

    build_A -> forward_eliminate -> backward_normalize -> extract_mu_basis

Forward elimination walks the columns of ``A`` left to right.  Row operations
are logged once, when a pivot is found, and replayed on each later column
just before it is inspected, so columns that are never inspected cost
nothing.  A column whose residue mod ``n`` already produced a non-pivot is
non-pivotal as well (shifting a column by ``n`` shifts its dependency), so
it is skipped outright.  The walk stops once ``n - 1`` basic non-pivots are
known.

All indices reported by this module (columns, rows, entries of ``p`` and
``q̃``, row-op operands) are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .arith import Field, Raw
from .errors import DimensionError, InternalContradictionError
from .poly import InputVector, Polynomial, PolyVector
from .structmat import CoeffMatrix, build_A

# (i, i2): swap rows i and i2; (i, w, i2): row_i += w * row_i2.
RowOp = Union[tuple[int, int], tuple[int, Raw, int]]


@dataclass
class EchelonWorkspace:
    """Mutable state of one partial Gauss-Jordan run.

    ``columns`` holds only the columns that were actually visited (pivots and
    basic non-pivots).  Entries of unvisited columns are never computed.
    """

    A: CoeffMatrix
    columns: dict[int, list[Raw]] = field(default_factory=dict)
    pivots: list[int] = field(default_factory=list)
    basic_nonpivots: list[int] = field(default_factory=list)
    periodic: list[int] = field(default_factory=list)
    blocked_residues: set[int] = field(default_factory=set)
    op_log: list[RowOp] = field(default_factory=list)
    next_pivot_row: int = 1
    normalized: bool = False

    @property
    def field(self) -> Field:
        return self.A.field

    @property
    def n(self) -> int:
        return self.A.block_width

    @property
    def d(self) -> int:
        return self.A.degree

    def column(self, j: int) -> list[Raw]:
        """Current contents of a visited column (1-based)."""
        try:
            return self.columns[j]
        except KeyError:
            raise KeyError(f"column {j} was not visited by the elimination") from None

    def entry(self, i: int, j: int) -> Raw:
        return self.column(j)[i - 1]

    @property
    def done(self) -> bool:
        return len(self.basic_nonpivots) == self.n - 1


def _replay(ops: list[RowOp], col: list[Raw], p: int | None) -> None:
    # specialised per field: this loop dominates the running time
    if p:
        for op in ops:
            if len(op) == 2:
                i, k = op
                col[i - 1], col[k - 1] = col[k - 1], col[i - 1]
            else:
                i, w, k = op
                y = col[k - 1]
                if y:
                    col[i - 1] = (col[i - 1] + w * y) % p
    else:
        for op in ops:
            if len(op) == 2:
                i, k = op
                col[i - 1], col[k - 1] = col[k - 1], col[i - 1]
            else:
                i, w, k = op
                y = col[k - 1]
                if y:
                    col[i - 1] += w * y


def forward_eliminate(A: CoeffMatrix, n: int | None = None) -> EchelonWorkspace:
    """Partial forward elimination; returns a workspace with ``p`` and ``q̃``."""
    if n is not None and n != A.block_width:
        raise DimensionError(f"block width {n} does not match matrix ({A.block_width})")
    n = A.block_width
    ws = EchelonWorkspace(A)
    f = A.field
    p = f.modulus
    rows = A.rows
    ops = ws.op_log

    for j in range(1, A.cols + 1):
        residue = (j - 1) % n
        if residue in ws.blocked_residues:
            ws.periodic.append(j)
            continue
        col = A.column(j)
        _replay(ops, col, p)
        r = ws.next_pivot_row
        src = next((i for i in range(r, rows + 1) if col[i - 1] != 0), None)
        ws.columns[j] = col
        if src is None:
            ws.basic_nonpivots.append(j)
            ws.blocked_residues.add(residue)
            if ws.done:
                return ws
            continue
        new_ops: list[RowOp] = []
        if src != r:
            new_ops.append((src, r))
            col[src - 1], col[r - 1] = col[r - 1], col[src - 1]
        neg_inv = f.neg(f.inv(col[r - 1]))
        for i in range(r + 1, rows + 1):
            x = col[i - 1]
            if x:
                new_ops.append((i, f.mul(x, neg_inv), r))
                col[i - 1] = f.zero
        ops.extend(new_ops)
        ws.pivots.append(j)
        ws.next_pivot_row = r + 1

    raise InternalContradictionError(
        f"found only {len(ws.basic_nonpivots)} basic non-pivots, expected {n - 1}"
    )


def backward_normalize(ws: EchelonWorkspace) -> EchelonWorkspace:
    """Back-substitute and scale pivots to 1, on pivot and basic non-pivot columns only.

    Afterwards ``ws.entry(i, q)`` for a basic non-pivot ``q`` is the
    coefficient of pivot column ``p_i`` in the expansion of column ``q``.
    """
    if ws.normalized:
        return ws
    f = ws.field
    p = f.modulus
    rank = len(ws.pivots)
    sanctioned = sorted(ws.pivots + ws.basic_nonpivots)
    # compact copy: pivot rows only
    R = [[ws.columns[c][i] for c in sanctioned] for i in range(rank)]
    where = {c: k for k, c in enumerate(sanctioned)}

    for i in range(rank - 1, -1, -1):
        ci = where[ws.pivots[i]]
        row_i = R[i]
        scale = f.inv(row_i[ci])
        if scale != 1:
            row_i[ci:] = [f.mul(x, scale) for x in row_i[ci:]]
        tail = [(k, x) for k in range(ci + 1, len(sanctioned)) if (x := row_i[k])]
        for k_row in range(i):
            row_k = R[k_row]
            factor = row_k[ci]
            if not factor:
                continue
            row_k[ci] = f.zero
            if p:
                for k, x in tail:
                    row_k[k] = (row_k[k] - factor * x) % p
            else:
                for k, x in tail:
                    row_k[k] -= factor * x

    for k, c in enumerate(sanctioned):
        col = ws.columns[c]
        for i in range(rank):
            col[i] = R[i][k]
    ws.normalized = True
    return ws


@dataclass(frozen=True)
class MuBasisMatrix:
    """An ``n x (n-1)`` polynomial matrix whose columns are stored as PolyVectors."""

    field: Field
    columns: tuple[PolyVector, ...]

    def __post_init__(self):
        if not self.columns:
            raise DimensionError("a basis matrix needs at least one column")
        n = len(self.columns[0])
        if any(len(c) != n for c in self.columns):
            raise DimensionError("basis columns have different lengths")

    @classmethod
    def from_entries(cls, field: Field, rows: list[list]) -> MuBasisMatrix:
        """From a row-major nested list of Polynomials or coefficient lists."""
        def poly(x):
            return x if isinstance(x, Polynomial) else Polynomial(field, x)
        ncols = len(rows[0])
        cols = [PolyVector([poly(r[j]) for r in rows], field) for j in range(ncols)]
        return cls(field, tuple(cols))

    @property
    def n(self) -> int:
        return len(self.columns[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.n, len(self.columns)

    @property
    def degrees(self) -> list:
        return [c.degree for c in self.columns]

    def entry(self, r: int, j: int) -> Polynomial:
        """Entry at 1-based row ``r``, column ``j``."""
        return self.columns[j - 1][r - 1]

    def rows(self) -> list[list[Polynomial]]:
        return [[c[r] for c in self.columns] for r in range(self.n)]

    def __iter__(self):
        return iter(self.columns)

    def __len__(self):
        return len(self.columns)


def extract_mu_basis(ws: EchelonWorkspace, n: int | None = None, d: int | None = None) -> MuBasisMatrix:
    """Read the syzygies ``flat(e_q - v_q)`` for each basic non-pivot ``q`` off ``E``."""
    if not ws.normalized:
        raise InternalContradictionError("backward_normalize must run before extraction")
    n = ws.n if n is None else n
    f = ws.field
    q_tilde = ws.basic_nonpivots
    if len(q_tilde) != n - 1:
        raise InternalContradictionError(f"{len(q_tilde)} basic non-pivots for n = {n}")
    out = []
    for q in q_tilde:
        top = (q - 1) // n
        coeffs = [[f.zero] * (top + 1) for _ in range(n)]
        coeffs[(q - 1) % n][top] = f.add(coeffs[(q - 1) % n][top], f.one)
        col = ws.columns[q]
        for i, pi in enumerate(ws.pivots):
            if pi > q:
                break
            alpha = col[i]
            if alpha:
                r, k = (pi - 1) % n, (pi - 1) // n
                coeffs[r][k] = f.sub(coeffs[r][k], alpha)
        out.append(PolyVector([Polynomial._raw(f, c) for c in coeffs], f))
    return MuBasisMatrix(f, tuple(out))


def predict_degrees(q_tilde: list[int], n: int) -> list[int]:
    """Degrees ``ceil(q/n) - 1`` of the basis members, known before extraction."""
    return [-(-q // n) - 1 for q in q_tilde]


def compute_mu_basis_traced(a: InputVector) -> tuple[MuBasisMatrix, EchelonWorkspace]:
    """Run the full pipeline, returning the basis and the elimination workspace."""
    A = build_A(a)
    ws = forward_eliminate(A, len(a))
    backward_normalize(ws)
    return extract_mu_basis(ws), ws


def compute_mu_basis(a: InputVector) -> MuBasisMatrix:
    """A μ-basis of the syzygy module of ``a``, columns in increasing degree."""
    return compute_mu_basis_traced(a)[0]
