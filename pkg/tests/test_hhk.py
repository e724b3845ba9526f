import random
import time
from fractions import Fraction

import pytest

from mubasis.arith import QQ, GF
from mubasis.errors import DimensionError, InternalContradictionError
from mubasis.hhk import (
    MuBasisMatrix,
    backward_normalize,
    compute_mu_basis,
    compute_mu_basis_traced,
    extract_mu_basis,
    forward_eliminate,
    predict_degrees,
)
from mubasis.poly import Polynomial, PolyVector, dot, euclid_gcd, long_division
from mubasis.structmat import CoeffMatrix, build_A

from .checks import classification_failures, hhk_property_failures
from .conftest import random_vector, random_with_gcd, vec
from .oracles import full_rref

F3, F5 = GF(3), GF(5)

RUNNING_M = MuBasisMatrix.from_entries(QQ, [
    [[0, -1], [1, -2, -2, -1]],
    [[1], [2, 2, 1, 1]],
    [[-1, 1], [-3]],
])


def test_running_example_golden(running):
    t0 = time.perf_counter()
    M, ws = compute_mu_basis_traced(running)
    assert time.perf_counter() - t0 < 0.1
    assert M == RUNNING_M
    assert M.degrees == [1, 3]
    assert ws.pivots == [1, 2, 3, 4, 5, 7, 8, 10]
    assert ws.basic_nonpivots == [6, 11]
    assert ws.periodic == [9]
    assert ws.op_log == [(3, -1, 1), (5, -1, 1), (3, 2), (4, 1, 2), (4, 3), (6, -1, 4), (7, 6)]


def test_running_example_final_columns(running):
    _, ws = compute_mu_basis_traced(running)
    assert ws.column(11) == [-1, -2, 3, 2, -2, 2, -1, 1, 0]
    assert ws.column(6) == [0, -1, 1, 1, 0, 0, 0, 0, 0]
    assert ws.column(1)[:8] == [1, 0, 0, 0, 0, 0, 0, 0]
    with pytest.raises(KeyError):
        ws.column(9)


def test_entry_reads_matrix(running):
    M = compute_mu_basis(running)
    assert M.shape == (3, 2)
    assert M.entry(3, 1) == Polynomial(QQ, [-1, 1])
    assert M.rows()[1] == [Polynomial(QQ, [1]), Polynomial(QQ, [2, 2, 1, 1])]


def test_smallest_input():
    M, ws = compute_mu_basis_traced(vec(QQ, [1], [1]))
    assert ws.pivots == [1] and ws.basic_nonpivots == [2]
    assert M == MuBasisMatrix.from_entries(QQ, [[[-1]], [[1]]])


def test_pivots_match_full_elimination_small():
    a = vec(QQ, [0, 1], [1])
    _, ws = compute_mu_basis_traced(a)
    _, oracle = full_rref(build_A(a).to_lists())
    last = ws.basic_nonpivots[-1]
    assert ws.pivots == [j for j in oracle if j <= last]
    assert classification_failures(a, ws) == []


def test_swap_is_logged_and_applied():
    # column 1 is zero in row 1, so the first pivot needs a swap
    a = vec(F5, [0, 1], [1, 1], [0, 0, 1])
    M, ws = compute_mu_basis_traced(a)
    assert any(len(op) == 2 for op in ws.op_log)
    assert all(dot(a, u).is_zero() for u in M)


@pytest.mark.parametrize("seed", range(25))
def test_normalized_columns_reconstruct_originals(seed):
    rng = random.Random(seed)
    field = QQ if seed % 2 else F5
    a = random_vector(rng, field, rng.randint(2, 5), rng.randint(1, 5))
    A = build_A(a)
    ws = backward_normalize(forward_eliminate(A))
    for q in ws.basic_nonpivots:
        combo = [field.zero] * A.rows
        for i, pcol in enumerate(ws.pivots):
            if pcol > q:
                continue
            alpha = ws.entry(i + 1, q)
            combo = [field.add(x, field.mul(alpha, y)) for x, y in zip(combo, A.column(pcol))]
        assert combo == A.column(q)
    for i, pcol in enumerate(ws.pivots):
        col = ws.column(pcol)
        assert col[i] == 1 and all(x == 0 for k, x in enumerate(col[: len(ws.pivots)]) if k != i)


def test_backward_normalize_is_idempotent(running):
    ws = backward_normalize(forward_eliminate(build_A(running)))
    before = {j: list(c) for j, c in ws.columns.items()}
    backward_normalize(ws)
    assert ws.columns == before


def test_extraction_requires_normalization(running):
    ws = forward_eliminate(build_A(running))
    with pytest.raises(InternalContradictionError):
        extract_mu_basis(ws)


def test_block_width_mismatch(running):
    with pytest.raises(DimensionError):
        forward_eliminate(build_A(running), 4)


def test_nontrivial_gcd_example():
    a = vec(QQ, [1, 1], [0, 1, 1])
    M = compute_mu_basis(a)
    assert len(M) == 1
    # [-s, 1] normalised so the leading vector ends in 1
    assert M == MuBasisMatrix.from_entries(QQ, [[[0, 1]], [[-1]]])
    assert M.degrees == [1]


@pytest.mark.parametrize("seed", range(30))
def test_two_entries_match_obvious_syzygy(seed):
    rng = random.Random(seed)
    field = QQ if seed % 2 else F5
    a, _ = random_with_gcd(rng, field, 2, rng.randint(2, 6), rng.randint(0, 2))
    (u,) = compute_mu_basis(a)
    g = euclid_gcd(a)
    want = PolyVector([-long_division(a[1], g)[0], long_division(a[0], g)[0]], field)
    # same up to a nonzero scalar
    c = next(x for x in u.leading_vector if x)
    w = next(x for x in want.leading_vector if x)
    assert want.scale(field.div(c, w)) == u


def test_predict_degrees():
    assert predict_degrees([6, 11], 3) == [1, 3]
    assert predict_degrees([2], 2) == [0]
    for n in range(2, 9):
        assert predict_degrees([n], n) == [0]


@pytest.mark.parametrize("field", [QQ, F5], ids=["QQ", "F5"])
def test_invariants_random(field):
    rng = random.Random(11)
    for _ in range(40):
        n, d = rng.randint(2, 6), rng.randint(1, 7)
        gdeg = rng.randint(0, min(2, d))
        a, _ = random_with_gcd(rng, field, n, d, gdeg)
        M, ws = compute_mu_basis_traced(a)
        assert hhk_property_failures(a, M, ws) == []
        assert len(set((q - 1) % n for q in ws.basic_nonpivots)) == n - 1
        assert len(ws.pivots) <= 2 * a.degree + 1


def test_classification_against_full_elimination_f3():
    rng = random.Random(3)
    for _ in range(150):
        n, d = rng.randint(2, 4), rng.randint(1, 4)
        a = random_vector(rng, F3, n, d)
        _, ws = compute_mu_basis_traced(a)
        assert classification_failures(a, ws) == []


def test_deterministic(running):
    assert compute_mu_basis(running) == compute_mu_basis(running)
    _, w1 = compute_mu_basis_traced(running)
    _, w2 = compute_mu_basis_traced(running)
    assert w1.op_log == w2.op_log


def test_rational_entries():
    a = vec(QQ, [Fraction(1, 2), 0, 3], [Fraction(-2, 7), 1], [5, Fraction(1, 3)])
    M, ws = compute_mu_basis_traced(a)
    assert hhk_property_failures(a, M, ws) == []


class _LyingMatrix(CoeffMatrix):
    @property
    def rows(self):
        return len(self.data)


def test_exhausted_columns_raise():
    # a full-rank 2x2 matrix has no dependent column, which a real input never allows
    A = _LyingMatrix(QQ, 2, 0, ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))))
    with pytest.raises(InternalContradictionError):
        forward_eliminate(A)
