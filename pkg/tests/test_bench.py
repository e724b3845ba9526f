import io
import random
from collections import Counter

import pytest

from mubasis.arith import QQ, GF
from mubasis.bench import (
    CSV_HEADER,
    BenchConfig,
    BenchRow,
    cell_input,
    random_input,
    run_grid,
    time_cell,
    write_csv,
)
from mubasis.hhk import compute_mu_basis
from mubasis.poly import PolyVector, dot

F5 = GF(5)


def test_random_input_is_reproducible():
    a = random_input(3, 4, F5, random.Random("7:4:3"))
    b = random_input(3, 4, F5, random.Random("7:4:3"))
    assert a == b
    cfg = BenchConfig(seed=7)
    assert cell_input(cfg, 4, 3) == a
    assert cell_input(BenchConfig(seed=8), 4, 3) != a


def test_random_input_has_exact_degree():
    rng = random.Random(0)
    for _ in range(200):
        n, d = rng.randint(2, 6), rng.randint(1, 8)
        a = random_input(n, d, F5, rng)
        assert a.degree == d and len(a) == n
    assert random_input(2, 3, QQ, rng).degree == 3


def test_random_input_preconditions():
    with pytest.raises(ValueError):
        random_input(1, 3, F5, random.Random(0))
    with pytest.raises(ValueError):
        random_input(3, 0, F5, random.Random(0))


def test_coefficients_look_uniform():
    rng = random.Random(99)
    counts = Counter()
    for _ in range(1000):
        a = random_input(3, 4, F5, rng)
        for p in a:
            # the top coefficient is conditioned on the resampling, so leave it out
            counts.update(p.coeff(k) for k in range(4))
    total = sum(counts.values())
    expected = total / 5
    chi2 = sum((counts[v] - expected) ** 2 / expected for v in range(5))
    assert chi2 < 20.0  # 4 degrees of freedom; p ~ 0.0005


def test_config_validation():
    for bad in (dict(d_values=[0]), dict(n_values=[1]), dict(repetitions=0), dict(algorithms=["x"])):
        with pytest.raises(ValueError):
            BenchConfig(**bad)
    assert BenchConfig().field == F5


def test_tiny_grid():
    cfg = BenchConfig(d_values=[3, 5], n_values=[3, 5], repetitions=1)
    rows = run_grid(cfg)
    assert len(rows) == 2 * 2 * 2
    assert all(r.status == "ok" and r.mean_seconds >= 0 for r in rows)
    assert [(r.d, r.n, r.algorithm) for r in rows[:2]] == [(3, 3, "hhk"), (3, 3, "sg")]


def test_same_seed_same_outputs():
    cfg = BenchConfig(d_values=[4], n_values=[4], seed=12)
    a1, a2 = cell_input(cfg, 4, 4), cell_input(cfg, 4, 4)
    assert compute_mu_basis(a1) == compute_mu_basis(a2)
    M = compute_mu_basis(a1)
    assert all(dot(a1, u).is_zero() for u in M)


def test_csv_layout():
    out = io.StringIO()
    write_csv([BenchRow(3, 4, "hhk", 0.25, "ok"), BenchRow(3, 4, "sg", None, "timeout")], out)
    assert out.getvalue() == ",".join(CSV_HEADER) + "\n3,4,hhk,0.250000,ok\n3,4,sg,,timeout\n"


def test_timeout_is_recorded():
    a = cell_input(BenchConfig(), 10, 30)
    mean, status = time_cell("sg", a, 1, 0.05)
    assert (mean, status) == (None, "timeout")


def test_errors_are_recorded(monkeypatch):
    from mubasis import bench

    def boom(a):
        raise RuntimeError("no")

    monkeypatch.setitem(bench.ALGORITHMS, "hhk", boom)
    a = cell_input(BenchConfig(), 3, 3)
    assert time_cell("hhk", a, 1, 5.0)[1] == "error"


def test_invalid_output_is_flagged(monkeypatch):
    from mubasis import bench

    def wrong(a):
        M = compute_mu_basis(a)
        bump = PolyVector.from_coeffs(M.field, [[1]] + [[]] * (M.n - 1))
        return type(M)(M.field, tuple(u + bump for u in M))

    monkeypatch.setitem(bench.ALGORITHMS, "hhk", wrong)
    a = cell_input(BenchConfig(), 3, 3)
    assert time_cell("hhk", a, 1, 5.0)[1] == "invalid"


@pytest.mark.slow
def test_hhk_time_grows_with_degree():
    rows = run_grid(BenchConfig(d_values=[10, 80], n_values=[5], repetitions=3,
                                algorithms=["hhk"]))
    t10, t80 = (r.mean_seconds for r in rows)
    assert t80 >= t10


@pytest.mark.slow
def test_sg_competitive_for_high_degree_few_entries():
    rows = run_grid(BenchConfig(d_values=[150], n_values=[4], repetitions=1, timeout_seconds=120))
    t = {r.algorithm: r.mean_seconds for r in rows}
    assert all(r.status == "ok" for r in rows)
    assert t["sg"] <= 2 * t["hhk"]
