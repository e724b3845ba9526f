"""Timing harness: partial row-echelon (hhk) vs Song-Goldman (sg) over a (d, n) grid.

Inputs are drawn from ``random.Random`` seeded with the string
``"{seed}:{d}:{n}"``; string seeds are hashed with SHA-512 by the standard
library, so the same configuration produces the same inputs on every
platform.  Each algorithm runs in a forked child process so that a run
exceeding the timeout can be cut off.  Rows are ``d,n,algorithm,mean_seconds,status``
with status ``ok``, ``timeout``, ``invalid`` (output failed the syzygy
check) or ``error``.
"""

from __future__ import annotations

import csv
import io
import logging
import multiprocessing as mp
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .arith import Field
from .hhk import MuBasisMatrix, compute_mu_basis
from .poly import InputVector, Polynomial
from .sg import sg_mu_basis
from .verify import check_syzygies

log = logging.getLogger(__name__)

ALGORITHMS: dict[str, Callable[[InputVector], MuBasisMatrix]] = {
    "hhk": compute_mu_basis,
    "sg": sg_mu_basis,
}

CSV_HEADER = ("d", "n", "algorithm", "mean_seconds", "status")


@dataclass
class BenchConfig:
    field: Field = field(default_factory=lambda: Field(5))
    d_values: Sequence[int] = (3, 5)
    n_values: Sequence[int] = (3, 5)
    seed: int = 0
    repetitions: int = 3
    timeout_seconds: float | None = 120.0
    algorithms: Sequence[str] = ("hhk", "sg")
    verify: bool = True

    def __post_init__(self):
        if any(d < 1 for d in self.d_values):
            raise ValueError("all d must be >= 1")
        if any(n < 2 for n in self.n_values):
            raise ValueError("all n must be >= 2")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise ValueError(f"unknown algorithms: {sorted(unknown)}")


@dataclass(frozen=True)
class BenchRow:
    d: int
    n: int
    algorithm: str
    mean_seconds: float | None
    status: str

    def as_csv(self) -> list[str]:
        t = "" if self.mean_seconds is None else f"{self.mean_seconds:.6f}"
        return [str(self.d), str(self.n), self.algorithm, t, self.status]


def random_input(n: int, d: int, field: Field, rng: random.Random) -> InputVector:
    """``n`` polynomials with uniform coefficients, resampled until the degree is exactly ``d``."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    while True:
        rows = [[field.random(rng) for _ in range(d + 1)] for _ in range(n)]
        if any(r[d] != 0 for r in rows):
            return InputVector([Polynomial._raw(field, r) for r in rows], field)


def cell_rng(seed: int, d: int, n: int) -> random.Random:
    return random.Random(f"{seed}:{d}:{n}")


def cell_input(cfg: BenchConfig, d: int, n: int) -> InputVector:
    return random_input(n, d, cfg.field, cell_rng(cfg.seed, d, n))


def _child(conn, algorithm: str, a: InputVector, reps: int, verify: bool) -> None:
    fn = ALGORITHMS[algorithm]
    try:
        for _ in range(reps):
            t0 = time.perf_counter()
            M = fn(a)
            conn.send(("time", time.perf_counter() - t0))
        ok = check_syzygies(a, M).passed if verify else True
        conn.send(("done", ok))
    except Exception as exc:  # reported to the parent as status=error
        conn.send(("error", repr(exc)))
    finally:
        conn.close()


def time_cell(algorithm: str, a: InputVector, reps: int, timeout: float | None,
              verify: bool = True) -> tuple[float | None, str]:
    """Mean seconds over ``reps`` runs, each cut off after ``timeout`` seconds."""
    ctx = mp.get_context("fork")
    parent, child = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_child, args=(child, algorithm, a, reps, verify), daemon=True)
    proc.start()
    child.close()
    times: list[float] = []
    status = "error"
    try:
        while True:
            # one poll per repetition; the final verification gets the same budget
            if not parent.poll(timeout):
                status = "timeout"
                break
            try:
                kind, value = parent.recv()
            except EOFError:
                break
            if kind == "time":
                times.append(value)
            elif kind == "done":
                status = "ok" if value else "invalid"
                break
            else:
                log.warning("%s failed: %s", algorithm, value)
                break
    finally:
        if proc.is_alive():
            proc.terminate()
        proc.join()
        parent.close()
    if status == "timeout":
        return None, status
    mean = sum(times) / len(times) if times else None
    return mean, status


def run_grid(cfg: BenchConfig) -> list[BenchRow]:
    rows = []
    for d in cfg.d_values:
        for n in cfg.n_values:
            a = cell_input(cfg, d, n)
            for alg in cfg.algorithms:
                mean, status = time_cell(alg, a, cfg.repetitions, cfg.timeout_seconds, cfg.verify)
                log.info("d=%d n=%d %s: %s %s", d, n, alg, status, mean)
                rows.append(BenchRow(d, n, alg, mean, status))
    return rows


def write_csv(rows: Iterable[BenchRow], out: io.TextIOBase) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        w.writerow(row.as_csv())
