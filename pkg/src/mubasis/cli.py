"""Command line entry point: ``mubasis {compute,verify,gcd,bench}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bench, fileio
from .arith import Field
from .errors import MuBasisError
from .hhk import compute_mu_basis
from .poly import InputVector, euclid_gcd, pretty
from .sg import sg_mu_basis
from .verify import gcd_via_mubasis, verify_basis

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _load_input(path: str) -> InputVector:
    try:
        v = fileio.read_vector(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except MuBasisError as exc:
        raise InputError(f"{path}: {exc}") from None
    if len(v) < 2:
        raise InputError(f"{path}: need n > 1, got n = {len(v)}")
    if v.is_zero():
        raise InputError(f"{path}: input vector must be nonzero")
    return InputVector(v.entries, v.field)


def _emit(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def cmd_compute(args) -> int:
    a = _load_input(args.input)
    solver = compute_mu_basis if args.algorithm == "hhk" else sg_mu_basis
    M = solver(a)
    if args.pretty:
        lines = []
        for j, col in enumerate(M, start=1):
            lines.append(f"# column {j}, degree {col.degree}")
            lines += [pretty(p) for p in col]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(fileio.format_basis(M), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    a = _load_input(args.input)
    try:
        M = fileio.read_basis(args.basis)
    except OSError as exc:
        raise InputError(f"{args.basis}: {exc.strerror}") from None
    except MuBasisError as exc:
        raise InputError(f"{args.basis}: {exc}") from None
    if M.field != a.field:
        raise InputError(f"field mismatch: input over {a.field}, basis over {M.field}")
    if M.n != len(a):
        raise InputError(f"basis has {M.n} rows, input has n = {len(a)}")
    reports = verify_basis(a, M)
    for r in reports:
        print(r.line())
    return EXIT_OK if all(reports) else EXIT_FAIL


def cmd_gcd(args) -> int:
    a = _load_input(args.input)
    g = gcd_via_mubasis(a) if args.method == "mubasis" else euclid_gcd(a)
    print(fileio.format_poly(g))
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _field_arg(text: str) -> Field:
    t = text.strip().lower()
    if t == "q":
        return Field()
    if t.startswith("fp"):
        try:
            return Field(int(t[2:].lstrip(":= ")))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc))
    raise argparse.ArgumentTypeError(f"expected 'q' or 'fp:<p>', got {text!r}")


def _alg_list(text: str) -> list[str]:
    algs = [x.strip() for x in text.split(",") if x.strip()]
    bad = [x for x in algs if x not in bench.ALGORITHMS]
    if bad or not algs:
        raise argparse.ArgumentTypeError(f"algorithms must be drawn from hhk,sg; got {text!r}")
    return algs


def cmd_bench(args) -> int:
    try:
        cfg = bench.BenchConfig(
            field=args.field,
            d_values=args.d_list,
            n_values=args.n_list,
            seed=args.seed,
            repetitions=args.reps,
            timeout_seconds=args.timeout if args.timeout > 0 else None,
            algorithms=args.algorithms,
        )
    except ValueError as exc:
        args.parser.error(str(exc))
    rows = bench.run_grid(cfg)
    if args.out in (None, "-"):
        bench.write_csv(rows, sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            bench.write_csv(rows, fh)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mubasis", description="μ-bases of univariate polynomial vectors")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a μ-basis")
    p.add_argument("input")
    p.add_argument("--algorithm", choices=("hhk", "sg"), default="hhk")
    p.add_argument("--output", "-o", default="-")
    p.add_argument("--pretty", action="store_true", help="print entries as expressions")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check a claimed μ-basis")
    p.add_argument("input")
    p.add_argument("basis")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gcd", help="monic gcd of the input entries")
    p.add_argument("input")
    p.add_argument("--method", choices=("mubasis", "euclid"), default="mubasis")
    p.set_defaults(func=cmd_gcd)

    p = sub.add_parser("bench", help="time the algorithms over a (d, n) grid")
    p.add_argument("--field", type=_field_arg, default=Field(5), help="q or fp:<p> (default fp:5)")
    p.add_argument("--d-list", type=_int_list, default=[3, 5])
    p.add_argument("--n-list", type=_int_list, default=[3, 5])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--timeout", type=float, default=120.0, help="seconds per run; 0 disables")
    p.add_argument("--algorithms", type=_alg_list, default=["hhk", "sg"])
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_bench, parser=p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"mubasis: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
