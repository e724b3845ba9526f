"""Plain-text polynomial vector files.

::

    # comments start with '#'
    field q            (or: field fp 5)
    n 3
    1 0 1 0 1          one line per entry, ascending-degree coefficients
    1 0 0 1 1
    1 0 0 0 1

A basis file has the same header followed by ``n`` lines per column; the
writer precedes each block with ``# column j, degree mu_j``.  Blank lines
are ignored, so the zero polynomial is written as ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .arith import Field
from .errors import MuBasisError
from .hhk import MuBasisMatrix
from .poly import MINUS_INFINITY, Polynomial, PolyVector


class ParseError(MuBasisError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class PolyFile:
    field: Field
    n: int
    polys: list[Polynomial]


def _tokens(text: str):
    """Yield (token, 1-based column) pairs."""
    col = 0
    for part in text.split(" "):
        if part:
            yield part, col + 1
        col += len(part) + 1


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.replace("\t", " ").rstrip()
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line


def parse_text(text: str) -> PolyFile:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty file: expected a 'field' line", 1)

    lineno, line = lines[0]
    toks = list(_tokens(line))
    if toks[0][0] != "field":
        raise ParseError("expected 'field q' or 'field fp <p>'", lineno, toks[0][1])
    if len(toks) == 2 and toks[1][0] == "q":
        field = Field()
    elif len(toks) == 3 and toks[1][0] == "fp":
        try:
            field = Field(int(toks[2][0]))
        except ValueError as exc:
            raise ParseError(f"bad modulus: {exc}", lineno, toks[2][1]) from None
    else:
        raise ParseError("expected 'field q' or 'field fp <p>'", lineno, toks[-1][1])

    if len(lines) < 2:
        raise ParseError("missing 'n <count>' line", lineno + 1)
    lineno, line = lines[1]
    toks = list(_tokens(line))
    if len(toks) != 2 or toks[0][0] != "n":
        raise ParseError("expected 'n <count>'", lineno, toks[0][1])
    try:
        n = int(toks[1][0])
    except ValueError:
        raise ParseError(f"bad count {toks[1][0]!r}", lineno, toks[1][1]) from None
    if n < 1:
        raise ParseError("n must be positive", lineno, toks[1][1])

    polys = []
    for lineno, line in lines[2:]:
        coeffs = []
        for tok, col in _tokens(line):
            try:
                coeffs.append(field.parse(tok))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad coefficient {tok!r} for {field}", lineno, col) from None
        polys.append(Polynomial._raw(field, coeffs))
    return PolyFile(field, n, polys)


def _check_vector(pf: PolyFile, end_line: int) -> PolyVector:
    if len(pf.polys) != pf.n:
        raise ParseError(f"expected {pf.n} coefficient lines, found {len(pf.polys)}", end_line)
    return PolyVector(pf.polys, pf.field)


def parse_vector(text: str) -> PolyVector:
    pf = parse_text(text)
    return _check_vector(pf, len(text.splitlines()) or 1)


def parse_basis(text: str) -> MuBasisMatrix:
    pf = parse_text(text)
    count = len(pf.polys)
    if count == 0 or count % pf.n:
        raise ParseError(
            f"expected a positive multiple of {pf.n} coefficient lines, found {count}",
            len(text.splitlines()) or 1,
        )
    cols = [
        PolyVector(pf.polys[k:k + pf.n], pf.field) for k in range(0, count, pf.n)
    ]
    return MuBasisMatrix(pf.field, tuple(cols))


def read_vector(path: str | Path) -> PolyVector:
    return parse_vector(Path(path).read_text())


def read_basis(path: str | Path) -> MuBasisMatrix:
    return parse_basis(Path(path).read_text())


def field_header(field: Field) -> str:
    return "field q" if field.modulus is None else f"field fp {field.modulus}"


def format_poly(poly: Polynomial) -> str:
    if poly.is_zero():
        return "0"
    return " ".join(poly.field.format(c) for c in poly.coeffs)


def format_vector(v: PolyVector) -> str:
    lines = [field_header(v.field), f"n {len(v)}"]
    lines += [format_poly(p) for p in v]
    return "\n".join(lines) + "\n"


def format_basis(M: MuBasisMatrix) -> str:
    lines = [field_header(M.field), f"n {M.n}"]
    for j, col in enumerate(M, start=1):
        deg = col.degree
        lines.append(f"# column {j}, degree {'-inf' if deg is MINUS_INFINITY else deg}")
        lines += [format_poly(p) for p in col]
    return "\n".join(lines) + "\n"
