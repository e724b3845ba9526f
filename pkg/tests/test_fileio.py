import random
from pathlib import Path

import pytest

from mubasis.arith import QQ, GF
from mubasis.fileio import (
    ParseError,
    format_basis,
    format_poly,
    format_vector,
    parse_basis,
    parse_vector,
    read_basis,
    read_vector,
)
from mubasis.hhk import compute_mu_basis
from mubasis.poly import Polynomial

from .conftest import random_vector, vec

FIXTURES = Path(__file__).parent / "fixtures"
F5 = GF(5)


def test_reads_running_example(running):
    assert read_vector(FIXTURES / "running.txt") == running
    M = read_basis(FIXTURES / "running_basis.txt")
    assert M.degrees == [1, 3]
    assert M == compute_mu_basis(running)


def test_writer_output_is_canonical(running):
    text = format_basis(compute_mu_basis(running))
    assert text == (FIXTURES / "running_basis.txt").read_text()
    assert format_vector(running) == "field q\nn 3\n1 0 1 0 1\n1 0 0 1 1\n1 0 0 0 1\n"


def test_format_poly():
    assert format_poly(Polynomial.zero(QQ)) == "0"
    assert format_poly(Polynomial(QQ, [QQ.parse("-1/2"), 3])) == "-1/2 3"
    assert format_poly(Polynomial(F5, [4, 0, 1])) == "4 0 1"


@pytest.mark.parametrize("field", [QQ, F5], ids=["QQ", "F5"])
def test_round_trip(field):
    rng = random.Random(13)
    for _ in range(50):
        a = random_vector(rng, field, rng.randint(2, 6), rng.randint(0, 6))
        assert parse_vector(format_vector(a)) == a
        M = compute_mu_basis(a)
        assert parse_basis(format_basis(M)) == M
        text = format_basis(M)
        assert format_basis(parse_basis(text)) == text


def test_comments_blank_lines_and_tabs():
    v = parse_vector("# header\n\nfield fp 7\n  n 2\n1\t2\n# mid\n\n3 4 8\n")
    assert v.field == GF(7)
    assert v == vec(GF(7), [1, 2], [3, 4, 1])


def test_fp_residues_are_reduced():
    assert parse_vector("field fp 5\nn 2\n5 6\n-1\n") == vec(F5, [0, 1], [4])


def test_malformed_coefficient_location():
    with pytest.raises(ParseError) as exc:
        read_vector(FIXTURES / "malformed.txt")
    assert (exc.value.line, exc.value.column) == (3, 3)
    assert "line 3, column 3" in str(exc.value)


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("field r\nn 2\n1\n1\n", 1),
        ("field fp 6\nn 2\n1\n1\n", 1),
        ("field q\n", 2),
        ("field q\nm 2\n1\n1\n", 2),
        ("field q\nn two\n1\n1\n", 2),
        ("field q\nn 0\n", 2),
        ("field fp 5\nn 2\n1/2\n1\n", 3),
        ("field q\nn 2\n1 x\n1\n", 3),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_vector(text)
    assert exc.value.line == line


def test_wrong_line_counts():
    with pytest.raises(ParseError):
        parse_vector("field q\nn 3\n1\n1\n")
    with pytest.raises(ParseError):
        parse_basis("field q\nn 3\n1\n1\n1\n1\n")
    with pytest.raises(ParseError):
        parse_basis("field q\nn 3\n")
