import random

import pytest

from mubasis.arith import QQ, Field
from mubasis.poly import InputVector, Polynomial

F5 = Field(5)


def vec(field, *rows):
    """InputVector from ascending coefficient lists."""
    return InputVector([Polynomial(field, r) for r in rows], field)


def random_vector(rng, field, n, d):
    """Random input of exact degree d (coefficients in [-3, 3] over QQ)."""
    while True:
        rows = [[field.random(rng, bound=3) for _ in range(d + 1)] for _ in range(n)]
        if any(r[d] != 0 for r in rows):
            return vec(field, *rows)


def random_with_gcd(rng, field, n, d, gdeg):
    """Random input whose gcd is divisible by a random monic factor of degree gdeg."""
    g = Polynomial(field, [field.random(rng, bound=3) for _ in range(gdeg)] + [1])
    base = random_vector(rng, field, n, d - gdeg)
    return InputVector([g * e for e in base], field), g


@pytest.fixture
def running():
    """The running example a = [1+s^2+s^4, 1+s^3+s^4, 1+s^4] over QQ."""
    return vec(QQ, [1, 0, 1, 0, 1], [1, 0, 0, 1, 1], [1, 0, 0, 0, 1])


@pytest.fixture
def rng():
    return random.Random(20240917)
