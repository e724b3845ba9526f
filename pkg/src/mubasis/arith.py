"""Exact scalar arithmetic over the rationals and prime fields.

A :class:`Field` does arithmetic on *raw* values: ``fractions.Fraction`` for
the rationals and ``int`` residues in ``[0, p)`` for a prime field.  Hot loops
elsewhere in the package work on raw values directly; :class:`FieldScalar`
wraps a raw value together with its field for the checked public API.
"""

from __future__ import annotations

from random import Random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import FieldMismatchError

Raw = Union[int, Fraction]

# Largest modulus accepted for a prime field (fits a signed machine word).
MAX_MODULUS = 2**63 - 1

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _SMALL_PRIMES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``modulus=None``) or the prime field of order ``modulus``."""

    modulus: int | None = None

    def __post_init__(self):
        p = self.modulus
        if p is None:
            return
        if isinstance(p, bool) or not isinstance(p, int):
            raise TypeError(f"modulus must be an int, got {type(p).__name__}")
        if p > MAX_MODULUS:
            raise ValueError(f"modulus {p} does not fit in a machine word")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")

    @property
    def kind(self) -> str:
        return "Rationals" if self.modulus is None else "PrimeField"

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is not None

    def __str__(self):
        return "QQ" if self.modulus is None else f"GF({self.modulus})"

    def __repr__(self):
        return str(self)

    # -- raw arithmetic -------------------------------------------------

    @property
    def zero(self) -> Raw:
        return 0 if self.modulus else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.modulus else Fraction(1)

    def coerce(self, value) -> Raw:
        """Canonical raw value for an int, Fraction or FieldScalar."""
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatchError(f"{value.field} scalar used in {self}")
            return value.value
        p = self.modulus
        if p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def reduce(self, value: Raw) -> Raw:
        return value % self.modulus if self.modulus else value

    def add(self, x: Raw, y: Raw) -> Raw:
        return (x + y) % self.modulus if self.modulus else x + y

    def sub(self, x: Raw, y: Raw) -> Raw:
        return (x - y) % self.modulus if self.modulus else x - y

    def mul(self, x: Raw, y: Raw) -> Raw:
        return x * y % self.modulus if self.modulus else x * y

    def neg(self, x: Raw) -> Raw:
        return -x % self.modulus if self.modulus else -x

    def inv(self, x: Raw) -> Raw:
        if x == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        p = self.modulus
        if p is None:
            return 1 / x
        return _modinv(x, p)

    def div(self, x: Raw, y: Raw) -> Raw:
        return self.mul(x, self.inv(y))

    # -- text and sampling ----------------------------------------------

    def parse(self, text: str) -> Raw:
        """Parse ``a/b`` or ``a`` (rationals) or a decimal integer (prime field)."""
        text = text.strip()
        if self.modulus is None:
            num, sep, den = text.partition("/")
            if sep and not den:
                raise ValueError(f"malformed rational {text!r}")
            value = Fraction(int(num), int(den)) if sep else Fraction(int(num))
            return value
        if "/" in text:
            raise ValueError(f"fractions are not allowed in {self}: {text!r}")
        return int(text) % self.modulus

    def format(self, x: Raw) -> str:
        return str(x)

    def random(self, rng: Random, bound: int = 9) -> Raw:
        """Uniform residue (prime field) or uniform integer in [-bound, bound]."""
        if self.modulus:
            return rng.randrange(self.modulus)
        return Fraction(rng.randint(-bound, bound))

    def __call__(self, value) -> FieldScalar:
        return FieldScalar(self, value)


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def _modinv(x: int, p: int) -> int:
    # extended Euclid
    r0, r1, s0, s1 = p, x % p, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise ZeroDivisionError(f"{x} is not invertible mod {p}")
    return s0 % p


class FieldScalar:
    """An immutable field element tagged with its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.coerce(value))

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    def _other(self, other) -> Raw:
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return FieldScalar(self.field, self.field.add(self.value, y))

    __radd__ = __add__

    def __sub__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return FieldScalar(self.field, self.field.sub(self.value, y))

    def __rsub__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return FieldScalar(self.field, self.field.sub(y, self.value))

    def __mul__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return FieldScalar(self.field, self.field.mul(self.value, y))

    __rmul__ = __mul__

    def __truediv__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return FieldScalar(self.field, self.field.div(self.value, y))

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.value))

    def inverse(self) -> FieldScalar:
        return FieldScalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.coerce(other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.field}({self.value})"

    def __str__(self):
        return self.field.format(self.value)


def _check(x: FieldScalar, y: FieldScalar) -> None:
    if x.field != y.field:
        raise FieldMismatchError(f"cannot combine {x.field} and {y.field}")


def add(x: FieldScalar, y: FieldScalar) -> FieldScalar:
    _check(x, y)
    return FieldScalar(x.field, x.field.add(x.value, y.value))


def mul(x: FieldScalar, y: FieldScalar) -> FieldScalar:
    _check(x, y)
    return FieldScalar(x.field, x.field.mul(x.value, y.value))


def neg(x: FieldScalar) -> FieldScalar:
    return FieldScalar(x.field, x.field.neg(x.value))


def inv(x: FieldScalar) -> FieldScalar:
    return FieldScalar(x.field, x.field.inv(x.value))
