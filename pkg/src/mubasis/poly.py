"""Dense univariate polynomials and polynomial column vectors over a Field.

Coefficients are raw field values (see :mod:`mubasis.arith`), stored in
ascending degree and always trimmed, so the zero polynomial has no
coefficients at all.  Its degree is :data:`MINUS_INFINITY`, a marker that
orders below every integer but refuses arithmetic.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from .arith import Field, FieldScalar, Raw
from .errors import (
    DimensionError,
    FieldMismatchError,
    InvalidInputError,
    UndefinedLeadingVectorError,
)


class _MinusInfinity:
    """Degree of the zero polynomial."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "MINUS_INFINITY"

    def __reduce__(self):
        return (_MinusInfinity, ())


MINUS_INFINITY = _MinusInfinity()

Degree = Union[int, _MinusInfinity]


def _trim(coeffs: list) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class Polynomial:
    """An immutable polynomial in ``s``; ``coeffs[i]`` is the coefficient of ``s**i``."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        self.field = field
        self.coeffs = _trim([field.coerce(c) for c in coeffs])

    @classmethod
    def _raw(cls, field: Field, coeffs) -> Polynomial:
        # caller guarantees canonical raw values
        poly = cls.__new__(cls)
        poly.field = field
        poly.coeffs = _trim(list(coeffs))
        return poly

    @classmethod
    def zero(cls, field: Field) -> Polynomial:
        return cls._raw(field, ())

    @classmethod
    def constant(cls, field: Field, c) -> Polynomial:
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: Field, k: int, c=1) -> Polynomial:
        return cls(field, [0] * k + [c])

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k: int) -> Raw:
        """Raw coefficient of ``s**k`` (zero beyond the degree)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    @property
    def leading_coefficient(self) -> Raw:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _same_field(self, other: Polynomial) -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._same_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Polynomial._raw(f, out)

    def __neg__(self) -> Polynomial:
        f = self.field
        return Polynomial._raw(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._same_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(f)
        out = [f.zero] * (len(a) + len(b) - 1)
        p = f.modulus
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        if p:
            out = [c % p for c in out]
        return Polynomial._raw(f, out)

    def __rmul__(self, other) -> Polynomial:
        return self.scale(other)

    def scale(self, c) -> Polynomial:
        f = self.field
        c = f.coerce(c)
        if c == 0:
            return Polynomial.zero(f)
        return Polynomial._raw(f, [f.mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> Polynomial:
        """Multiply by ``s**k``."""
        if not self.coeffs or k == 0:
            return self
        return Polynomial._raw(self.field, [self.field.zero] * k + list(self.coeffs))

    def monic(self) -> Polynomial:
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def divmod(self, den: Polynomial) -> tuple[Polynomial, Polynomial]:
        return long_division(self, den)

    def __call__(self, x) -> Raw:
        f = self.field
        x = f.coerce(x)
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Polynomial({self.field}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return pretty(self)


def pretty(poly: Polynomial, var: str = "s") -> str:
    """Human-readable form such as ``1 - 2*s - s^3``."""
    if not poly.coeffs:
        return "0"
    f = poly.field
    terms = []
    for k, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        negative = f.modulus is None and c < 0
        mag = -c if negative else c
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = f.format(mag)
        elif mag == 1:
            body = mono
        else:
            text = f.format(mag)
            body = f"({text})*{mono}" if "/" in text else f"{text}*{mono}"
        terms.append((negative, body))
    first_neg, first = terms[0]
    out = ("-" if first_neg else "") + first
    for negative, body in terms[1:]:
        out += (" - " if negative else " + ") + body
    return out


def long_division(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Return ``(q, r)`` with ``num == q*den + r`` and ``deg r < deg den``."""
    num._same_field(den)
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    f = num.field
    rem = list(num.coeffs)
    dd = len(den.coeffs) - 1
    if len(rem) - 1 < dd:
        return Polynomial.zero(f), num
    lead_inv = f.inv(den.coeffs[-1])
    quo = [f.zero] * (len(rem) - dd)
    dc = den.coeffs
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        q = f.mul(c, lead_inv)
        quo[k - dd] = q
        base = k - dd
        for i, y in enumerate(dc):
            rem[base + i] = f.sub(rem[base + i], f.mul(q, y))
    return Polynomial._raw(f, quo), Polynomial._raw(f, rem[:dd])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd of two polynomials by the Euclidean algorithm (gcd(0, 0) = 0)."""
    while not b.is_zero():
        a, b = b, long_division(a, b)[1]
    return a.monic()


class PolyVector:
    """An immutable column vector of polynomials over one field."""

    __slots__ = ("field", "entries")

    def __init__(self, entries: Sequence[Polynomial], field: Field | None = None):
        entries = tuple(entries)
        if not entries:
            raise DimensionError("a polynomial vector needs at least one entry")
        field = field or entries[0].field
        for e in entries:
            if e.field != field:
                raise FieldMismatchError(f"entry over {e.field} in a {field} vector")
        self.field = field
        self.entries = entries

    @classmethod
    def from_coeffs(cls, field: Field, rows: Sequence[Sequence]) -> PolyVector:
        """Build from per-entry ascending coefficient lists."""
        return cls([Polynomial(field, r) for r in rows], field)

    @classmethod
    def zero(cls, field: Field, n: int) -> PolyVector:
        return cls([Polynomial.zero(field)] * n, field)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def degree(self) -> Degree:
        return max((e.degree for e in self.entries), default=MINUS_INFINITY)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    @property
    def leading_vector(self) -> list[Raw]:
        t = self.degree
        if t is MINUS_INFINITY:
            raise UndefinedLeadingVectorError("the zero vector has no leading vector")
        return [e.coeff(t) for e in self.entries]

    def _conform(self, other: PolyVector) -> None:
        if len(self) != len(other):
            raise DimensionError(f"length {len(self)} vs {len(other)}")
        if self.field != other.field:
            raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")

    def __add__(self, other: PolyVector) -> PolyVector:
        self._conform(other)
        return PolyVector([x + y for x, y in zip(self, other)], self.field)

    def __sub__(self, other: PolyVector) -> PolyVector:
        self._conform(other)
        return PolyVector([x - y for x, y in zip(self, other)], self.field)

    def __neg__(self) -> PolyVector:
        return PolyVector([-x for x in self], self.field)

    def scale(self, c) -> PolyVector:
        if isinstance(c, Polynomial):
            return PolyVector([c * x for x in self], self.field)
        return PolyVector([x.scale(c) for x in self], self.field)

    def shift(self, k: int) -> PolyVector:
        return PolyVector([x.shift(k) for x in self], self.field)

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return f"{type(self).__name__}([{', '.join(map(str, self.entries))}])"


class InputVector(PolyVector):
    """The row vector ``a = [a_1, ..., a_n]`` whose syzygies are sought.

    Requires ``n > 1`` and ``a != 0``.
    """

    __slots__ = ()

    def __init__(self, entries: Sequence[Polynomial], field: Field | None = None):
        super().__init__(entries, field)
        if len(self.entries) < 2:
            raise InvalidInputError("input vector must have at least two entries (n > 1)")
        if self.is_zero():
            raise InvalidInputError("input vector must be nonzero")

    def coefficient_rows(self) -> list[list[Raw]]:
        """Rows ``c_0, ..., c_d`` with ``a = sum_j c_j s**j``."""
        d = self.degree
        return [[e.coeff(j) for e in self.entries] for j in range(d + 1)]


def degree(v: Polynomial | PolyVector) -> Degree:
    return v.degree


def leading_vector(v: PolyVector) -> list[Raw]:
    return v.leading_vector


def dot(a: PolyVector, h: PolyVector) -> Polynomial:
    """``sum_i a_i * h_i``."""
    if len(a) != len(h):
        raise DimensionError(f"cannot pair a length-{len(a)} row with a length-{len(h)} column")
    if a.field != h.field:
        raise FieldMismatchError(f"cannot combine {a.field} and {h.field}")
    f = a.field
    p = f.modulus
    size = max((len(x.coeffs) + len(y.coeffs) - 1 for x, y in zip(a, h)), default=0)
    out = [f.zero] * max(size, 0)
    for x, y in zip(a, h):
        xc, yc = x.coeffs, y.coeffs
        if not xc or not yc:
            continue
        for i, u in enumerate(xc):
            if u == 0:
                continue
            for j, w in enumerate(yc):
                out[i + j] += u * w
    if p:
        out = [c % p for c in out]
    return Polynomial._raw(f, out)


def euclid_gcd(a: PolyVector) -> Polynomial:
    """Monic gcd of all entries by iterated Euclid."""
    g = Polynomial.zero(a.field)
    for e in a:
        g = poly_gcd(g, e)
        if g.degree == 0:
            break
    if g.is_zero():
        raise InvalidInputError("gcd of the zero vector is undefined")
    return g


def scalars(field: Field, values: Iterable[Raw]) -> list[FieldScalar]:
    """Wrap raw values, e.g. a leading vector, as FieldScalars."""
    return [FieldScalar(field, v) for v in values]
