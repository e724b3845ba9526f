"""Exception types raised by the library."""


class MuBasisError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(MuBasisError, ValueError):
    """Operands live in different fields."""


class DimensionError(MuBasisError, ValueError):
    """Vector or matrix shapes do not conform."""


class UndefinedLeadingVectorError(MuBasisError, ValueError):
    """The leading vector of the zero vector was requested."""


class DegreeOverflowError(MuBasisError, ValueError):
    """A polynomial vector does not fit the requested degree bound."""


class InvalidInputError(MuBasisError, ValueError):
    """An input vector violates the problem preconditions (n > 1, a != 0)."""


class InternalContradictionError(MuBasisError, RuntimeError):
    """A state that the theory rules out was reached; indicates a bug."""
