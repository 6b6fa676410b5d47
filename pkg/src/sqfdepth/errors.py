"""Exception types shared across the package."""


class SqfdepthError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGenerator(SqfdepthError):
    """A generator is constant, or a variable index is out of range."""


class AmbientMismatch(SqfdepthError):
    """Operands live in polynomial rings with different variable counts."""


class InvalidExponent(SqfdepthError):
    """Squarefree power requested with exponent < 1."""


class ZeroIdeal(SqfdepthError):
    """Operation undefined for the zero ideal."""


class NotATree(SqfdepthError):
    """The tree depth formula was applied to a graph that is not a tree."""


class InvalidFamilyParameter(SqfdepthError):
    """Counterexample family requires n >= 6."""


class DegenerateSample(SqfdepthError):
    """Random sampling kept producing the zero ideal."""


class SpaceTooLarge(SqfdepthError):
    """Exhaustive enumeration was requested on a space above the cap."""


class ParseError(SqfdepthError):
    """Malformed ideal or graph text input."""
