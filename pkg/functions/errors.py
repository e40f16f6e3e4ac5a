class FockCalcError(Exception):
    """Base class for every error raised by fockcalc."""


class DomainError(FockCalcError, ValueError):
    """An input lies outside the domain of the operation."""


class PartitionSyntaxError(DomainError):
    pass


class SizeMismatchError(DomainError):
    """Dominance was asked for partitions of different sizes."""


class NoRemovableHookError(DomainError):
    pass


class DivisibilityError(FockCalcError, ArithmeticError):
    """Exact division left a remainder."""


class CanonicalBasisError(FockCalcError, RuntimeError):
    """The LLT elimination broke one of its structural guarantees."""


class NotInSpanError(FockCalcError, LookupError):
    """A vector could not be written in the canonical basis."""


class MullineuxError(FockCalcError, RuntimeError):
    pass


class CacheFormatError(FockCalcError, ValueError):
    """A cached decomposition matrix is unreadable or has the wrong format tag."""
