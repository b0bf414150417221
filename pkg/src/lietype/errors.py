"""Exception types shared across the library.

Domain errors (bad mathematical input) all derive from LieTypeError so the
command line layer can map them to a single exit code.
"""

__all__ = [
    "LieTypeError",
    "UnsupportedSpec",
    "UnsupportedFamily",
    "MixedGroups",
    "TooLarge",
    "NotPrime",
    "NotPermutation",
    "NotAClass",
    "InvalidPair",
    "DimensionMismatch",
    "NotSymplectic",
    "SplittingFieldTooLarge",
]


class LieTypeError(ValueError):
    """Base class for all domain errors raised by this package."""


class UnsupportedSpec(LieTypeError):
    """Family/rank combination outside the supported tables."""


class UnsupportedFamily(LieTypeError):
    """Operation defined only for some families was called on another."""


class MixedGroups(LieTypeError):
    """Two elements from different groups were combined."""


class TooLarge(LieTypeError):
    """An enumeration would exceed the configured size bound."""


class NotPrime(LieTypeError):
    """A number required to be prime (and in range) is not."""


class NotPermutation(LieTypeError):
    """Input does not describe a permutation."""


class NotAClass(LieTypeError):
    """A set of elements is not a single conjugacy class."""


class InvalidPair(LieTypeError):
    """A pair (class, character) index is out of range."""


class DimensionMismatch(LieTypeError):
    """Vector or matrix dimensions do not match the ambient space."""


class NotSymplectic(LieTypeError):
    """A flag fails the compatibility condition with the symplectic form."""


class SplittingFieldTooLarge(LieTypeError):
    """Eigenvalues would need a finite field beyond the supported size."""
