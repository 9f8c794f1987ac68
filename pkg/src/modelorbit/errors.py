"""Exception types raised by the library."""

from __future__ import annotations


class LieDataError(ValueError):
    """Base class for invalid Lie-theoretic input."""


class InvalidType(LieDataError):
    pass


class Unsupported(LieDataError):
    pass


class NotDominant(LieDataError):
    pass


class NotInCoweightLattice(LieDataError):
    pass


class NotWeylInvariant(LieDataError):
    pass


class NegativeMultiplicity(LieDataError):
    pass
