"""Exceptions shared across the package."""


class InvalidExponentsError(ValueError):
    """An exponent triangle has a bad shape, a negative entry, or breaks monotonicity."""


class HeightBoundError(ValueError):
    """A rigged partition is taller than min(i, n-i+1); the element cannot lie in the model."""


class NotInCrystalError(ValueError):
    """A rigged configuration failed the membership test where membership was required."""


class MalformedInputError(ValueError):
    """A serialized object does not match its schema."""
