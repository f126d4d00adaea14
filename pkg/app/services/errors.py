# app/services/errors.py


class SkewCharError(ValueError):
    """Base class for every error raised by the combinatorics services."""


class MalformedPartition(SkewCharError):
    """Partition text is not a weakly decreasing list of non-negative integers."""


class MalformedSkew(SkewCharError):
    """Skew text is not of the form 'outer/inner'."""


class NotContained(SkewCharError):
    """The inner partition does not fit inside the outer partition."""


class NotBasic(SkewCharError):
    """The operation needs a basic skew diagram (no empty rows or columns)."""


class TooShallow(SkewCharError):
    """Some row or column holds fewer cells than the number to be removed."""


class DoesNotFit(SkewCharError):
    """A partition does not fit inside the k x l box."""


class NotMultiplicityFree(SkewCharError):
    """A skew character was expected to be multiplicity free but is not."""


class MalformedBox(SkewCharError):
    """Box text is not of the form 'KxL' with positive K and L."""
