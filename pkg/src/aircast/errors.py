"""Exception types raised by the aircast library.

Everything derives from :class:`AircastError` so callers (and the CLI)
can catch library failures with a single except clause.
"""


class AircastError(Exception):
    """Base class for all aircast errors."""


class OutOfBoundsError(AircastError):
    """A coordinate lies outside the grid's bounding rectangle."""


class EmptyInputError(AircastError):
    """An operation received no usable input."""


class NonPositiveScaleError(AircastError):
    """A normalization scale must be strictly positive."""


class NegativeValueError(AircastError):
    """A pollutant concentration cannot be negative."""


class AllMissingError(AircastError):
    """Every value in a reference-station set was missing."""


class ShapeMismatchError(AircastError):
    """Array shapes are inconsistent with the operation's contract."""


class OddDimensionError(AircastError):
    """2x2 pooling requires even spatial dimensions."""


class NotOneHotError(AircastError):
    """Classification targets must be one-hot encoded."""


class NoForwardCacheError(AircastError):
    """backward() was called before a caching forward pass."""


class EmptyDatasetError(AircastError):
    """Training requires at least two samples."""


class UnnormalizedInputError(AircastError):
    """Image pixels must already be normalized to [0, 1]."""


class SeriesTooShortError(AircastError):
    """The series is too short to cut a single window from."""


class AlphaOutOfRangeError(AircastError):
    """The blend weight must lie in [0, 1]."""


class AllTargetsZeroError(AircastError):
    """Relative error is undefined when every target is zero."""


class MissingHeaderError(AircastError):
    """A CSV file lacks the documented header row."""


class VersionMismatchError(AircastError):
    """A checkpoint was written by an unsupported format version."""


class ChecksumError(AircastError):
    """A checkpoint's content checksum failed to validate."""


class SmallCellWarning(UserWarning):
    """A grid cell's physical edge is shorter than the recommended 1 km."""
