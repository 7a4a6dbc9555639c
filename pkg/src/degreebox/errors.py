"""Exception types shared across the package."""


class InputError(ValueError):
    """Base class for rejected inputs."""


class LengthMismatch(InputError):
    """Paired vectors have different lengths."""


class NegativeEntry(InputError):
    """A sequence entry is negative."""


class LowerExceedsUpper(InputError):
    """Some lower bound exceeds its upper bound (after clamping)."""


class LowerExceedsMaxDegree(InputError):
    """Some lower bound exceeds n-1, which no simple graph can meet."""


class EntryTooLarge(InputError):
    """A degree entry exceeds n-1, so the zero-diagonal matrix is undefined."""


class NotNonIncreasing(InputError):
    """The operation requires a non-increasing sequence."""


class NotGoodOrder(InputError):
    """The operation requires a bound pair in good order."""


class IndexOutOfRange(InputError):
    """A prefix length or index argument is outside its valid range."""


class BoundExceedsPartSize(InputError):
    """A bipartite degree bound exceeds the opposite part size."""


class TooLarge(InputError):
    """Instance size exceeds what exhaustive enumeration supports."""


class UnknownCriterion(InputError):
    """A criterion name is not registered."""


class SearchBudgetExceeded(RuntimeError):
    """The witness search hit its node budget before reaching an answer."""
