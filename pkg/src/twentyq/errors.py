"""Exception types shared across the package."""


class TwentyQError(Exception):
    """Base class for every domain error raised by this package."""


class ValidationError(TwentyQError):
    """Rejected input. CLI maps these to exit code 1."""


class EmptyInputError(ValidationError):
    """A distribution with no objects."""


class NonPositiveProbError(ValidationError):
    """A probability that is zero, negative, or not finite."""


class SumNotOneError(ValidationError):
    """Probabilities that do not sum to 1 within tolerance."""


class DuplicateLabelError(ValidationError):
    """Two objects sharing the same label."""


class DimensionMismatchError(ValidationError):
    """Labels, probabilities, or tree leaves of inconsistent sizes."""


class DomainError(ValidationError):
    """A numeric argument outside its legal interval."""


class WrongArityError(ValidationError):
    """An operation that requires a specific number of objects."""


class TooFewObjectsError(ValidationError):
    """An operation that needs at least two objects."""


class DegenerateSplitError(ValidationError):
    """Top probability equal to 1, so the conditional remainder is undefined."""


class NotFullBinaryError(ValidationError):
    """A tree with a one-child internal node where a full binary tree is required."""


class UnrealizableProfileError(ValidationError):
    """A depth profile no valid question tree can realize."""


class LimitExceededError(ValidationError):
    """More objects than the configured search limit allows."""


class SessionFinishedError(TwentyQError):
    """An answer submitted to a game session that already ended."""


class BoundViolationError(TwentyQError):
    """A proved inequality failed on a concrete input. CLI maps this to exit code 2."""
