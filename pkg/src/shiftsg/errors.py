"""Exception types. All domain errors derive from :class:`SemigroupError`."""


class SemigroupError(ValueError):
    pass


class EmptyInput(SemigroupError):
    pass


class NonPositiveEntry(SemigroupError):
    pass


class NotNumerical(SemigroupError):
    """gcd of the generators exceeds 1; use a Submonoid instead."""


class BaseNotMember(SemigroupError):
    pass


class TooFewShifts(SemigroupError):
    pass


class NotCoprime(SemigroupError):
    pass


class BelowThreshold(SemigroupError):
    """n is below the bound required by the statement being applied."""


class NotInP(SemigroupError):
    pass


class NotPseudoFrobenius(SemigroupError):
    pass


class Overflow(SemigroupError, OverflowError):
    pass


class BaseNotNearlyGorenstein(SemigroupError):
    pass


class CapExceeded(SemigroupError):
    pass


class TransportMismatch(SemigroupError):
    """A transported property failed its direct re-check."""


class ThresholdWarning(UserWarning):
    """Emitted when a formula is evaluated below its proven bound."""


INT64_MAX = (1 << 63) - 1


def checked(value):
    """Return ``value`` if it fits a signed 64-bit integer, else raise."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise Overflow(f"{value} does not fit in 64 bits")
    return value
