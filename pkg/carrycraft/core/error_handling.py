class DomainError(Exception):
    """
    Base class for every failure caused by invalid mathematical input. The
    command line maps these to exit status 1.
    """

    prefix = "Domain"

    def __init__(self, value):
        self.value = "{} ERROR: {}".format(self.prefix, value)

    def __str__(self):
        return self.value


class SanityError(DomainError):
    """
    Class to raise a custom error for sanity checks of command line input
    """
    prefix = "inSANITY"


class InvalidBaseError(DomainError):
    prefix = "Base"


class InvalidBoundError(DomainError):
    prefix = "Bound"


class InvalidPrimeError(DomainError):
    prefix = "Prime"


class UndefinedNormError(DomainError):
    prefix = "Norm"


class EmptyIntervalError(DomainError):
    """
    Raised when the interval [a, ((P - 1) / J) a) holds no real number,
    i.e. J >= P - 1. Kept apart from a search that finds nothing.
    """
    prefix = "Interval"


class DegenerateBoundError(DomainError):
    prefix = "Degenerate bound"


class HypothesisError(DomainError):
    prefix = "Hypothesis"


class ScanRangeError(DomainError):
    prefix = "Scan range"


class ExportError(DomainError):
    prefix = "Export"


class CapExceededError(DomainError):
    prefix = "Search cap"


class OracleGuardError(DomainError):
    prefix = "Oracle"


class VerificationError(Exception):
    """
    Raised when a fast path disagrees with the oracle. The command line maps
    it to exit status 2.
    """
    def __init__(self, value, mismatches=None):
        self.value = "Verification ERROR: {}".format(value)
        self.mismatches = mismatches or []

    def __str__(self):
        return self.value
