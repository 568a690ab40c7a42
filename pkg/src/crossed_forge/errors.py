"""Exception hierarchy shared by every module."""


class CrossedForgeError(Exception):
    pass


class DomainMismatchError(CrossedForgeError, ValueError):
    """Operands belong to different rings, groups or crossed systems."""


class UnsupportedEnumerationError(CrossedForgeError):
    """The object is infinite (or symbolic) and cannot be enumerated."""


class SizeGuardError(CrossedForgeError):
    """An exhaustive computation would exceed the configured size limits."""


class NormalityError(CrossedForgeError, ValueError):
    pass


class UnsupportedError(CrossedForgeError):
    """The operation is not defined for this kind of input."""


class PreconditionError(CrossedForgeError, ValueError):
    """A hypothesis required by a construction does not hold.

    ``witness`` carries the offending data when there is one.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ValidationError(CrossedForgeError, ValueError):
    """A crossed system failed verification; ``report`` lists the violations."""

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class ParseError(CrossedForgeError, ValueError):
    pass
