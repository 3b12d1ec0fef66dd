"""Exception hierarchy.

Precondition failures (a violated hypothesis of a formula) derive from
:class:`PreconditionError`; the command line maps them to exit code 2.
"""


class MixvolError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(MixvolError):
    pass


class DimensionError(PreconditionError):
    pass


class NotPointedError(PreconditionError):
    pass


class UnboundedError(PreconditionError):
    pass


class EmptyPolyhedronError(PreconditionError):
    pass


class SupportConeMismatch(PreconditionError):
    pass


class UnboundedDifferenceError(PreconditionError):
    def __init__(self, message: str = "symmetric difference unbounded"):
        super().__init__(message)


class NotConvenientError(PreconditionError):
    def __init__(self, message: str = "stable mixed volume does not exist"):
        super().__init__(message)


class NotEssentialError(PreconditionError):
    pass


class UnsupportedError(PreconditionError):
    """The requested specialization has no formula behind it."""
