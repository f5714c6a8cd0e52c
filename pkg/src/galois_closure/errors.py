"""Exception hierarchy shared by every module of the package."""


class GaloisError(Exception):
    """Base class for all errors raised by galois_closure."""


class MalformedTableError(GaloisError, ValueError):
    """A closure table has the wrong number of entries or out-of-range entries."""


class InvalidClosureError(GaloisError, ValueError):
    """A table or family violates the closure-operator axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InvalidFamilyError(InvalidClosureError):
    """A candidate family is not stable under intersection or misses the universe."""


class RelationInvariantError(GaloisError, ValueError):
    """A relation is not reflexive and transitive."""


class ArityMismatchError(GaloisError, ValueError):
    """A map's domain or codomain size does not match the spaces it is used with."""


class CapExceededError(GaloisError):
    """An exhaustive operation was requested beyond its configured size cap."""


class NotAnAdjunctionError(GaloisError, ValueError):
    """An operation that requires a Galois connection received something else."""


class PreconditionError(GaloisError, ValueError):
    """An operation's documented precondition does not hold."""


class InternalConsistencyError(GaloisError, AssertionError):
    """Two routes that must agree disagreed; always a bug witness."""


class DocumentError(GaloisError, ValueError):
    """A JSON space or map document could not be parsed."""
