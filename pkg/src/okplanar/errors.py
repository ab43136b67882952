"""Exception hierarchy shared by every module."""


class OKPlanarError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(OKPlanarError, ValueError):
    """Input violates a structural precondition (bad vertex, loop, duplicate...)."""


class BoundViolationError(OKPlanarError):
    """The drawing does not satisfy the crossing bound a procedure requires.

    ``witness`` holds the offending edge (or crossing pair of edges).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CertificateError(OKPlanarError, AssertionError):
    """A constructed object failed its runtime certificate.

    This signals a bug in a construction, never a property of the input.
    """

    def __init__(self, message, context=None):
        super().__init__(message)
        self.context = context or {}


class OracleCapError(OKPlanarError):
    """An exact oracle refused an instance above its size cap."""
