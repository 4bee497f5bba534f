"""Exception types with CLI exit-code mapping."""


class ZetalabError(Exception):
    """Base class for all package errors."""
    exit_code = 1


class DomainError(ZetalabError):
    """Input outside an operation's supported range."""
    exit_code = 2


class CacheError(ZetalabError):
    """Missing, corrupt or version-mismatched grid cache."""
    exit_code = 3


class TrendViolation(ZetalabError):
    """An experiment suite reported verdict trend_violated."""
    exit_code = 4


class ToleranceError(ZetalabError):
    """Quadrature or solver failed to reach the requested tolerance."""

    def __init__(self, msg, achieved=None):
        super().__init__(msg)
        self.achieved = achieved


class TrackingError(ZetalabError):
    """Continuous argument tracking lost the branch."""

    def __init__(self, msg, at=None):
        super().__init__(msg)
        self.at = at
