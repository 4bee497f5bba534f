"""zetalab: a numerical laboratory for critical-line zeta integrals,
Jacob's ladders, divisor asymptotics, and Fermat-rational conditions."""

from .backend import USING_COMPILED
from .constants import EULER_GAMMA, ONE_MINUS_C, T0_DEFAULT
from .errors import (CacheError, DomainError, ToleranceError, TrackingError,
                     TrendViolation, ZetalabError)

__version__ = "0.1.0"

__all__ = [
    "USING_COMPILED", "EULER_GAMMA", "ONE_MINUS_C", "T0_DEFAULT",
    "CacheError", "DomainError", "ToleranceError", "TrackingError",
    "TrendViolation", "ZetalabError", "__version__",
]
