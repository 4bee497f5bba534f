"""Shared numerical constants."""

import math

# Euler's constant and derived quantities used throughout.
EULER_GAMMA = 0.5772156649015329
ONE_MINUS_C = 1.0 - EULER_GAMMA          # ~0.42278
LN_2PI = math.log(2.0 * math.pi)
TWO_PI = 2.0 * math.pi

# Height below which the fast engine refuses to evaluate; the [0, 10] part of
# cumulative integrals comes from the embedded high-precision head table.
T_MIN_ENGINE = 10.0

# Euler-Maclaurin / Riemann-Siegel split for Z(t).  Below the cutoff the
# Riemann-Siegel correction series is too short to reach ~1e-9 absolute
# error, so Euler-Maclaurin (O(t) terms, ~1e-13 absolute) is used instead.
RS_CUTOFF = 1000.0

# Operational threshold for "sufficiently big" heights in the experiment
# domain guards.
T0_DEFAULT = 1.0e3
