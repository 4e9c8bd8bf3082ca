"""
Squeezing level conventions.

s = -10 log10(2 sigma^2), with Delta^2 = kappa^2 = 2 sigma^2 so that every
peak has the same variance in q and p.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class SqueezeParams:
    s_db: float
    sigma2: float   # per-peak variance
    delta2: float   # peak width Delta^2
    kappa2: float   # envelope width kappa^2

    def __post_init__(self):
        if min(self.sigma2, self.delta2, self.kappa2) <= 0:
            raise ValueError(f"squeezing variances must be positive: {self}")

    @property
    def r(self) -> float:
        """Squeeze parameter of the single-mode squeezed vacuum with q-variance sigma^2."""
        return -0.5 * math.log(self.delta2)


def squeeze_convert(s_db: float) -> SqueezeParams:
    sigma2 = 10.0 ** (-s_db / 10.0) / 2.0
    return SqueezeParams(s_db=float(s_db), sigma2=sigma2, delta2=2.0 * sigma2, kappa2=2.0 * sigma2)


def squeeze_db(sigma2: float) -> float:
    if sigma2 <= 0:
        raise ValueError(f"sigma2 must be positive, got {sigma2}")
    return -10.0 * math.log10(2.0 * sigma2)
