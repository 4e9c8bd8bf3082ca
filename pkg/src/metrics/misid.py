import math

from scipy.special import erfc

from src.comb.states import SQRT_PI


def misidentify_prob(sigma2: float) -> float:
    """Chance that a zero-mean peak of variance sigma2 lands beyond sqrt(pi)/2 on either side."""
    if sigma2 <= 0:
        raise ValueError(f"sigma2 must be positive, got {sigma2}")
    return float(erfc(SQRT_PI / 2 / math.sqrt(2 * sigma2)))
