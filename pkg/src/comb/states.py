"""
GKP-type combs: finite-peak targets, the reference (envelope-truncated) target,
and the closed-form state heralded by the protocol at outcome x.
"""

import math
from enum import Enum

import numpy as np
from scipy.special import eval_hermite

from src.comb.gaussian_comb import GaussianComb
from src.comb.squeeze import SqueezeParams
from src.fock.hermite import scaled_hermite_functions

SQRT_PI = math.sqrt(math.pi)
REFERENCE_WEIGHT_FLOOR = 1e-18


class HermiteOrder(Enum):
    """Order of the Hermite factor carried by peak t + m of the heralded state."""
    DOUBLED = "doubled"     # H_{2(t+m)}, the ancilla occupies |2t>
    LITERAL = "literal"     # H_{t+m}; negative control only


def peak_indices(m: int) -> np.ndarray:
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return np.arange(-m, m + 1)


def peak_centers(j, logical: int = 0) -> np.ndarray:
    _check_logical(logical)
    return (2 * np.asarray(j) + logical) * SQRT_PI


def envelope(j, kappa2: float, logical: int = 0) -> np.ndarray:
    """GKP envelope weight of the peak at (2j + logical) sqrt(pi)."""
    _check_logical(logical)
    j = np.asarray(j, dtype=np.float64)
    if logical == 0:
        return np.exp(-2 * np.pi * kappa2 * j ** 2)
    return np.exp(-np.pi * kappa2 * (2 * j + 1) ** 2 / 2)


def delta_pattern(m: int, delta: float) -> np.ndarray:
    """
    Momentum residual of each peak after the correcting displacement.

    Zero on odd |j|, +-delta alternating with |j|/2 on even |j|; for m=2 this
    is (-delta, 0, delta, 0, -delta).
    """
    j = np.abs(peak_indices(m))
    return np.where(j % 2 == 1, 0.0, delta * (-1.0) ** (j // 2))


def gkp_finite(m: int, sp: SqueezeParams, logical: int = 0) -> GaussianComb:
    j = peak_indices(m)
    return GaussianComb.from_arrays(
        envelope(j, sp.kappa2, logical), peak_centers(j, logical), sp.delta2
    ).normalize()


def reference_gkp(sp: SqueezeParams, logical: int = 0) -> GaussianComb:
    """Infinite-envelope GKP state, cut where the squared envelope weight drops below 1e-18."""
    _check_logical(logical)
    reach = math.sqrt(-math.log(REFERENCE_WEIGHT_FLOOR) / (4 * math.pi * sp.kappa2))
    j = np.arange(-math.floor(reach) - 1, math.floor(reach) + 2)
    weights = envelope(j, sp.kappa2, logical)
    keep = weights ** 2 >= REFERENCE_WEIGHT_FLOOR
    return GaussianComb.from_arrays(weights[keep], peak_centers(j[keep], logical), sp.delta2).normalize()


def hermite_factor(m: int, x: float, order: HermiteOrder = HermiteOrder.DOUBLED) -> np.ndarray:
    """
    H_ord(x) / H_{2k}(0) for k = 0..2m, i.e. the x-dependence of each heralded
    peak once the ancilla coefficient has been folded in.
    """
    k = np.arange(2 * m + 1)
    if order is HermiteOrder.DOUBLED:
        at_x = scaled_hermite_functions(4 * m, x)[0::2]
        at_zero = scaled_hermite_functions(4 * m, 0.0)[0::2]
        return at_x / at_zero
    return eval_hermite(k, x) / eval_hermite(2 * k, 0.0)


def displacement_phase(j, residual, logical: int = 0) -> np.ndarray:
    """
    Phase of the peak at (2j + logical) sqrt(pi) left with momentum residual
    by the displacements that place it: exp(i (j + logical) sqrt(pi) residual).
    """
    _check_logical(logical)
    return np.exp(1j * SQRT_PI * (np.asarray(j) + logical) * np.asarray(residual, dtype=np.float64))


def generated_comb(
    m: int,
    sp: SqueezeParams,
    x: float,
    delta: float,
    logical: int = 0,
    order: HermiteOrder = HermiteOrder.DOUBLED,
    slopes=None,
) -> GaussianComb:
    """
    State heralded at homodyne outcome x.

    Args:
        m: the comb has 2m+1 peaks
        delta: momentum displacement error; spread over peaks by delta_pattern
        slopes: explicit per-peak momentum residuals, overriding delta_pattern
    """
    j = peak_indices(m)
    residual = delta_pattern(m, delta) if slopes is None else np.asarray(slopes, dtype=np.float64)
    weights = envelope(j, sp.kappa2, logical) * hermite_factor(m, x, order)
    weights = weights / np.max(np.abs(weights)) * displacement_phase(j, residual, logical)
    return GaussianComb.from_arrays(weights, peak_centers(j, logical), sp.delta2, residual).normalize()


def _check_logical(logical: int):
    if logical not in (0, 1):
        raise ValueError(f"logical must be 0 or 1, got {logical}")
