"""
Post-selection on |x| <= v_up: success probability and the
probability-weighted mean fidelity of accepted runs.

Densities are even in x, so every window integral runs over [0, v] and is
doubled.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from loguru import logger
from scipy.integrate import quad
from scipy.optimize import brentq

from config import GKP_QUAD_TOL
from src.comb.gaussian_comb import GaussianComb
from src.metrics.fidelity import fidelity_at
from src.protocol.branches import diagonal_density, homodyne_density
from src.protocol.params import ProtocolParams
from src.protocol.runner import target_state


class Density(Enum):
    EXACT = "exact"         # branch cross terms included
    DIAGONAL = "diagonal"   # diagonal terms only


def _density_fn(params: ProtocolParams, density: Density):
    if density is Density.EXACT:
        return lambda x: homodyne_density(params, x)
    return lambda x: diagonal_density(params, x)


def _integrate(fn, lo: float, hi: float) -> float:
    value, error = quad(fn, lo, hi, epsabs=GKP_QUAD_TOL, epsrel=GKP_QUAD_TOL, limit=200)
    if error > 10 * GKP_QUAD_TOL:
        logger.debug(f"   quad error estimate {error:.1e} on [{lo}, {hi}]")
    return value


def success_probability(params: ProtocolParams, v_up: float, density: Density = Density.EXACT) -> float:
    if v_up < 0:
        raise ValueError(f"v_up must be non-negative, got {v_up}")
    if v_up == 0:
        return 0.0
    fn = _density_fn(params, density)
    accepted = _integrate(fn, 0.0, v_up)
    total = accepted + _integrate(fn, v_up, np.inf)
    return float(min(max(accepted / total, 0.0), 1.0))


def mean_fidelity(
    params: ProtocolParams,
    v_up: float,
    density: Density = Density.EXACT,
    target: Optional[GaussianComb] = None,
) -> float:
    """int F p / int p over the acceptance window."""
    if v_up <= 0:
        raise ValueError(f"acceptance window must be positive, got v_up={v_up}")
    target = target_state(params) if target is None else target
    fn = _density_fn(params, density)
    weighted = _integrate(lambda x: fidelity_at(params, x, target) * fn(x), 0.0, v_up)
    return float(weighted / _integrate(fn, 0.0, v_up))


@dataclass(frozen=True)
class SelectionRow:
    v_up: float
    p_suc: float
    mean_fidelity: float
    p_suc_diagonal: float
    mean_fidelity_diagonal: float


@dataclass(frozen=True)
class SelectionCurve:
    rows: tuple

    def __post_init__(self):
        probs = [row.p_suc for row in self.rows]
        if any(b < a - 1e-12 for a, b in zip(probs, probs[1:])):
            raise ValueError("success probability must be nondecreasing in v_up")

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(row, name) for row in self.rows])


def selection_row(params: ProtocolParams, v_up: float, target: Optional[GaussianComb] = None) -> SelectionRow:
    target = target_state(params) if target is None else target
    if v_up == 0:
        f0 = fidelity_at(params, 0.0, target)
        return SelectionRow(0.0, 0.0, f0, 0.0, f0)
    row = SelectionRow(
        v_up=float(v_up),
        p_suc=success_probability(params, v_up),
        mean_fidelity=mean_fidelity(params, v_up, target=target),
        p_suc_diagonal=success_probability(params, v_up, Density.DIAGONAL),
        mean_fidelity_diagonal=mean_fidelity(params, v_up, Density.DIAGONAL, target),
    )
    if abs(row.p_suc - row.p_suc_diagonal) > 0.02:
        logger.warning(f"   exact and diagonal densities disagree at v_up={v_up}: "
                       f"{row.p_suc:.6f} vs {row.p_suc_diagonal:.6f}")
    return row


def selection_curve(params: ProtocolParams, v_grid) -> SelectionCurve:
    target = target_state(params)
    return SelectionCurve(rows=tuple(selection_row(params, float(v), target) for v in v_grid))


def v_up_for_success(params: ProtocolParams, p_target: float, density: Density = Density.EXACT) -> float:
    """Window half-width whose success probability equals p_target."""
    if not 0 < p_target < 1:
        raise ValueError(f"p_target must lie in (0, 1), got {p_target}")
    upper = 0.1
    while success_probability(params, upper, density) < p_target:
        upper *= 2
    return brentq(lambda v: success_probability(params, v, density) - p_target, 0.0, upper, xtol=1e-10)
