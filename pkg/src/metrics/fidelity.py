from dataclasses import dataclass
from typing import Optional

import numpy as np
from loguru import logger

from src.comb.gaussian_comb import GaussianComb, comb_fidelity
from src.protocol.ancilla import beta_for_delta
from src.protocol.branches import diagonal_density, homodyne_density, run_branch_oracle
from src.protocol.params import DeltaMode, ProtocolParams
from src.protocol.runner import run_analytic, target_state

GRID_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class SweepRow:
    x: float
    fidelity: float
    p_exact: float
    p_diagonal: float


@dataclass(frozen=True)
class SweepResult:
    rows: tuple
    meta: ProtocolParams

    def __post_init__(self):
        xs = [row.x for row in self.rows]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("sweep x values must be strictly increasing")

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(row, name) for row in self.rows])


def fidelity_at(params: ProtocolParams, x: float, target: Optional[GaussianComb] = None) -> float:
    target = target_state(params) if target is None else target
    return comb_fidelity(target, run_analytic(params, x))


def fidelity_curve(params: ProtocolParams, x_grid, target: Optional[GaussianComb] = None) -> SweepResult:
    """F(x) against the target with both outcome densities attached; x_grid must be symmetric about 0."""
    xs = np.asarray(x_grid, dtype=np.float64)
    if xs.size == 0 or not np.allclose(np.sort(xs), -np.sort(xs)[::-1], rtol=0.0, atol=GRID_SYMMETRY_TOL):
        raise ValueError("fidelity_curve needs an outcome grid symmetric about 0")
    target = target_state(params) if target is None else target
    rows = tuple(
        SweepRow(
            x=float(x),
            fidelity=fidelity_at(params, float(x), target),
            p_exact=homodyne_density(params, float(x)),
            p_diagonal=diagonal_density(params, float(x)),
        )
        for x in x_grid
    )
    return SweepResult(rows=rows, meta=params)


def delta_sensitivity(params: ProtocolParams, delta_grid, x: float = 0.0) -> list[tuple[float, float]]:
    """F at outcome x for each forced displacement error."""
    target = target_state(params)
    out = []
    for delta in delta_grid:
        if delta < 0:
            raise ValueError(f"delta must be non-negative, got {delta}")
        forced = params.with_(delta_mode=DeltaMode.FORCED_VALUE, forced_delta=float(delta))
        out.append((float(delta), fidelity_at(forced, x, target)))
    return out


@dataclass(frozen=True)
class GeometryPoint:
    requested_delta: float
    beta: Optional[float]
    delta: Optional[float]
    fidelity: Optional[float]


def exact_delta_sensitivity(params: ProtocolParams, delta_grid, x: float = 0.0) -> list[GeometryPoint]:
    """
    F at outcome x of the branch oracle run through the physical rotation
    geometry, with beta chosen so the geometric delta hits each grid value.

    delta = 0 needs beta -> infinity and m = 0 has no geometry; both give an
    empty point.
    """
    target = target_state(params)
    out = []
    for requested in delta_grid:
        if requested < 0:
            raise ValueError(f"delta must be non-negative, got {requested}")
        if requested == 0 or params.m == 0:
            out.append(GeometryPoint(float(requested), None, None, None))
            continue
        beta = beta_for_delta(float(requested), params.gamma_eff, params.m)
        exact = params.with_(beta=beta, theta=None, delta_mode=DeltaMode.EXACT)
        fidelity = comb_fidelity(target, run_branch_oracle(exact, x))
        logger.debug(f"   exact geometry delta={exact.delta:.6g} beta={exact.beta_eff:.6g} F={fidelity:.8f}")
        out.append(GeometryPoint(float(requested), exact.beta_eff, exact.delta, fidelity))
    return out
