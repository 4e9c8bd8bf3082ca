import math
from dataclasses import dataclass

import numpy as np
from loguru import logger
from scipy.optimize import brentq
from scipy.special import gammaln

from src.comb.states import envelope
from src.utils.exceptions import CoefficientOverflowError, GeometryError

LOG_OVERFLOW = 700.0


@dataclass(frozen=True)
class AncillaSpec:
    """
    Ancilla N * sum_t c_t |2t>, t = 0..2m.

    c_t alternates in sign with t; at outcome x = 0 the heralded peak weights
    reduce to the GKP envelope.
    """
    m: int
    kappa2: float
    logical: int
    coeffs: np.ndarray
    norm: float

    @property
    def amplitudes(self) -> np.ndarray:
        """Normalized amplitudes N c_t of |2t>."""
        return self.norm * self.coeffs

    def fock_amplitudes(self, dim: int) -> np.ndarray:
        if dim < 4 * self.m + 1:
            raise ValueError(f"ancilla needs dim >= {4 * self.m + 1}, got {dim}")
        amps = np.zeros(dim, dtype=np.complex128)
        amps[0:4 * self.m + 1:2] = self.amplitudes
        return amps


def ancilla_coefficients(m: int, kappa2: float, logical: int = 0) -> AncillaSpec:
    """
    c_t = env(t - m) * sqrt(2^{2t} (2t)!) / H_{2t}(0), built in log space
    with H_{2t}(0) = (-1)^t (2t)! / t!.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    t = np.arange(2 * m + 1)
    with np.errstate(divide="ignore"):
        log_env = np.log(envelope(t - m, kappa2, logical))
    log_c = log_env + t * math.log(2.0) + 0.5 * gammaln(2 * t + 1) - (gammaln(2 * t + 1) - gammaln(t + 1))
    if not np.all(np.isfinite(log_c)) or np.max(np.abs(log_c)) > LOG_OVERFLOW:
        raise CoefficientOverflowError(m)
    coeffs = (-1.0) ** t * np.exp(log_c)
    norm = 1.0 / math.sqrt(float(np.sum(coeffs ** 2)))
    return AncillaSpec(m=m, kappa2=kappa2, logical=logical, coeffs=coeffs, norm=norm)


def delta_error(beta: float, gamma: float, m: int) -> float:
    """p-quadrature error beta (1 - sqrt(1 - (gamma / (m beta))^2)) of the chord geometry."""
    if gamma == 0:
        return 0.0
    if m == 0 or beta == 0:
        raise GeometryError(math.inf)
    ratio = gamma / (m * beta)
    if abs(ratio) > 1:
        raise GeometryError(ratio)
    return beta * ratio ** 2 / (1.0 + math.sqrt(1.0 - ratio ** 2))


def beta_for_delta(target_delta: float, gamma: float, m: int) -> float:
    """Smallest beta whose delta_error does not exceed target_delta."""
    reach = abs(gamma / m)
    if not 0 < target_delta < reach:
        raise ValueError(f"target_delta must lie in (0, {reach:.6g}), got {target_delta}")
    upper = reach + reach ** 2 / target_delta
    beta = brentq(lambda b: delta_error(b, gamma, m) - target_delta, reach, upper, xtol=1e-12, rtol=1e-15)
    logger.debug(f"   beta_for_delta delta={target_delta} -> beta={beta:.10g}")
    return beta
