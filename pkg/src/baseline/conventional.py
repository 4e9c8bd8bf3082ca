"""
Conventional cross-Kerr generation with coherent states: the heralded
wavefunctions in q and p, as series over the signal photon number n.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from loguru import logger
from scipy.special import gammainc, gammaln

from src.fock.hermite import STABLE_ORDER, hermite_functions
from src.utils.exceptions import SeriesCutoffError

SERIES_TAIL_TOL = 1e-12
LOG_OVERFLOW = 700.0
FOURIER_CHUNK = 512


def poisson_tail(alpha: float, n_max: int) -> float:
    """sum_{n > n_max} alpha^{2n} / n!"""
    lam = alpha * alpha
    return float(gammainc(n_max + 1, lam) * math.exp(lam))


def series_cutoff(alpha: float) -> int:
    n = 0
    while poisson_tail(alpha, n) >= SERIES_TAIL_TOL:
        n += 1
        if n > STABLE_ORDER:
            raise SeriesCutoffError(n, poisson_tail(alpha, STABLE_ORDER))
    return n


@dataclass(frozen=True)
class BaselineParams:
    alpha: float
    tau: float
    x: float = 0.0
    n_max: Optional[int] = None
    weights: str = "printed"    # or "coherent": alpha^n in place of alpha^2

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.weights not in ("printed", "coherent"):
            raise ValueError(f"unknown weights variant {self.weights!r}")
        if self.n_max is not None:
            tail = poisson_tail(self.alpha, self.n_max)
            if tail >= SERIES_TAIL_TOL:
                raise SeriesCutoffError(self.n_max, tail)

    @property
    def cutoff(self) -> int:
        return series_cutoff(self.alpha) if self.n_max is None else self.n_max


def eta_n(alpha: float, x: float, n: int, weights: str = "printed") -> float:
    """
    eta_n = rho_n exp((alpha^2 + x^2) / 2), rho_n = alpha^2 H_n(x) / (2^{n/2} n!).

    Evaluated through the normalized Hermite function so that only logs of
    the large factors are ever formed.
    """
    psi = hermite_functions(n, x)[n]
    if psi == 0.0:
        return 0.0
    prefactor = n * math.log(alpha) if weights == "coherent" else 2 * math.log(alpha)
    log_mag = (prefactor + 0.25 * math.log(math.pi) + x * x + 0.5 * alpha * alpha
               - 0.5 * gammaln(n + 1) + math.log(abs(psi)))
    if log_mag > LOG_OVERFLOW:
        raise OverflowError(f"eta_{n} overflows: log magnitude {log_mag:.1f}")
    return math.copysign(math.exp(log_mag), psi)


def eta_series(params: BaselineParams) -> np.ndarray:
    return np.array([eta_n(params.alpha, params.x, n, params.weights) for n in range(params.cutoff + 1)])


def _grid_normalize(values: np.ndarray, grid: np.ndarray) -> np.ndarray:
    norm2 = np.trapz(np.abs(values) ** 2, grid)
    return values / np.sqrt(norm2)


def conventional_wavefn_q(params: BaselineParams, q_grid) -> np.ndarray:
    q = np.asarray(q_grid, dtype=np.float64)
    eta = eta_series(params)
    n = np.arange(eta.size)
    phases = np.exp(1j * np.pi * params.tau * np.outer(q, n))
    values = np.exp(-0.5 * q ** 2) * (phases @ eta)
    return _grid_normalize(values, q)


def conventional_wavefn_p(params: BaselineParams, p_grid) -> np.ndarray:
    p = np.asarray(p_grid, dtype=np.float64)
    eta = eta_series(params)
    n = np.arange(eta.size)
    values = np.exp(-0.5 * (p[:, None] - np.pi * params.tau * n) ** 2) @ eta
    return _grid_normalize(values.astype(np.complex128), p)


def fourier_to_p(q_grid, phi_q, p_grid) -> np.ndarray:
    """(2 pi)^{-1/2} int exp(-i p q) phi(q) dq by the trapezoid rule, in chunks of p."""
    q = np.asarray(q_grid, dtype=np.float64)
    p = np.asarray(p_grid, dtype=np.float64)
    weights = np.empty_like(q)
    weights[1:-1] = 0.5 * (q[2:] - q[:-2])
    weights[0] = 0.5 * (q[1] - q[0])
    weights[-1] = 0.5 * (q[-1] - q[-2])
    samples = np.asarray(phi_q) * weights
    out = np.empty(p.size, dtype=np.complex128)
    for start in range(0, p.size, FOURIER_CHUNK):
        block = p[start:start + FOURIER_CHUNK]
        out[start:start + FOURIER_CHUNK] = np.exp(-1j * np.outer(block, q)) @ samples
    logger.debug(f"   fourier_to_p {q.size} -> {p.size} points")
    return out / math.sqrt(2 * math.pi)
