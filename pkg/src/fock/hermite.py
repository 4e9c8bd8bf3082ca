"""
Normalized Hermite functions psi_n(x) = <x|n>, with hbar = 1 and <q^2>_vac = 1/2.

The recurrence is run on the normalized functions themselves, so no raw H_n or
n! is ever formed and orders up to STABLE_ORDER stay finite.
"""

import numpy as np
from numba import njit

from src.utils.exceptions import UnsupportedOrderError

STABLE_ORDER = 200
PI_QUARTER = np.pi ** -0.25


@njit(cache=True)
def _hermite_row(n_max, x, start):
    out = np.zeros(n_max + 1)
    out[0] = start
    if n_max >= 1:
        out[1] = np.sqrt(2.0) * x * out[0]
    for n in range(1, n_max):
        out[n + 1] = np.sqrt(2.0 / (n + 1)) * x * out[n] - np.sqrt(n / (n + 1.0)) * out[n - 1]
    return out


@njit(cache=True)
def _hermite_grid(n_max, xs):
    out = np.zeros((xs.shape[0], n_max + 1))
    for i in range(xs.shape[0]):
        out[i, :] = _hermite_row(n_max, xs[i], PI_QUARTER * np.exp(-0.5 * xs[i] * xs[i]))
    return out


def _check_order(n: int):
    if n < 0:
        raise ValueError(f"Hermite order must be non-negative, got {n}")
    if n > STABLE_ORDER:
        raise UnsupportedOrderError(n, STABLE_ORDER)


def quad_amplitude(n: int, x: float) -> float:
    """<x|n> for a single order."""
    return float(hermite_functions(n, x)[n])


def hermite_functions(n_max: int, x: float) -> np.ndarray:
    """psi_0(x) .. psi_{n_max}(x) as one array."""
    _check_order(n_max)
    x = float(x)
    return _hermite_row(n_max, x, PI_QUARTER * np.exp(-0.5 * x * x))


def scaled_hermite_functions(n_max: int, x: float) -> np.ndarray:
    """psi_n(x) e^{x^2/2}: the same recurrence without the Gaussian, finite for large |x|."""
    _check_order(n_max)
    return _hermite_row(n_max, float(x), PI_QUARTER)


def hermite_function_grid(n_max: int, xs) -> np.ndarray:
    """psi_n on a grid: shape (len(xs), n_max + 1)."""
    _check_order(n_max)
    return _hermite_grid(n_max, np.ascontiguousarray(xs, dtype=np.float64))
