from functools import lru_cache
from typing import Literal

import numpy as np
from loguru import logger
from scipy.linalg import expm

from src.fock.hermite import hermite_functions
from src.fock.states import TAIL_ENTRIES, FockVector
from src.utils.exceptions import ShapeMismatchError, TruncationError

DISPLACE_TAIL_TOL = 1e-6

Mode = Literal["a", "b"]


@lru_cache(maxsize=64)
def displacement_matrix(dim: int, alpha: complex) -> np.ndarray:
    """exp(alpha a^dag - alpha* a) of the generator truncated to dim; exactly unitary."""
    lowering = np.diag(np.sqrt(np.arange(1, dim, dtype=np.float64)), k=1).astype(np.complex128)
    generator = alpha * lowering.conj().T - np.conj(alpha) * lowering
    matrix = expm(generator)
    matrix.flags.writeable = False
    return matrix


def displace(state: FockVector, alpha: complex, mode: Mode = "a") -> FockVector:
    """
    D(alpha) on a single mode, or on one mode of a joint state.

    Raises TruncationError when the displaced state leaves more than
    DISPLACE_TAIL_TOL of its probability in the last basis states.
    """
    alpha = complex(alpha)
    if alpha == 0:
        return state
    amps = state.amps
    if state.is_joint and mode == "b":
        amps = amps.T
    result = displacement_matrix(amps.shape[0], alpha) @ amps
    tail = float(np.sum(np.abs(result[-TAIL_ENTRIES:]) ** 2))
    if state.is_joint and mode == "b":
        result = result.T
    displaced = FockVector(result)
    if tail > DISPLACE_TAIL_TOL:
        reach = int(np.ceil((abs(alpha) + 6.0) ** 2))
        raise TruncationError(amps.shape[0], tail, amps.shape[0] + reach)
    logger.debug(f"   displace alpha={alpha:.4g} tail={tail:.2e}")
    return displaced


def cross_kerr(joint: FockVector, theta_ph: float) -> FockVector:
    """exp(-i theta_ph n_a n_b), elementwise on the joint amplitudes."""
    if not joint.is_joint:
        raise ShapeMismatchError("two-mode joint state", joint.shape)
    n_a = np.arange(joint.shape[0])
    n_b = np.arange(joint.shape[1])
    phases = np.exp(-1j * theta_ph * np.outer(n_a, n_b))
    return FockVector(joint.amps * phases)


def homodyne_project(joint: FockVector, mode: Mode, x: float) -> tuple[FockVector, float]:
    """
    Contract one mode of a joint state with <x| in the q quadrature.

    Returns the unnormalized conditional state of the other mode and the
    outcome density at x.
    """
    if not joint.is_joint:
        raise ShapeMismatchError("two-mode joint state", joint.shape)
    if mode == "b":
        bra = hermite_functions(joint.shape[1] - 1, x)
        residual = joint.amps @ bra
    elif mode == "a":
        bra = hermite_functions(joint.shape[0] - 1, x)
        residual = bra @ joint.amps
    else:
        raise ValueError(f"mode must be 'a' or 'b', got {mode!r}")
    conditional = FockVector(residual)
    return conditional, conditional.norm_squared()


def schmidt_coefficients(joint: FockVector) -> np.ndarray:
    """Singular values of the joint amplitude matrix, scaled to unit total weight."""
    if not joint.is_joint:
        raise ShapeMismatchError("two-mode joint state", joint.shape)
    values = np.linalg.svd(joint.amps, compute_uv=False)
    return values / np.sqrt(np.sum(values ** 2))
