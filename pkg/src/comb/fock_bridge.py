import numpy as np
from loguru import logger
from scipy.integrate import quad_vec

from src.comb.gaussian_comb import GaussianComb
from src.fock.hermite import hermite_functions
from src.fock.states import FockVector
from src.utils.exceptions import TruncationError

BRIDGE_NORM_TOL = 1e-6


def to_fock(comb: GaussianComb, dim: int, epsabs: float = 1e-12) -> FockVector:
    """
    a_n = int <n|q> psi(q) dq for n < dim, by adaptive vector quadrature.

    The comb is normalized first; a result that keeps less than
    1 - BRIDGE_NORM_TOL of the norm raises TruncationError.
    """
    if not comb.normalized:
        comb = comb.normalize()
    lo, hi = comb.support()

    def integrand(q):
        values = hermite_functions(dim - 1, q) * complex(comb.wavefunction(q))
        return np.concatenate([values.real, values.imag])

    stacked, error = quad_vec(integrand, lo, hi, epsabs=epsabs, epsrel=0.0, limit=2000)
    amps = stacked[:dim] + 1j * stacked[dim:]
    result = FockVector(amps)
    missing = 1.0 - result.norm_squared()
    logger.debug(f"   to_fock dim={dim} missing={missing:.2e} quad_err={error:.1e}")
    if missing > BRIDGE_NORM_TOL:
        raise TruncationError(dim, missing, 2 * dim)
    return result.normalize()
