"""
Truncated-Fock oracle: the protocol run literally on a dense two-mode state.
Toy scale only; mode a is the signal, mode b the ancilla.
"""

import math

from loguru import logger

from src.comb.states import SQRT_PI
from src.fock.operators import cross_kerr, displace, homodyne_project
from src.fock.states import FockVector, squeezed_vacuum, tensor
from src.protocol.params import DeltaMode, ProtocolParams

SQRT2 = math.sqrt(2.0)


def _check_mode(params: ProtocolParams):
    if params.delta_mode is not DeltaMode.EXACT:
        raise ValueError("the Fock oracle runs the physical pipeline; use DeltaMode.EXACT")


def pre_measurement_joint(params: ProtocolParams, dim: int) -> FockVector:
    """Joint state after Kerr, D1 and inverse Kerr, before the homodyne measurement."""
    _check_mode(params)
    signal = squeezed_vacuum(params.sp.r, dim)
    ancilla = FockVector(params.ancilla.fock_amplitudes(4 * params.m + 1), normalized=True)
    theta_ph = params.theta_eff / 2
    joint = cross_kerr(tensor(signal, ancilla), theta_ph)
    joint = displace(joint, complex(-params.gamma_eff, -params.beta_eff) / SQRT2, mode="a")
    return cross_kerr(joint, -theta_ph)


def run_fock_oracle(params: ProtocolParams, x: float, dim: int) -> FockVector:
    joint = pre_measurement_joint(params, dim)
    conditional, weight = homodyne_project(joint, "b", x)
    logger.debug(f"   fock oracle x={x:.4g} density={weight:.6g}")
    state = displace(conditional, 1j * (params.beta_eff + params.delta) / SQRT2)
    if params.logical:
        state = displace(state, SQRT_PI / SQRT2)
    return state.normalize()
