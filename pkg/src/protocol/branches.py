"""
Branch-resolved oracle.

The Kerr propagator is diagonal in the ancilla number basis, so ancilla
component |2t> drives its own Gaussian branch of the signal. Each branch is
tracked as (mean, covariance, phase) through rotation, displacement, inverse
rotation and the correcting displacement, then assembled into a comb at the
homodyne outcome. Nothing is truncated.
"""

import math
from dataclasses import dataclass

import numpy as np

from src.comb.gaussian_comb import GaussianComb
from src.comb.states import SQRT_PI, delta_pattern
from src.fock.hermite import hermite_functions
from src.protocol.params import DeltaMode, ProtocolParams

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class GaussianBranch:
    """
    phase * D(mean) |g>, where |g> is a zero-mean Gaussian with covariance
    `covariance` in (q, p) and a positive vacuum overlap.
    """
    mean: complex
    covariance: np.ndarray
    phase: complex = 1.0

    @classmethod
    def squeezed(cls, delta2: float) -> "GaussianBranch":
        return cls(0j, np.diag([delta2 / 2, 1 / (2 * delta2)]))

    def rotate(self, phi: float) -> "GaussianBranch":
        """exp(i phi n): counter-clockwise in phase space."""
        c, s = math.cos(phi), math.sin(phi)
        rot = np.array([[c, -s], [s, c]])
        return GaussianBranch(self.mean * complex(c, s), rot @ self.covariance @ rot.T, self.phase)

    def displace(self, alpha: complex) -> "GaussianBranch":
        composed = np.exp(1j * (alpha * np.conj(self.mean)).imag)
        return GaussianBranch(self.mean + alpha, self.covariance, self.phase * composed)

    @property
    def q(self) -> float:
        return SQRT2 * self.mean.real

    @property
    def p(self) -> float:
        return SQRT2 * self.mean.imag

    def peak(self, amplitude: complex) -> tuple[complex, float, float, float]:
        """(weight, center, width2, slope) of amplitude * this branch in position space."""
        if abs(self.covariance[0, 1]) > 1e-12:
            raise ValueError("branch covariance is not q-p diagonal; no single-peak form")
        width2 = 2 * self.covariance[0, 0]
        q0, p0 = self.q, self.p
        weight = amplitude * self.phase * np.exp(-0.5j * q0 * p0) * (math.pi * width2) ** -0.25
        return complex(weight), q0, width2, -p0


def _evolve(params: ProtocolParams, t: int) -> GaussianBranch:
    branch = GaussianBranch.squeezed(params.sp.delta2)
    if params.delta_mode is DeltaMode.EXACT:
        step = t * params.theta_eff
        d1 = complex(-params.gamma_eff, -params.beta_eff) / SQRT2
        branch = branch.rotate(-step).displace(d1).rotate(step)
    else:
        j = t - params.m
        residual = delta_pattern(params.m, params.delta)[t]
        branch = branch.displace(complex(2 * j * SQRT_PI, -params.beta_eff - params.delta - residual) / SQRT2)
    branch = branch.displace(1j * (params.beta_eff + params.delta) / SQRT2)
    if params.logical:
        branch = branch.displace(SQRT_PI / SQRT2)
    return branch


def evolved_branches(params: ProtocolParams) -> list[GaussianBranch]:
    return [_evolve(params, t) for t in range(2 * params.m + 1)]


def branch_means(params: ProtocolParams) -> np.ndarray:
    """Final (q, p) of every branch, ordered t = 0..2m."""
    return np.array([(b.q, b.p) for b in evolved_branches(params)])


def branch_superposition(params: ProtocolParams, x: float) -> GaussianComb:
    """
    Unnormalized signal state conditioned on ancilla outcome x; its squared
    norm is the outcome density.
    """
    amps = params.ancilla.amplitudes * hermite_functions(4 * params.m, x)[0::2]
    peaks = [b.peak(a) for a, b in zip(amps, evolved_branches(params))]
    weights, centers, widths, slopes = zip(*peaks)
    return GaussianComb.from_arrays(weights, centers, widths, slopes)


def run_branch_oracle(params: ProtocolParams, x: float) -> GaussianComb:
    return branch_superposition(params, x).normalize()


def homodyne_density(params: ProtocolParams, x: float) -> float:
    """Exact outcome density, cross terms between branches included."""
    return branch_superposition(params, x).norm_squared()


def diagonal_density(params: ProtocolParams, x: float) -> float:
    """Outcome density without branch cross terms: sum_t N^2 c_t^2 psi_2t(x)^2."""
    amps = params.ancilla.amplitudes * hermite_functions(4 * params.m, x)[0::2]
    return float(np.sum(amps ** 2))
