import math

import mpmath as mp
import numpy as np
import pytest

from src.comb.fock_bridge import to_fock
from src.comb.gaussian_comb import GaussianComb, Peak, comb_fidelity
from src.comb.squeeze import squeeze_convert
from src.comb.states import SQRT_PI, delta_pattern, displacement_phase, envelope, gkp_finite
from src.fock.hermite import quad_amplitude
from src.fock.operators import homodyne_project, schmidt_coefficients
from src.fock.states import fock_fidelity, squeezed_vacuum
from src.protocol.ancilla import ancilla_coefficients, beta_for_delta, delta_error
from src.protocol.branches import (
    branch_means,
    branch_superposition,
    diagonal_density,
    homodyne_density,
    run_branch_oracle,
)
from src.protocol.fock_oracle import pre_measurement_joint, run_fock_oracle
from src.protocol.params import DeltaMode, ProtocolParams, lock_beta
from src.protocol.runner import run, run_analytic
from src.utils.exceptions import GeometryError

GAMMA_M2 = 4 * SQRT_PI


def toy_params(**changes) -> ProtocolParams:
    params = ProtocolParams(
        sp=squeeze_convert(7.0), m=1, beta=3.0, gamma=1.5, delta_mode=DeltaMode.EXACT, phase_lock=False
    )
    return params.with_(**changes)


def test_ancilla_trivial_case():
    spec = ancilla_coefficients(0, 0.1)
    assert np.allclose(spec.coeffs, [1.0])
    assert spec.amplitudes[0] == pytest.approx(1.0)


def test_ancilla_coefficients_alternate_and_normalize():
    spec = ancilla_coefficients(3, 0.1)
    assert np.all(np.abs(spec.coeffs) > 0)
    assert np.array_equal(np.sign(spec.coeffs), [1, -1, 1, -1, 1, -1, 1])
    assert np.sum(spec.amplitudes ** 2) == pytest.approx(1.0, abs=1e-14)


def test_ancilla_envelope_at_origin():
    spec = ancilla_coefficients(2, 0.1)
    psi = np.array([quad_amplitude(2 * t, 0.0) for t in range(5)])
    weights = spec.coeffs * psi
    assert np.allclose(weights / weights[2], envelope(np.arange(-2, 3), 0.1), rtol=1e-12)


def test_delta_error_values():
    assert delta_error(314.0, 0.0, 2) == 0.0
    assert delta_error(315.0, GAMMA_M2, 2) <= 0.02
    assert delta_error(314.0, GAMMA_M2, 2) == pytest.approx(0.020011, abs=1e-6)
    assert delta_error(313 * 0.95, GAMMA_M2, 2) > 0.02 * 0.9


def test_delta_error_high_precision():
    mp.mp.dps = 50
    beta = mp.mpf(1000)
    gamma = 4 * mp.sqrt(mp.pi)
    reference = beta * (1 - mp.sqrt(1 - (gamma / (2 * beta)) ** 2))
    assert delta_error(1000.0, GAMMA_M2, 2) == pytest.approx(float(reference), rel=1e-12)


def test_delta_error_large_beta_limit():
    beta = 1e6
    assert delta_error(beta, GAMMA_M2, 2) * beta == pytest.approx(GAMMA_M2 ** 2 / 8, rel=1e-4)


def test_delta_error_impossible_geometry():
    with pytest.raises(GeometryError):
        delta_error(1.0, GAMMA_M2, 2)


def test_beta_threshold():
    beta = beta_for_delta(0.02, GAMMA_M2, 2)
    assert 310 <= beta <= 320
    assert beta == pytest.approx(314.17, abs=0.01)
    assert delta_error(beta, GAMMA_M2, 2) == pytest.approx(0.02, abs=1e-12)


def test_params_defaults_and_phase_lock():
    params = ProtocolParams(sp=squeeze_convert(10.0), m=2)
    assert params.gamma_eff == pytest.approx(GAMMA_M2)
    assert params.beta_eff == pytest.approx(2 * SQRT_PI * 89)
    assert params.delta == 0.0
    assert lock_beta(315.0) == pytest.approx(315.4968, abs=1e-4)


def test_params_exact_mode_locks_beta_plus_delta():
    params = ProtocolParams(sp=squeeze_convert(10.0), m=2, delta_mode=DeltaMode.EXACT)
    turns = (params.beta_eff + params.delta) / (2 * SQRT_PI)
    assert turns == pytest.approx(round(turns), abs=1e-10)
    assert math.sin(params.theta_eff) == pytest.approx(GAMMA_M2 / (2 * params.beta_eff), rel=1e-12)


def test_params_reject_bad_geometry():
    with pytest.raises(GeometryError):
        ProtocolParams(sp=squeeze_convert(10.0), m=2, beta=1.0)


def test_branch_oracle_without_interaction():
    sp = squeeze_convert(10.0)
    params = ProtocolParams(sp=sp, m=2, beta=0.0, gamma=0.0, delta_mode=DeltaMode.EXACT)
    squeezed = GaussianComb((Peak(1.0, 0.0, sp.delta2),))
    for x in (0.0, 0.3):
        assert comb_fidelity(run_branch_oracle(params, x), squeezed) == pytest.approx(1.0, abs=1e-14)


def test_branch_means_follow_forced_pattern():
    params = ProtocolParams(
        sp=squeeze_convert(10.0), m=2, beta=1e4, delta_mode=DeltaMode.FORCED_VALUE, forced_delta=0.01
    )
    means = branch_means(params)
    assert np.allclose(means[:, 0], 2 * SQRT_PI * np.arange(-2, 3), atol=1e-9)
    slopes = run_branch_oracle(params, 0.0).slopes
    assert np.allclose(slopes, delta_pattern(2, 0.01), atol=1e-9)


def test_exact_geometry_residuals_and_centre_offsets():
    params = ProtocolParams(sp=squeeze_convert(10.0), m=2, beta=1e4, delta_mode=DeltaMode.EXACT)
    means = branch_means(params)
    slopes = run_branch_oracle(params, 0.0).slopes
    assert np.allclose(slopes / params.delta, [-1, 2, 3, 2, -1], atol=1e-5)

    offsets = means[:, 0] - 2 * SQRT_PI * np.arange(-2, 3)
    scale = params.beta_eff * params.theta_eff ** 3
    assert abs(offsets[0]) <= 1e-9
    assert np.allclose(offsets[1:], scale * np.array([1, 3, 5, 6]), rtol=1e-2, atol=1e-9)
    assert np.max(np.abs(offsets)) == pytest.approx(2.67e-6, rel=0.01)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("s_db", [7.0, 10.0, 12.0])
@pytest.mark.parametrize("x", [0.0, 0.05, -0.05, 0.15, -0.15])
def test_analytic_matches_branch_oracle(m, s_db, x):
    params = ProtocolParams(sp=squeeze_convert(s_db), m=m)
    assert 1 - comb_fidelity(run_analytic(params, x), run_branch_oracle(params, x)) <= 1e-9


def test_analytic_matches_branch_oracle_logical_one():
    params = ProtocolParams(sp=squeeze_convert(10.0), m=2, logical=1)
    assert 1 - comb_fidelity(run_analytic(params, 0.1), run_branch_oracle(params, 0.1)) <= 1e-9
    assert comb_fidelity(run_analytic(params, 0.0), gkp_finite(2, params.sp, logical=1)) >= 1 - 1e-12


@pytest.mark.parametrize("delta", [0.02, 0.05])
@pytest.mark.parametrize("m,s_db,x", [(1, 7.0, 0.0), (2, 10.0, 0.0), (2, 10.0, 0.15), (3, 12.0, -0.05)])
@pytest.mark.parametrize("logical", [0, 1])
def test_analytic_matches_branch_oracle_forced_delta(delta, m, s_db, x, logical):
    params = ProtocolParams(
        sp=squeeze_convert(s_db), m=m, delta_mode=DeltaMode.FORCED_VALUE, forced_delta=delta, logical=logical
    )
    assert 1 - comb_fidelity(run_analytic(params, x), run_branch_oracle(params, x)) <= 1e-9


def test_displacement_phase_values():
    j = np.arange(-2, 3)
    residual = delta_pattern(2, 0.05)
    assert np.allclose(displacement_phase(j, residual), np.exp(1j * SQRT_PI * j * residual), atol=1e-15)
    assert np.allclose(displacement_phase(j, residual, logical=1), np.exp(1j * SQRT_PI * (j + 1) * residual))
    assert np.allclose(displacement_phase(j, np.zeros(5)), 1.0)
    with pytest.raises(ValueError):
        displacement_phase(j, residual, logical=2)


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("s_db", [7.0, 8.0, 9.0, 10.0, 11.0, 12.0])
def test_envelope_at_origin(m, s_db):
    params = ProtocolParams(sp=squeeze_convert(s_db), m=m)
    weights = branch_superposition(params, 0.0).weights
    ratios = (weights / weights[m]).real
    assert np.allclose(ratios, envelope(np.arange(-m, m + 1), params.sp.kappa2), rtol=1e-9, atol=0)
    assert np.max(np.abs((weights / weights[m]).imag)) <= 1e-9


@pytest.mark.parametrize("x", [0.0, 0.1, -0.2])
def test_branch_oracle_matches_fock_oracle(x):
    params = toy_params()
    branch = to_fock(run_branch_oracle(params, x), 96)
    assert fock_fidelity(branch, run_fock_oracle(params, x, 96)) >= 1 - 1e-6


def test_fock_oracle_without_interaction():
    params = toy_params(beta=0.0, gamma=0.0)
    state = run_fock_oracle(params, 0.0, 64)
    assert fock_fidelity(state, squeezed_vacuum(params.sp.r, 64)) == pytest.approx(1.0, abs=1e-12)


def test_kerr_and_inverse_disentangle():
    params = toy_params(beta=0.0, gamma=0.0, theta=0.4)
    joint = pre_measurement_joint(params, 64)
    assert schmidt_coefficients(joint)[0] == pytest.approx(1.0, abs=1e-12)


def test_fock_oracle_density_matches_branch_density():
    params = toy_params()
    joint = pre_measurement_joint(params, 96)
    for x in (0.0, 0.35, -0.8):
        _, weight = homodyne_project(joint, "b", x)
        assert weight == pytest.approx(homodyne_density(params, x), rel=1e-6)


def test_density_single_peak_case():
    params = ProtocolParams(sp=squeeze_convert(10.0), m=0)
    for x in (0.0, 0.4, 1.3):
        assert homodyne_density(params, x) == pytest.approx(quad_amplitude(0, x) ** 2, rel=1e-12)


def test_density_normalization_and_diagonal_form():
    params = ProtocolParams(sp=squeeze_convert(10.0), m=2)
    grid = np.linspace(-12, 12, 2401)
    exact = np.array([homodyne_density(params, x) for x in grid])
    assert np.trapz(exact, grid) == pytest.approx(1.0, abs=1e-6)
    diagonal = np.array([diagonal_density(params, x) for x in grid])
    assert np.allclose(exact, diagonal, rtol=1e-9, atol=1e-15)


def test_run_record():
    params = ProtocolParams(sp=squeeze_convert(9.0), m=2, v_up=0.1)
    inside = run(params, 0.05)
    outside = run(params, -0.15)
    assert inside.accepted and not outside.accepted
    assert 0.99 <= inside.fidelity <= 1.0
    assert inside.density > 0
