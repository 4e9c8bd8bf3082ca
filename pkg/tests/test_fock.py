import math

import mpmath as mp
import numpy as np
import pytest

from src.fock.hermite import hermite_function_grid, hermite_functions, quad_amplitude, scaled_hermite_functions
from src.fock.operators import cross_kerr, displace, homodyne_project, schmidt_coefficients
from src.fock.states import FockVector, basis_state, fock_fidelity, squeezed_vacuum, tensor
from src.utils.exceptions import ShapeMismatchError, TruncationError, UnsupportedOrderError


def q_variance(state: FockVector) -> float:
    lowering = np.diag(np.sqrt(np.arange(1, state.dim)), k=1)
    q = (lowering + lowering.T) / math.sqrt(2)
    return float(np.real(np.vdot(state.amps, q @ q @ state.amps)))


def test_quad_amplitude_simple_values():
    assert quad_amplitude(1, 0.0) == 0.0
    assert quad_amplitude(0, 0.0) == pytest.approx(math.pi ** -0.25, abs=1e-15)
    assert quad_amplitude(0, 0.0) == pytest.approx(0.7511255, abs=1e-7)


def test_quad_amplitude_matches_high_precision():
    mp.mp.dps = 40
    x = mp.mpf("0.7")
    reference = mp.pi ** mp.mpf(-0.25) / mp.sqrt(2 ** 4 * mp.factorial(4)) * mp.hermite(4, x) * mp.exp(-x ** 2 / 2)
    assert quad_amplitude(4, 0.7) == pytest.approx(float(reference), rel=1e-13)


def test_quad_amplitude_high_order_stays_finite():
    mp.mp.dps = 60
    x = mp.mpf("1.3")
    reference = mp.pi ** mp.mpf(-0.25) / mp.sqrt(2 ** 60 * mp.factorial(60)) * mp.hermite(60, x) * mp.exp(-x ** 2 / 2)
    assert quad_amplitude(60, 1.3) == pytest.approx(float(reference), rel=1e-10)


def test_quad_amplitude_rejects_unstable_order():
    with pytest.raises(UnsupportedOrderError) as info:
        quad_amplitude(201, 0.5)
    assert info.value.bound == 200


@pytest.mark.parametrize("n", [0, 1, 5, 12, 40])
@pytest.mark.parametrize("x", [0.3, 1.7, 2.9])
def test_quad_amplitude_parity(n, x):
    assert quad_amplitude(n, -x) == pytest.approx((-1) ** n * quad_amplitude(n, x), abs=1e-15)


@pytest.mark.parametrize("n", [0, 3, 10, 25])
def test_hermite_functions_normalized(n):
    grid = np.linspace(-15, 15, 3001)
    values = hermite_function_grid(n, grid)[:, n]
    assert np.trapz(values ** 2, grid) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("x", [0.0, 1.3, -3.0])
def test_scaled_hermite_functions_drop_the_gaussian(x):
    expected = hermite_functions(30, x) * math.exp(0.5 * x * x)
    assert np.allclose(scaled_hermite_functions(30, x), expected, rtol=1e-12, atol=1e-12 * np.max(np.abs(expected)))


def test_scaled_hermite_functions_finite_at_large_argument():
    values = scaled_hermite_functions(12, 40.0)
    assert np.all(np.isfinite(values))
    assert np.all(values > 0)
    assert hermite_functions(12, 40.0)[12] == 0.0


def test_squeezed_vacuum_zero_is_vacuum():
    state = squeezed_vacuum(0.0, 8)
    assert fock_fidelity(state, basis_state(0, 8)) == pytest.approx(1.0, abs=1e-15)


def test_squeezed_vacuum_ten_db_variance():
    r = 0.5 * math.log(10.0)
    state = squeezed_vacuum(r, 160)
    assert q_variance(state) == pytest.approx(0.05, abs=1e-8)
    assert np.all(state.amps[1::2] == 0)


def test_squeezed_vacuum_two_photon_amplitude_matches_grid():
    r = 0.5
    grid = np.linspace(-12, 12, 24001)
    squeezed = (math.pi * math.exp(-2 * r)) ** -0.25 * np.exp(-grid ** 2 * math.exp(2 * r) / 2)
    overlap = np.trapz(hermite_function_grid(2, grid)[:, 2] * squeezed, grid)
    assert squeezed_vacuum(r, 60).amps[2].real == pytest.approx(overlap, abs=1e-10)


def test_squeezed_vacuum_truncation_error_suggests_dim():
    with pytest.raises(TruncationError) as info:
        squeezed_vacuum(1.2, 20)
    assert info.value.suggested_dim > 20


def test_fock_vector_rejects_bad_input():
    with pytest.raises(ValueError):
        FockVector(np.array([1.0, np.nan]))
    with pytest.raises(ValueError):
        FockVector(np.array([1.0, 1.0]), normalized=True)


def test_displace_zero_is_identity():
    state = squeezed_vacuum(0.3, 40)
    assert displace(state, 0) is state


def test_displace_vacuum_gives_poisson():
    result = displace(basis_state(0, 40), 1.0)
    n = np.arange(20)
    expected = np.exp(-1.0) / np.array([math.factorial(k) for k in n])
    assert np.allclose(np.abs(result.amps[:20]) ** 2, expected, atol=1e-12)


def test_displace_inverse_and_norm():
    state = squeezed_vacuum(0.3, 60)
    alpha = 0.8 + 0.5j
    moved = displace(state, alpha)
    assert moved.norm_squared() == pytest.approx(1.0, abs=1e-8)
    back = displace(moved, -alpha)
    assert fock_fidelity(state, back) >= 1 - 1e-9


def test_displace_reports_truncation():
    with pytest.raises(TruncationError):
        displace(basis_state(0, 10), 3.0)


def test_displace_one_mode_of_joint_state():
    joint = tensor(basis_state(0, 40), basis_state(2, 5))
    moved = displace(joint, 1.0, mode="a")
    assert np.allclose(moved.amps[:, 2], displace(basis_state(0, 40), 1.0).amps, atol=1e-14)
    assert np.allclose(np.delete(moved.amps, 2, axis=1), 0.0)


def test_cross_kerr_identity_and_inverse():
    rng = np.random.default_rng(7)
    amps = rng.normal(size=(6, 5)) + 1j * rng.normal(size=(6, 5))
    joint = FockVector(amps).normalize()
    assert np.array_equal(cross_kerr(joint, 0.0).amps, joint.amps)
    restored = cross_kerr(cross_kerr(joint, 0.37), -0.37)
    assert np.max(np.abs(restored.amps - joint.amps)) <= 1e-15
    assert cross_kerr(joint, 0.37).norm_squared() == pytest.approx(joint.norm_squared(), abs=1e-14)


def test_cross_kerr_single_excitation_phase():
    joint = tensor(basis_state(1, 3), basis_state(1, 3))
    result = cross_kerr(joint, 0.4)
    assert result.amps[1, 1] == pytest.approx(np.exp(-0.4j), abs=1e-15)


def test_cross_kerr_needs_joint_state():
    with pytest.raises(ShapeMismatchError):
        cross_kerr(basis_state(0, 3), 0.1)


def test_homodyne_project_product_state():
    signal = squeezed_vacuum(0.2, 30)
    joint = tensor(signal, basis_state(2, 5))
    conditional, weight = homodyne_project(joint, "b", 0.4)
    amplitude = quad_amplitude(2, 0.4)
    assert np.allclose(conditional.amps, signal.amps * amplitude, atol=1e-15)
    assert weight == pytest.approx(amplitude ** 2, rel=1e-12)


def test_homodyne_project_odd_node():
    joint = tensor(basis_state(0, 3), basis_state(1, 3))
    _, weight = homodyne_project(joint, "b", 0.0)
    assert weight == 0.0


def test_homodyne_project_entangled_toy_state():
    amps = np.zeros((3, 3))
    amps[0, 0] = amps[0, 2] = 1 / math.sqrt(2)
    joint = FockVector(amps, normalized=True)
    x = 0.3
    psi0 = math.pi ** -0.25 * math.exp(-x * x / 2)
    psi2 = psi0 * (2 * x * x - 1) / math.sqrt(2)
    _, weight = homodyne_project(joint, "b", x)
    assert weight == pytest.approx((psi0 + psi2) ** 2 / 2, rel=1e-12)

    grid = np.linspace(-10, 10, 4001)
    density = [homodyne_project(joint, "b", q)[1] for q in grid]
    assert np.trapz(density, grid) == pytest.approx(1.0, abs=1e-6)


def test_fock_fidelity_values():
    state = squeezed_vacuum(0.3, 40)
    assert fock_fidelity(state, state) == pytest.approx(1.0, abs=1e-14)
    assert fock_fidelity(basis_state(0, 4), basis_state(1, 4)) == 0.0
    expected = 1 / math.cosh(0.3 - 0.5)
    assert fock_fidelity(squeezed_vacuum(0.3, 60), squeezed_vacuum(0.5, 60)) == pytest.approx(expected, abs=1e-9)


def test_fock_fidelity_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        fock_fidelity(basis_state(0, 4), basis_state(0, 5))


def test_schmidt_coefficients_of_product_state():
    joint = tensor(squeezed_vacuum(0.4, 30), basis_state(2, 5))
    values = schmidt_coefficients(joint)
    assert values[0] == pytest.approx(1.0, abs=1e-12)
    assert np.all(values[1:] < 1e-12)
