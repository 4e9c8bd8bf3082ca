import math

import mpmath as mp
import numpy as np
import pytest

from src.baseline.conventional import (
    BaselineParams,
    conventional_wavefn_p,
    conventional_wavefn_q,
    eta_n,
    fourier_to_p,
    poisson_tail,
    series_cutoff,
)
from src.baseline.spacing import peak_spacing
from src.comb.squeeze import squeeze_convert
from src.comb.states import SQRT_PI, gkp_finite
from src.utils.exceptions import InsufficientPeaksError, SeriesCutoffError

Q_GRID = np.linspace(-4, 4, 1601)
P_GRID = np.linspace(-10, 30, 4001)


def test_eta_zeroth_order():
    assert eta_n(2.0, 0.3, 0) == pytest.approx(4.0 * math.exp((4.0 + 0.09) / 2), rel=1e-13)


def test_eta_odd_order_vanishes_at_origin():
    assert eta_n(2.0, 0.0, 1) == 0.0


def test_eta_matches_high_precision():
    mp.mp.dps = 40
    alpha, x = mp.mpf(2), mp.mpf("0.4")
    reference = alpha ** 2 * mp.hermite(5, x) / (2 ** mp.mpf(2.5) * mp.factorial(5)) * mp.exp((alpha ** 2 + x ** 2) / 2)
    assert eta_n(2.0, 0.4, 5) == pytest.approx(float(reference), rel=1e-12)


def test_series_cutoff_is_smallest():
    n_max = series_cutoff(2.0)
    assert poisson_tail(2.0, n_max) < 1e-12
    assert poisson_tail(2.0, n_max - 1) >= 1e-12


def test_params_reject_short_series():
    with pytest.raises(SeriesCutoffError):
        BaselineParams(alpha=2.0, tau=2.0, n_max=5)


def test_no_interaction_gives_single_gaussian():
    params = BaselineParams(alpha=2.0, tau=0.0)
    density = np.abs(conventional_wavefn_q(params, Q_GRID)) ** 2
    assert np.allclose(density, np.exp(-Q_GRID ** 2) / math.sqrt(math.pi), atol=1e-7)
    with pytest.raises(InsufficientPeaksError):
        peak_spacing(density, Q_GRID)


def test_profiles_are_normalized():
    params = BaselineParams(alpha=2.0, tau=2.0)
    assert np.trapz(np.abs(conventional_wavefn_q(params, Q_GRID)) ** 2, Q_GRID) == pytest.approx(1.0, abs=1e-8)
    assert np.trapz(np.abs(conventional_wavefn_p(params, P_GRID)) ** 2, P_GRID) == pytest.approx(1.0, abs=1e-8)


def test_codeword_spacing_mismatch():
    params = BaselineParams(alpha=2.0, tau=2.0)
    q_spacing = peak_spacing(np.abs(conventional_wavefn_q(params, Q_GRID)) ** 2, Q_GRID)
    p_spacing = peak_spacing(np.abs(conventional_wavefn_p(params, P_GRID)) ** 2, P_GRID)
    assert q_spacing == pytest.approx(0.5, abs=0.02)
    assert p_spacing == pytest.approx(2 * math.pi * params.tau, abs=0.01)
    assert abs(q_spacing - p_spacing) > 1.0
    assert abs(q_spacing - SQRT_PI) > 0.5 * SQRT_PI
    assert abs(p_spacing - SQRT_PI) > 0.5 * SQRT_PI


def test_coherent_weights_variant_differs():
    printed = BaselineParams(alpha=2.0, tau=2.0, x=0.3)
    coherent = BaselineParams(alpha=2.0, tau=2.0, x=0.3, weights="coherent")
    a = conventional_wavefn_p(printed, P_GRID)
    b = conventional_wavefn_p(coherent, P_GRID)
    assert np.max(np.abs(np.abs(a) - np.abs(b))) > 1e-3


def test_fourier_pair_consistency():
    params = BaselineParams(alpha=2.0, tau=2.0)
    q_grid = np.linspace(-12, 12, 2401)
    p_grid = np.linspace(-10, 100, 5501)
    transformed = fourier_to_p(q_grid, conventional_wavefn_q(params, q_grid), p_grid)
    direct = conventional_wavefn_p(params, p_grid)
    deviation = math.sqrt(np.trapz(np.abs(transformed - direct) ** 2, p_grid))
    assert deviation <= 1e-6


def test_peak_spacing_on_gkp_comb():
    grid = np.linspace(-10, 10, 4001)
    density = np.abs(gkp_finite(2, squeeze_convert(10.0)).wavefunction(grid)) ** 2
    assert peak_spacing(density, grid) == pytest.approx(2 * SQRT_PI, abs=grid[1] - grid[0])
