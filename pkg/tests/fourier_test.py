# tests for grid wavefunctions, the conjugate transform, the fractional transform and grid densities
import math

import numpy as np
import pytest

from cv_uncertainty.common.errors import NormalizationError
from cv_uncertainty.states import (
    GridWavefunction,
    conjugate_wavefunction,
    density_on_grid,
    fock_superposition,
    frft,
    gaussian_wavefunction,
    global_momentum_density,
    global_position_density,
    mixture_density,
    parity,
    two_mode_grid_from_gaussian,
    two_mode_squeezed_covariance,
    wavefunction_from_csv,
    GaussianMarginal,
    GaussianState,
    ModeSystem,
)

N_POINTS = 1024
WINDOW = (-(N_POINTS // 2) * 0.02, 0.02)

def vacuum_density(u: np.ndarray, hbar: float = 1.0) -> np.ndarray:
    return np.exp(-(u ** 2) / hbar) / math.sqrt(math.pi * hbar)

def test_parseval():
    psi = gaussian_wavefunction(mean_x=0.7, mean_p=-0.3, var_x=0.3)
    phi = conjugate_wavefunction(psi)
    assert abs(phi.norm - psi.norm) < 1e-10

@pytest.mark.parametrize("hbar", [1.0, 2.0])
def test_vacuum_is_self_conjugate(hbar):
    phi = conjugate_wavefunction(gaussian_wavefunction(hbar=hbar))
    assert np.abs(phi.density().values - vacuum_density(phi.grid, hbar)).max() < 1e-8

def test_shift_only_changes_the_phase():
    plain = conjugate_wavefunction(gaussian_wavefunction(n_points=N_POINTS, window=WINDOW))
    shifted = conjugate_wavefunction(gaussian_wavefunction(mean_x=1.5, n_points=N_POINTS, window=WINDOW))
    assert np.abs(plain.density().values - shifted.density().values).max() < 1e-10
    assert np.abs(plain.samples - shifted.samples).max() > 1e-2

def test_double_transform_is_parity():
    psi = gaussian_wavefunction(mean_x=0.8, mean_p=0.5, n_points=N_POINTS, window=WINDOW)
    mirrored = gaussian_wavefunction(mean_x=-0.8, mean_p=-0.5, n_points=N_POINTS, window=WINDOW)
    twice = conjugate_wavefunction(conjugate_wavefunction(psi))
    assert twice.x0 == pytest.approx(psi.x0)
    assert np.abs(twice.samples - mirrored.samples).max() < 1e-10

def test_first_fock_state_density_is_self_conjugate():
    phi = conjugate_wavefunction(fock_superposition([0.0, 1.0]))
    p = phi.grid
    expected = 2.0 * p ** 2 * np.exp(-(p ** 2)) / math.sqrt(math.pi)
    assert np.abs(phi.density().values - expected).max() < 1e-8

def test_unnormalized_input_rejected():
    psi = gaussian_wavefunction()
    with pytest.raises(NormalizationError):
        conjugate_wavefunction(psi.model_construct(samples=2.0 * psi.samples, x0=psi.x0, dx=psi.dx, hbar=psi.hbar))

def test_frft_special_angles():
    psi = gaussian_wavefunction(mean_x=0.4, mean_p=0.9, var_x=0.7)
    assert frft(psi, 0.0) is psi
    quarter = frft(psi, math.pi / 2)
    assert np.abs(quarter.samples - conjugate_wavefunction(psi).samples).max() < 1e-8
    half = frft(psi, math.pi)
    assert np.array_equal(half.samples, parity(psi).samples)

@pytest.mark.parametrize("angle", [math.pi / 3, 0.3, -2.2])
def test_frft_leaves_vacuum_invariant(angle):
    rotated = frft(gaussian_wavefunction(), angle)
    assert abs(rotated.norm - 1.0) < 1e-10
    assert np.abs(rotated.density().values - vacuum_density(rotated.grid)).max() < 1e-8

def test_frft_moves_the_mean_along_the_rotated_quadrature():
    psi = gaussian_wavefunction(mean_x=1.2, mean_p=-0.5)
    theta = 1.0
    density = frft(psi, theta).density()
    assert density.mean == pytest.approx(1.2 * math.cos(theta) - 0.5 * math.sin(theta), abs=1e-8)

# =====================================================================
# densities and loaders
# =====================================================================

def test_density_on_grid_matches_gaussian_moments():
    density = density_on_grid(GaussianMarginal(mean=0.3, variance=2.0))
    assert density.total_mass == pytest.approx(1.0, abs=1e-12)
    assert density.mean == pytest.approx(0.3, abs=1e-9)
    assert density.variance == pytest.approx(2.0 + density.dx ** 2 / 12.0, rel=1e-6)

def test_mixture_keeps_the_grid():
    window = (-8.0, 0.01)
    a = density_on_grid(GaussianMarginal(mean=-2.0, variance=0.5), n_points=1601, window=window)
    b = density_on_grid(GaussianMarginal(mean=2.0, variance=0.5), n_points=1601, window=window)
    mixed = mixture_density([a, b], [1.0, 3.0])
    assert mixed.mean == pytest.approx(0.25 * -2.0 + 0.75 * 2.0, abs=1e-6)

def test_wavefunction_from_csv(tmp_path):
    psi = gaussian_wavefunction(n_points=N_POINTS, window=WINDOW)
    path = tmp_path / "psi.csv"
    rows = np.column_stack([psi.grid, psi.samples.real, psi.samples.imag])
    np.savetxt(path, rows, delimiter=",", header="x,re,im")
    loaded = wavefunction_from_csv(path)
    assert isinstance(loaded, GridWavefunction)
    assert loaded.dx == pytest.approx(psi.dx)
    assert np.allclose(loaded.samples, psi.samples, atol=1e-15)

# =====================================================================
# two-mode grids
# =====================================================================

def test_two_mode_squeezed_global_marginals():
    r = 0.5
    state = GaussianState(mean=np.zeros(4), cov=two_mode_squeezed_covariance(r), system=ModeSystem(n_modes=2))
    psi = two_mode_grid_from_gaussian(state, n_points=256)
    # x1 - x2 and p1 + p2 are squeezed; x1 + x2 and p1 - p2 anti-squeezed
    assert global_position_density(psi, "-").variance == pytest.approx(math.exp(-2 * r), rel=1e-3)
    assert global_position_density(psi, "+").variance == pytest.approx(math.exp(2 * r), rel=1e-3)
    assert global_momentum_density(psi, "+").variance == pytest.approx(math.exp(-2 * r), rel=1e-3)
    assert global_momentum_density(psi, "-").variance == pytest.approx(math.exp(2 * r), rel=1e-3)
