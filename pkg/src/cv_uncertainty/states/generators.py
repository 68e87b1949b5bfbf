# test-state generators: Gaussian presets, grid wavefunctions, Fock superpositions, random bona fide states
from pathlib import Path
from typing import Optional, Sequence
import numpy as np
from scipy.stats import norm

from cv_uncertainty.common.errors import ContractViolationError, DimensionMismatchError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.config.app_config import get_service_settings
from cv_uncertainty.states.symplectic import random_symplectic, rotation_symplectic
from cv_uncertainty.states.types.state_types import (
    GaussianMarginal,
    GaussianState,
    GridDensity,
    GridWavefunction,
    ModeSystem,
    TwoModeGridWavefunction,
)

# =====================================================================
# Gaussian presets
# =====================================================================

def vacuum_state(n_modes: int = 1, hbar: float = 1.0) -> GaussianState:
    return GaussianState(
        mean=np.zeros(2 * n_modes),
        cov=0.5 * hbar * np.eye(2 * n_modes),
        system=ModeSystem(n_modes=n_modes, hbar=hbar),
    )

def coherent_state(mean: Sequence[float], hbar: float = 1.0) -> GaussianState:
    """Displaced vacuum; `mean` is the xxpp first-moment vector."""
    mean = np.asarray(mean, dtype=float)
    if mean.size % 2:
        raise DimensionMismatchError(f"mean vector must have even length, got {mean.size}")
    n_modes = mean.size // 2
    return GaussianState(mean=mean, cov=0.5 * hbar * np.eye(2 * n_modes), system=ModeSystem(n_modes=n_modes, hbar=hbar))

def thermal_state(nbar: float, n_modes: int = 1, hbar: float = 1.0) -> GaussianState:
    if nbar < 0:
        raise ContractViolationError(f"mean photon number must be >= 0, got {nbar}")
    return GaussianState(
        mean=np.zeros(2 * n_modes),
        cov=0.5 * hbar * (2.0 * nbar + 1.0) * np.eye(2 * n_modes),
        system=ModeSystem(n_modes=n_modes, hbar=hbar),
    )

def squeezed_state(r: float, phi: float = 0.0, hbar: float = 1.0, nbar: float = 0.0) -> GaussianState:
    """
    Single-mode (thermal) squeezed state: x squeezed by e^{-r}, then the ellipse rotated by phi.
    """
    base = 0.5 * hbar * (2.0 * nbar + 1.0) * np.diag([np.exp(-2.0 * r), np.exp(2.0 * r)])
    R = rotation_symplectic(phi)
    cov = R @ base @ R.T
    return GaussianState(mean=np.zeros(2), cov=0.5 * (cov + cov.T), system=ModeSystem(n_modes=1, hbar=hbar))

def two_mode_squeezed_covariance(r: float, hbar: float = 1.0) -> np.ndarray:
    """
    xxpp covariance of the two-mode squeezed vacuum: (hbar/2) cosh 2r on the diagonal,
    (hbar/2) sinh 2r on <x1 x2> and -(hbar/2) sinh 2r on <p1 p2>.
    """
    c, s = 0.5 * hbar * np.cosh(2.0 * r), 0.5 * hbar * np.sinh(2.0 * r)
    cov = c * np.eye(4)
    cov[0, 1] = cov[1, 0] = s
    cov[2, 3] = cov[3, 2] = -s
    return cov

def random_bona_fide_covariance(
    n_modes: int,
    rng: np.random.Generator,
    hbar: float = 1.0,
    max_thermal: float = 1.0,
    scale: float = 0.5,
) -> np.ndarray:
    """
    V = S diag(nu, nu) S^T (hbar/2) with symplectic eigenvalues nu >= 1 and S random symplectic.
    """
    nu = 1.0 + max_thermal * rng.random(n_modes)
    S = random_symplectic(n_modes, rng, scale=scale)
    cov = 0.5 * hbar * S @ np.diag(np.concatenate([nu, nu])) @ S.T
    return 0.5 * (cov + cov.T)

def random_gaussian_state(
    n_modes: int,
    rng: np.random.Generator,
    hbar: float = 1.0,
    max_thermal: float = 1.0,
    max_displacement: float = 1.0,
) -> GaussianState:
    cov = random_bona_fide_covariance(n_modes, rng, hbar=hbar, max_thermal=max_thermal)
    mean = max_displacement * np.sqrt(hbar) * rng.uniform(-1.0, 1.0, size=2 * n_modes)
    return GaussianState(mean=mean, cov=cov, system=ModeSystem(n_modes=n_modes, hbar=hbar))

# =====================================================================
# Grid wavefunctions
# =====================================================================

def default_window(
    mean_x: float,
    std_x: float,
    mean_p: float,
    std_p: float,
    hbar: float,
    n_points: Optional[int] = None,
    tail_mass: Optional[float] = None,
) -> tuple[float, float, int]:
    """
    Centered-at-zero window wide enough that the mass outside is below tail_mass in x,
    and (via dp = 2 pi hbar / (N dx)) in p as well. Returns (x0, dx, N).
    """
    settings = get_service_settings()
    n_points = n_points or settings.GRID_POINTS
    tail_mass = tail_mass or settings.GRID_TAIL_MASS
    z = float(norm.isf(0.5 * tail_mass))
    half_width = abs(mean_x) + 1.25 * z * std_x
    dx = 2.0 * half_width / n_points
    p_reach = np.pi * hbar / dx
    if p_reach < abs(mean_p) + z * std_p:
        logger.warning(
            f"grid of {n_points} points resolves |p| <= {p_reach:.4g}, below the requested "
            f"{abs(mean_p) + z * std_p:.4g}; increase GRID_POINTS"
        )
    # centered so the conjugate grid (and a double transform) lines up with this one
    return -(n_points // 2) * dx, dx, n_points

def gaussian_wavefunction(
    mean_x: float = 0.0,
    mean_p: float = 0.0,
    var_x: Optional[float] = None,
    cov_xp: float = 0.0,
    hbar: float = 1.0,
    n_points: Optional[int] = None,
    window: Optional[tuple[float, float]] = None,
) -> GridWavefunction:
    """
    Pure Gaussian psi ~ exp(-(1 - i kappa)(x - mean_x)^2 / (4 var_x) + i mean_p x / hbar), kappa = 2 cov_xp / hbar.
    `window` = (x0, dx) overrides the automatic grid.
    """
    var_x = 0.5 * hbar if var_x is None else var_x
    if var_x <= 0:
        raise ContractViolationError(f"position variance must be positive, got {var_x}")
    var_p = (0.25 * hbar ** 2 + cov_xp ** 2) / var_x
    if window is None:
        x0, dx, n = default_window(mean_x, np.sqrt(var_x), mean_p, np.sqrt(var_p), hbar, n_points)
    else:
        x0, dx = window
        n = n_points or get_service_settings().GRID_POINTS
    x = x0 + dx * np.arange(n)
    kappa = 2.0 * cov_xp / hbar
    psi = np.exp(-(1.0 - 1j * kappa) * (x - mean_x) ** 2 / (4.0 * var_x) + 1j * mean_p * x / hbar)
    return GridWavefunction.normalized(psi, x0=x0, dx=dx, hbar=hbar)

def wavefunction_from_gaussian_state(
    state: GaussianState,
    n_points: Optional[int] = None,
    window: Optional[tuple[float, float]] = None,
) -> GridWavefunction:
    """Grid wavefunction of a pure single-mode Gaussian state."""
    if state.n_modes != 1:
        raise ContractViolationError("only single-mode Gaussian states have a 1-D grid wavefunction")
    det = float(np.linalg.det(state.cov))
    if abs(det - 0.25 * state.hbar ** 2) > 1e-9 * max(1.0, det):
        raise ContractViolationError(f"state is mixed (det V = {det:.6g} != hbar^2/4); no wavefunction")
    return gaussian_wavefunction(
        mean_x=float(state.mean[0]),
        mean_p=float(state.mean[1]),
        var_x=float(state.cov[0, 0]),
        cov_xp=float(state.cov[0, 1]),
        hbar=state.hbar,
        n_points=n_points,
        window=window,
    )

def hermite_functions(n_max: int, x: np.ndarray, hbar: float = 1.0) -> np.ndarray:
    """
    Normalized Hermite functions psi_0..psi_n_max at x via the stable three-term recurrence,
    psi_{n+1} = sqrt(2/(n+1)) xi psi_n - sqrt(n/(n+1)) psi_{n-1}, xi = x / sqrt(hbar).
    """
    xi = np.asarray(x, dtype=float) / np.sqrt(hbar)
    out = np.zeros((n_max + 1, xi.size))
    out[0] = (np.pi * hbar) ** -0.25 * np.exp(-0.5 * xi ** 2)
    if n_max >= 1:
        out[1] = np.sqrt(2.0) * xi * out[0]
    for n in range(1, n_max):
        out[n + 1] = np.sqrt(2.0 / (n + 1)) * xi * out[n] - np.sqrt(n / (n + 1)) * out[n - 1]
    return out

def fock_superposition(
    coefficients: Sequence[complex],
    hbar: float = 1.0,
    n_points: Optional[int] = None,
) -> GridWavefunction:
    """sum_n c_n |n> on a grid; coefficients are renormalized."""
    coeffs = np.asarray(coefficients, dtype=complex)
    if coeffs.size == 0 or not np.any(coeffs):
        raise ContractViolationError("fock_superposition needs at least one nonzero coefficient")
    coeffs = coeffs / np.linalg.norm(coeffs)
    n_max = coeffs.size - 1
    n_points = n_points or get_service_settings().GRID_POINTS
    # classical turning point of the highest level plus a Gaussian-tail margin
    half_width = np.sqrt(hbar) * (np.sqrt(2.0 * n_max + 1.0) + 7.0)
    dx = 2.0 * half_width / n_points
    x0 = -(n_points // 2) * dx
    x = x0 + dx * np.arange(n_points)
    psi = coeffs @ hermite_functions(n_max, x, hbar)
    return GridWavefunction.normalized(psi, x0=x0, dx=dx, hbar=hbar)

def random_fock_superposition(
    rng: np.random.Generator,
    n_max: int = 6,
    hbar: float = 1.0,
    n_points: Optional[int] = None,
) -> GridWavefunction:
    coeffs = rng.normal(size=n_max + 1) + 1j * rng.normal(size=n_max + 1)
    return fock_superposition(coeffs, hbar=hbar, n_points=n_points)

def wavefunction_from_csv(path: str | Path, hbar: float = 1.0, renormalize: bool = False) -> GridWavefunction:
    """
    Loads a uniform-grid wavefunction from CSV columns (x, Re psi, Im psi); the Im column is optional.
    """
    data = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    if data.shape[1] not in (2, 3):
        raise DimensionMismatchError(f"{path}: expected columns (x, Re psi[, Im psi]), got {data.shape[1]}")
    x = data[:, 0]
    spacing = np.diff(x)
    if spacing.size == 0 or not np.allclose(spacing, spacing[0], rtol=1e-9, atol=0.0) or spacing[0] <= 0:
        raise ContractViolationError(f"{path}: x column must be uniform and increasing")
    psi = data[:, 1] + (1j * data[:, 2] if data.shape[1] == 3 else 0.0)
    if renormalize:
        return GridWavefunction.normalized(psi, x0=float(x[0]), dx=float(spacing[0]), hbar=hbar)
    return GridWavefunction(samples=psi, x0=float(x[0]), dx=float(spacing[0]), hbar=hbar)

# =====================================================================
# Grid densities
# =====================================================================

def density_on_grid(
    marginal: GaussianMarginal,
    n_points: Optional[int] = None,
    window: Optional[tuple[float, float]] = None,
    hbar: float = 1.0,
) -> GridDensity:
    """Samples a Gaussian marginal onto a grid (cell-average values, so the grid density is exactly normalized)."""
    n_points = n_points or get_service_settings().GRID_POINTS
    if window is None:
        z = float(norm.isf(0.5 * get_service_settings().GRID_TAIL_MASS))
        half_width = 1.25 * z * marginal.std
        dx = 2.0 * half_width / n_points
        x0 = marginal.mean - half_width + 0.5 * dx
    else:
        x0, dx = window
    edges = x0 - 0.5 * dx + dx * np.arange(n_points + 1)
    cdf = norm.cdf(edges, loc=marginal.mean, scale=marginal.std)
    return GridDensity.normalized(np.diff(cdf) / dx, x0=x0, dx=dx, hbar=hbar)

def mixture_density(components: Sequence[GridDensity], weights: Sequence[float]) -> GridDensity:
    """Convex combination of densities sharing one grid."""
    weights = np.asarray(weights, dtype=float)
    if len(components) != weights.size or weights.size == 0:
        raise DimensionMismatchError("need one weight per mixture component")
    if np.any(weights < 0):
        raise ContractViolationError("mixture weights must be nonnegative")
    first = components[0]
    for comp in components[1:]:
        if comp.n_points != first.n_points or comp.x0 != first.x0 or comp.dx != first.dx:
            raise DimensionMismatchError("mixture components must share the same grid")
    values = sum(w * c.values for w, c in zip(weights / weights.sum(), components))
    return GridDensity.normalized(values, x0=first.x0, dx=first.dx, hbar=first.hbar)

# =====================================================================
# Two-mode grids
# =====================================================================

def two_mode_grid_from_gaussian(state: GaussianState, n_points: Optional[int] = None) -> TwoModeGridWavefunction:
    """
    psi(x1, x2) ~ exp(-x^T V_xx^{-1} x / 4) for a pure zero-mean two-mode Gaussian with no x-p correlations
    (e.g. the two-mode squeezed vacuum).
    """
    if state.n_modes != 2:
        raise ContractViolationError("two_mode_grid_from_gaussian needs a two-mode state")
    V = state.cov
    Vxx, Vxp, Vpp = V[:2, :2], V[:2, 2:], V[2:, 2:]
    if np.abs(Vxp).max() > 1e-12 or np.abs(state.mean).max() > 1e-12:
        raise ContractViolationError("only zero-mean states without x-p correlations are supported")
    inv = np.linalg.inv(Vxx)
    if not np.allclose(Vpp, 0.25 * state.hbar ** 2 * inv, rtol=1e-9, atol=1e-12):
        raise ContractViolationError("state is not pure; no two-mode wavefunction")
    n_points = n_points or get_service_settings().TWO_MODE_GRID_POINTS
    z = float(norm.isf(0.5 * get_service_settings().GRID_TAIL_MASS))
    half_width = 1.25 * z * np.sqrt(np.linalg.eigvalsh(Vxx).max())
    dx = 2.0 * half_width / n_points
    x0 = -(n_points // 2) * dx
    x = x0 + dx * np.arange(n_points)
    X1, X2 = np.meshgrid(x, x, indexing="ij")
    quad = inv[0, 0] * X1 ** 2 + 2.0 * inv[0, 1] * X1 * X2 + inv[1, 1] * X2 ** 2
    psi = np.exp(-0.25 * quad)
    psi = psi / np.sqrt(np.sum(np.abs(psi) ** 2) * dx ** 2)
    return TwoModeGridWavefunction(samples=psi, x0=x0, dx=dx, hbar=state.hbar)
