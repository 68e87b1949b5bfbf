# hbar-scaled unitary Fourier and fractional Fourier transforms of grid wavefunctions
# NOTE: both are exact DFT quadratures of the continuous kernels; output grids carry the mapping dp = 2 pi hbar / (N dx)
import numpy as np

from cv_uncertainty.common.errors import NormalizationError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.states.types.state_types import GridWavefunction, NORMALIZATION_TOLERANCE

# below this |sin(theta)| the single-chirp output grid collapses; split the angle instead
_MIN_ABS_SIN = 1.0 / np.sqrt(2.0)
_ANGLE_SNAP = 1e-12

def _chirp_transform(
    samples: np.ndarray,
    x0: float,
    dx: float,
    hbar: float,
    cos_t: float,
    sin_t: float,
    axis: int = -1,
) -> tuple[np.ndarray, float, float]:
    """
    phi(u_k) = A dx sum_j exp(i [cot (u_k^2 + x_j^2)/2 - u_k x_j / sin] / hbar) psi_j,
    A = sqrt((1 - i cot) / (2 pi hbar)), on the centered output grid du = 2 pi hbar |sin| / (N dx).
    Returns (phi, u0, du).
    """
    samples = np.moveaxis(np.asarray(samples, dtype=complex), axis, -1)
    n = samples.shape[-1]
    cot = cos_t / sin_t
    sign = 1.0 if sin_t > 0 else -1.0
    du = 2.0 * np.pi * hbar * abs(sin_t) / (n * dx)
    u0 = -(n // 2) * du
    idx = np.arange(n)
    x = x0 + dx * idx
    u = u0 + du * idx

    pre = np.exp(0.5j * cot * x ** 2 / hbar) * np.exp(-1j * u0 * idx * dx / (hbar * sin_t))
    if sign > 0:
        core = np.fft.fft(samples * pre, axis=-1)
    else:
        core = n * np.fft.ifft(samples * pre, axis=-1)
    post = np.exp(0.5j * cot * u ** 2 / hbar) * np.exp(-1j * (u0 * x0 + idx * du * x0) / (hbar * sin_t))
    amplitude = np.sqrt((1.0 - 1j * cot) / (2.0 * np.pi * hbar + 0j))
    phi = amplitude * dx * core * post
    return np.moveaxis(phi, -1, axis), float(u0), float(du)

def _require_normalized(psi: GridWavefunction) -> None:
    norm = psi.norm
    if abs(norm - 1.0) > NORMALIZATION_TOLERANCE:
        logger.error(f"transform called on a wavefunction with norm {norm:.12g}")
        raise NormalizationError(f"input wavefunction has norm {norm:.12g}")

def conjugate_wavefunction(psi: GridWavefunction) -> GridWavefunction:
    """
    Momentum representation phi(p) = (2 pi hbar)^(-1/2) int exp(-i p x / hbar) psi(x) dx.
    Applying it twice returns psi(-x) on the centered grid.
    """
    _require_normalized(psi)
    phi, p0, dp = _chirp_transform(psi.samples, psi.x0, psi.dx, psi.hbar, 0.0, 1.0)
    return GridWavefunction(samples=phi, x0=p0, dx=dp, hbar=psi.hbar)

def _inverse_conjugate(psi: GridWavefunction) -> GridWavefunction:
    phi, p0, dp = _chirp_transform(psi.samples, psi.x0, psi.dx, psi.hbar, 0.0, -1.0)
    return GridWavefunction(samples=phi, x0=p0, dx=dp, hbar=psi.hbar)

def parity(psi: GridWavefunction) -> GridWavefunction:
    """psi(x) -> psi(-x), exactly, on the mirrored grid."""
    x_last = psi.x0 + (psi.n_points - 1) * psi.dx
    return GridWavefunction(samples=psi.samples[::-1], x0=-x_last, dx=psi.dx, hbar=psi.hbar)

def _reduce_angle(angle: float) -> float:
    """Maps angle onto [-pi, pi)."""
    return float((angle + np.pi) % (2.0 * np.pi) - np.pi)

def frft(psi: GridWavefunction, angle: float) -> GridWavefunction:
    """
    Fractional Fourier transform: representation in u = x cos(angle) + p sin(angle).
    angle 0 is the identity, pi/2 the momentum representation, pi the parity.
    """
    _require_normalized(psi)
    theta = _reduce_angle(angle)

    if abs(theta) < _ANGLE_SNAP:
        return psi
    if abs(theta - np.pi / 2) < _ANGLE_SNAP:
        return conjugate_wavefunction(psi)
    if abs(theta + np.pi / 2) < _ANGLE_SNAP:
        return _inverse_conjugate(psi)
    if abs(abs(theta) - np.pi) < _ANGLE_SNAP:
        return parity(psi)

    sin_t, cos_t = float(np.sin(theta)), float(np.cos(theta))
    if abs(sin_t) < _MIN_ABS_SIN:
        # F^theta = F^(pi/2) F^(theta - pi/2); the first leg has |sin| >= 1/sqrt(2)
        logger.debug(f"frft: splitting angle {theta:.6g} into {theta - np.pi / 2:.6g} + pi/2")
        return conjugate_wavefunction(frft(psi, theta - np.pi / 2))

    phi, u0, du = _chirp_transform(psi.samples, psi.x0, psi.dx, psi.hbar, cos_t, sin_t)
    return GridWavefunction(samples=phi, x0=u0, dx=du, hbar=psi.hbar)
