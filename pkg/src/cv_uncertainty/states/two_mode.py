# marginals of the global quadratures x1 +/- x2 and p1 +/- p2 for two-mode grid wavefunctions
from typing import Literal
import numpy as np

from cv_uncertainty.states.fourier import _chirp_transform
from cv_uncertainty.states.types.state_types import GridDensity, TwoModeGridWavefunction

Sign = Literal["+", "-"]

def _line_integrate(prob: np.ndarray, x0: float, dx: float, sign: Sign, hbar: float) -> GridDensity:
    """
    Density of w = x1 +/- x2 by summing |psi|^2 dx^2 along the orthogonal lines i -/+ j = const.
    On a square grid these lines hit grid points exactly, spaced dx in w.
    """
    n = prob.shape[0]
    i, j = np.indices(prob.shape)
    if sign == "+":
        bins = (i + j).ravel()
        w0 = 2.0 * x0
    else:
        bins = (i - j + n - 1).ravel()
        w0 = -(n - 1) * dx
    mass = np.bincount(bins, weights=prob.ravel() * dx * dx, minlength=2 * n - 1)
    return GridDensity.normalized(mass / dx, x0=w0, dx=dx, hbar=hbar)

def global_position_density(psi: TwoModeGridWavefunction, sign: Sign) -> GridDensity:
    """Marginal of u_+/- = x1 +/- x2."""
    return _line_integrate(np.abs(psi.samples) ** 2, psi.x0, psi.dx, sign, psi.hbar)

def global_momentum_density(psi: TwoModeGridWavefunction, sign: Sign) -> GridDensity:
    """Marginal of v_+/- = p1 +/- p2, via the unitary transform along both axes."""
    phi, p0, dp = _chirp_transform(psi.samples, psi.x0, psi.dx, psi.hbar, 0.0, 1.0, axis=0)
    phi, _, _ = _chirp_transform(phi, psi.x0, psi.dx, psi.hbar, 0.0, 1.0, axis=1)
    return _line_integrate(np.abs(phi) ** 2, p0, dp, sign, psi.hbar)
