# closed-form operations on Gaussian states: marginals and the covariance-level uncertainty checks
import numpy as np

from cv_uncertainty.common.errors import ContractViolationError, DimensionMismatchError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.common.types.reports import URKind, URReport
from cv_uncertainty.states.types.state_types import (
    GaussianMarginal,
    GaussianState,
    QuadratureCoeffs,
    symplectic_form,
)

BONA_FIDE_TOLERANCE = 1e-10
DET_TOLERANCE = 1e-12

def gaussian_marginal(state: GaussianState, d: QuadratureCoeffs) -> GaussianMarginal:
    """
    Marginal of u = d^T x_hat: N(d^T <x_hat>, d^T V d).
    """
    if d.n_modes != state.n_modes:
        logger.error(f"gaussian_marginal: {len(d.d)}-vector on a {state.n_modes}-mode state")
        raise DimensionMismatchError(
            f"quadrature vector of length {len(d.d)} does not match a {state.n_modes}-mode state"
        )
    vec = d.vector
    return GaussianMarginal(mean=float(vec @ state.mean), variance=float(vec @ state.cov @ vec))

def bona_fide_check(state: GaussianState) -> URReport:
    """
    V + (i hbar/2) J >= 0. lhs = margin = smallest eigenvalue of the Hermitian matrix, bound 0.
    """
    cov = state.cov
    if not np.allclose(cov, cov.T, rtol=0.0, atol=1e-12):
        raise ContractViolationError("bona_fide_check needs a symmetric covariance matrix")
    hermitian = cov + 0.5j * state.hbar * symplectic_form(state.n_modes)
    smallest = float(np.linalg.eigvalsh(hermitian).min())
    # snap the saturating case (pure states) onto exactly zero
    if abs(smallest) < 1e-14 * max(1.0, float(np.abs(cov).max())):
        smallest = 0.0
    return URReport.evaluate(URKind.BONA_FIDE, smallest, 0.0, tolerance=BONA_FIDE_TOLERANCE)

def det_cov_check(state: GaussianState, mode: int) -> URReport:
    """
    Single-mode check sqrt(det V_mode) >= hbar/2, equivalent to the bona fide condition for one mode.
    """
    if not 0 <= mode < state.n_modes:
        logger.error(f"det_cov_check: mode {mode} outside 0..{state.n_modes - 1}")
        raise ContractViolationError(f"mode index {mode} out of range for a {state.n_modes}-mode state")
    idx = [mode, state.n_modes + mode]
    block = state.cov[np.ix_(idx, idx)]
    lhs = float(np.sqrt(max(np.linalg.det(block), 0.0)))
    return URReport.evaluate(URKind.DET_COV, lhs, state.hbar / 2.0, tolerance=DET_TOLERANCE)
