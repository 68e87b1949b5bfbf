# symplectic bookkeeping in xxpp ordering: commutators, random symplectic maps, state transforms
import numpy as np
from scipy.linalg import expm

from cv_uncertainty.common.errors import DimensionMismatchError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.states.types.state_types import (
    GaussianState,
    QuadratureCoeffs,
    symplectic_form,
)

def commutator_gamma(du: QuadratureCoeffs, dv: QuadratureCoeffs) -> float:
    """
    gamma = du^T J dv, so that [d_u^T x_hat, d_v^T x_hat] = i hbar gamma.
    """
    if len(du.d) != len(dv.d):
        logger.error(f"commutator_gamma got vectors of length {len(du.d)} and {len(dv.d)}")
        raise DimensionMismatchError(
            f"quadrature vectors must have equal length 2n, got {len(du.d)} and {len(dv.d)}"
        )
    return float(du.vector @ symplectic_form(du.n_modes) @ dv.vector)

def is_symplectic(S: np.ndarray, tol: float = 1e-10) -> bool:
    S = np.asarray(S, dtype=float)
    n = S.shape[0] // 2
    J = symplectic_form(n)
    return bool(np.allclose(S @ J @ S.T, J, rtol=0.0, atol=tol))

def random_symplectic(n_modes: int, rng: np.random.Generator, scale: float = 0.5) -> np.ndarray:
    """
    S = expm(J H) with H a random symmetric generator; J H is Hamiltonian, so S is symplectic.
    """
    dim = 2 * n_modes
    A = rng.normal(scale=scale, size=(dim, dim))
    H = 0.5 * (A + A.T)
    return expm(symplectic_form(n_modes) @ H)

def rotation_symplectic(theta: float, n_modes: int = 1, mode: int = 0) -> np.ndarray:
    """
    Phase-space rotation of one mode: x -> x cos + p sin, p -> -x sin + p cos.
    """
    S = np.eye(2 * n_modes)
    c, s = np.cos(theta), np.sin(theta)
    ix, ip = mode, n_modes + mode
    S[ix, ix], S[ix, ip] = c, s
    S[ip, ix], S[ip, ip] = -s, c
    return S

def squeezing_symplectic(r: float, n_modes: int = 1, mode: int = 0) -> np.ndarray:
    S = np.eye(2 * n_modes)
    S[mode, mode] = np.exp(-r)
    S[n_modes + mode, n_modes + mode] = np.exp(r)
    return S

def transform_state(state: GaussianState, S: np.ndarray) -> GaussianState:
    """Gaussian unitary action on moments: mean -> S mean, V -> S V S^T."""
    S = np.asarray(S, dtype=float)
    dim = 2 * state.n_modes
    if S.shape != (dim, dim):
        raise DimensionMismatchError(f"symplectic matrix must be ({dim},{dim}), got {S.shape}")
    cov = S @ state.cov @ S.T
    return GaussianState(mean=S @ state.mean, cov=0.5 * (cov + cov.T), system=state.system)

def symplectic_eigenvalues(cov: np.ndarray, hbar: float = 1.0) -> np.ndarray:
    """
    Symplectic spectrum of V in units of hbar/2 (vacuum -> 1); bona fide iff all >= 1.
    Each value appears once (the +/- pairs of i J V are folded).
    """
    cov = np.asarray(cov, dtype=float)
    n = cov.shape[0] // 2
    eigs = np.abs(np.linalg.eigvals(1j * symplectic_form(n) @ cov))
    return np.sort(eigs)[::2] / (hbar / 2.0)
