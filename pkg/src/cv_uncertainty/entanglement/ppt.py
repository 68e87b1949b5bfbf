# partial transposition and two-mode test states
from typing import Optional
import numpy as np

from cv_uncertainty.entanglement.types.entanglement_types import PPT_REFLECTION, TwoModeGaussian
from cv_uncertainty.states.generators import random_bona_fide_covariance, two_mode_squeezed_covariance
from cv_uncertainty.states.types.state_types import GaussianState, ModeSystem

def ppt_transform(state: GaussianState) -> TwoModeGaussian:
    """
    Partial transpose of mode 2 as the momentum reflection p2 -> -p2: V -> L V L, L = diag(1, 1, 1, -1).
    The result need not be bona fide; an involution.
    """
    state = TwoModeGaussian.from_state(state)
    cov = PPT_REFLECTION @ state.cov @ PPT_REFLECTION
    return TwoModeGaussian(mean=PPT_REFLECTION @ state.mean, cov=cov, system=state.system)

def two_mode_squeezed(r: float, hbar: float = 1.0) -> TwoModeGaussian:
    """Two-mode squeezed vacuum; x1 - x2 and p1 + p2 are squeezed to variance hbar e^{-2r}."""
    return TwoModeGaussian(
        mean=np.zeros(4),
        cov=two_mode_squeezed_covariance(r, hbar),
        system=ModeSystem(n_modes=2, hbar=hbar),
    )

def random_separable_gaussian(
    rng: np.random.Generator,
    hbar: float = 1.0,
    max_thermal: float = 1.0,
    correlation: float = 0.5,
    max_displacement: float = 1.0,
) -> TwoModeGaussian:
    """
    V = V1 (+) V2 + C with V1, V2 random bona fide single-mode covariances and C = A A^T (A Gaussian, scale
    `correlation` sqrt(hbar)), i.e. a Gaussian mixture of displaced product states.
    """
    v1 = random_bona_fide_covariance(1, rng, hbar=hbar, max_thermal=max_thermal)
    v2 = random_bona_fide_covariance(1, rng, hbar=hbar, max_thermal=max_thermal)
    cov = np.zeros((4, 4))
    # single-mode (x, p) blocks sit on indices (0, 2) and (1, 3) in xxpp order
    cov[np.ix_([0, 2], [0, 2])] = v1
    cov[np.ix_([1, 3], [1, 3])] = v2
    a = correlation * np.sqrt(hbar) * rng.standard_normal((4, 4))
    cov = cov + a @ a.T
    mean = max_displacement * np.sqrt(hbar) * rng.uniform(-1.0, 1.0, 4)
    return TwoModeGaussian(mean=mean, cov=0.5 * (cov + cov.T), system=ModeSystem(n_modes=2, hbar=hbar))
