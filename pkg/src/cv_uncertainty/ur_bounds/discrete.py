# Deutsch and Maassen-Uffink bounds for finite-dimensional measurement bases
import math
from typing import Optional
import numpy as np

from cv_uncertainty.common.errors import ContractViolationError, DimensionMismatchError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.entropy.types.entropy_types import ConjugatePair

UNITARY_TOLERANCE = 1e-10

def discrete_mu_bounds(U: np.ndarray, pair: Optional[ConjugatePair] = None) -> tuple[float, float]:
    """
    (deutsch, mu) for the bases related by U, with c1 = max |U_ij|^2:
    mu = -ln c1 (valid for every conjugate Renyi pair), deutsch = -2 ln((1 + sqrt c1)/2) (Shannon) <= mu.
    """
    U = np.asarray(U, dtype=complex)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {U.shape}")
    defect = float(np.abs(U.conj().T @ U - np.eye(U.shape[0])).max())
    if defect > UNITARY_TOLERANCE:
        logger.error(f"discrete_mu_bounds: unitarity defect {defect:.3e}")
        raise ContractViolationError(f"matrix is not unitary (max |U^dag U - I| = {defect:.3e})")
    if pair is not None and not pair.is_shannon:
        logger.debug(f"discrete_mu_bounds: alpha={pair.alpha}; the Deutsch value applies to Shannon only")
    c1 = min(float((np.abs(U) ** 2).max()), 1.0)
    mu = -math.log(c1)
    deutsch = -2.0 * math.log(0.5 * (1.0 + math.sqrt(c1)))
    return deutsch, mu
