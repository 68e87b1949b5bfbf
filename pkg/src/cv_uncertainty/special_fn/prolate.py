# radial prolate spheroidal function R_00(c, 1) via the even-Legendre expansion of the angular function
import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.linalg import eigh_tridiagonal, eigvalsh
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from cv_uncertainty.common.errors import ContractViolationError, ConvergenceError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.config.app_config import get_service_settings
from cv_uncertainty.special_fn.memo import quantized_cache

def _legendre_at_zero(n_terms: int) -> np.ndarray:
    """P_r(0) for r = 0, 2, 4, ...: P_0(0) = 1, P_{r+2}(0) = -P_r(0) (r+1)/(r+2)."""
    vals = np.empty(n_terms)
    vals[0] = 1.0
    for k in range(1, n_terms):
        r = 2 * (k - 1)
        vals[k] = -vals[k - 1] * (r + 1) / (r + 2)
    return vals

def prolate_matrix(c: float, n_terms: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Symmetric tridiagonal matrix of -d/dn (1 - n^2) d/dn + c^2 n^2 in the orthonormal even-Legendre
    basis sqrt((2r+1)/2) P_r, r = 0, 2, ..., 2(n_terms-1). Returns (diagonal, off-diagonal).
    """
    r = 2.0 * np.arange(n_terms)
    c2 = c * c
    diag = r * (r + 1) + c2 * (2 * r * r + 2 * r - 1) / ((2 * r - 1) * (2 * r + 3))
    rr = r[:-1]
    off = c2 * (rr + 1) * (rr + 2) / ((2 * rr + 3) * np.sqrt((2 * rr + 1) * (2 * rr + 5)))
    return diag, off

class ProlateEvaluator:
    """
    R_00(c, 1) from the lowest eigenvector of the angular prolate problem.

    With S_00(n) = sum d_r P_r(n), the finite Fourier transform eigen-relation
    int_{-1}^{1} exp(i c x n) S_00(n) dn = 2 R_00(c, 1) S_00(x) at x = 0 gives
    R_00(c, 1) = d_0 / sum_r d_r P_r(0), independent of how S_00 is normalized.
    The truncation doubles (tenacity retry) until the trailing coefficient drops below `tolerance`.
    """

    def __init__(
        self,
        truncation: int | None = None,
        tolerance: float | None = None,
        max_attempts: int | None = None,
    ):
        settings = get_service_settings()
        self.truncation = truncation or settings.PROLATE_MIN_TRUNCATION
        self.tolerance = tolerance or settings.PROLATE_TAIL_TOLERANCE
        self.max_attempts = max_attempts or settings.PROLATE_MAX_ATTEMPTS
        if self.truncation < 16:
            raise ContractViolationError(f"prolate truncation must be >= 16, got {self.truncation}")

    def coefficients_at(self, c: float, n_terms: int) -> np.ndarray:
        """Legendre coefficients d_r (r even) of S_00 for a fixed truncation, unit 2-norm in the orthonormal basis."""
        diag, off = prolate_matrix(c, n_terms)
        _, vecs = eigh_tridiagonal(diag, off, select="i", select_range=(0, 0))
        e = vecs[:, 0]
        r = 2.0 * np.arange(n_terms)
        return e * np.sqrt((2 * r + 1) / 2.0)

    def r00_at(self, c: float, n_terms: int) -> float:
        d = self.coefficients_at(c, n_terms)
        s_at_zero = float(d @ _legendre_at_zero(n_terms))
        return abs(float(d[0]) / s_at_zero)

    def coefficients(self, c: float) -> np.ndarray:
        """Adaptive expansion: doubles the truncation until |trailing coefficient| < tolerance."""
        retryer = Retrying(
            stop=stop_after_attempt(self.max_attempts),
            retry=retry_if_exception_type(ConvergenceError),
            reraise=True,
        )
        for attempt in retryer:
            with attempt:
                n_terms = self.truncation * 2 ** (attempt.retry_state.attempt_number - 1)
                d = self.coefficients_at(c, n_terms)
                tail = abs(float(d[-1]))
                if tail >= self.tolerance:
                    logger.debug(f"prolate c={c:.6g}: {n_terms} terms leave tail {tail:.3e}, doubling")
                    raise ConvergenceError(
                        f"Legendre expansion for c={c:.6g} not converged at {n_terms} terms (tail {tail:.3e})"
                    )
        return d

    def r00(self, c: float) -> float:
        if c < 0 or not np.isfinite(c):
            logger.error(f"r00 called with invalid argument {c}")
            raise ContractViolationError(f"R_00(x, 1) needs a finite x >= 0, got {c}")
        if c == 0.0:
            return 1.0
        d = self.coefficients(c)
        return abs(float(d[0]) / float(d @ _legendre_at_zero(d.size)))

    def convergence_gap(self, c: float) -> float:
        """|R_00| difference between the adaptive truncation and twice that; used as an internal self-check."""
        n_terms = self.coefficients(c).size
        return abs(self.r00_at(c, n_terms) - self.r00_at(c, 2 * n_terms))

_default_evaluator: ProlateEvaluator | None = None

def _evaluator() -> ProlateEvaluator:
    global _default_evaluator
    if _default_evaluator is None:
        _default_evaluator = ProlateEvaluator()
    return _default_evaluator

@quantized_cache()
def r00(x: float) -> float:
    """R_00(x, 1), radial prolate spheroidal function of the first kind at radial argument 1."""
    return _evaluator().r00(x)

def half_r00_squared(x: float) -> float:
    """g(x) = R_00(x, 1)^2 / 2, decreasing from 1/2 at x = 0 to ~ pi / (4x) at large x."""
    return 0.5 * r00(x) ** 2

# =====================================================================
# Independent oracle: the band-limiting (sinc) kernel
# =====================================================================

def sinc_kernel_eigenvalue(c: float, n_nodes: int = 96) -> float:
    """
    Largest eigenvalue lambda_0(c) of K(x, y) = sin(c (x - y)) / (pi (x - y)) on [-1, 1],
    by Gauss-Legendre Nystrom discretization (symmetrized with sqrt weights).
    """
    if c <= 0:
        raise ContractViolationError(f"sinc kernel needs c > 0, got {c}")
    nodes, weights = leggauss(n_nodes)
    diff = nodes[:, None] - nodes[None, :]
    kernel = (c / np.pi) * np.sinc(c * diff / np.pi)
    sw = np.sqrt(weights)
    return float(eigvalsh(sw[:, None] * kernel * sw[None, :])[-1])

def r00_from_eigenvalue(c: float, n_nodes: int = 96) -> float:
    """R_00(c, 1) = sqrt(pi lambda_0(c) / (2c)), from lambda_0 = (2c/pi) R_00(c, 1)^2."""
    return float(np.sqrt(np.pi * sinc_kernel_eigenvalue(c, n_nodes) / (2.0 * c)))
