# erf, the auxiliary function M(y), its inverse, and K(t) of the improved coarse-grained variance UR
import math
import numpy as np
from scipy import special
from scipy.optimize import brentq
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from cv_uncertainty.common.errors import BracketError, ContractViolationError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.config.app_config import get_service_settings
from cv_uncertainty.special_fn.memo import quantized_cache

def erf(x):
    """Error function; scalars in, float out, arrays pass through."""
    if np.ndim(x) == 0:
        return float(special.erf(x))
    return special.erf(x)

def log_M(y: float) -> float:
    """ln M(y), stable for both y -> 0 and large y."""
    root = math.sqrt(y)
    return -0.25 * y - 0.5 * math.log(4.0 * math.pi * y) - math.log(special.erf(0.5 * root))

def M(y: float) -> float:
    """
    M(y) = exp(-y/4) / (2 sqrt(pi y) erf(sqrt(y)/2)), strictly decreasing from +inf (y -> 0) to 0.
    Equals 1/(2y) minus the variance of the density ~ exp(-y u^2) restricted to [-1/2, 1/2].
    """
    if y <= 0:
        raise ContractViolationError(f"M(y) needs y > 0, got {y}")
    return math.exp(log_M(y))

@quantized_cache()
def M_inverse(t: float) -> float:
    """
    y with M(y) = t, by brentq on ln M in ln y; the bracket widens (tenacity) until it encloses the root.
    """
    if not (t > 0 and math.isfinite(t)):
        logger.error(f"M_inverse called with t={t}")
        raise BracketError(f"t = {t} is outside the range (0, inf) of M")
    target = math.log(t)
    settings = get_service_settings()

    def residual(s: float) -> float:
        return log_M(math.exp(s)) - target

    retryer = Retrying(
        stop=stop_after_attempt(settings.M_INVERSE_MAX_ATTEMPTS),
        retry=retry_if_exception_type(BracketError),
        reraise=True,
    )
    for attempt in retryer:
        with attempt:
            half = 5.0 * 2 ** (attempt.retry_state.attempt_number - 1)
            # any positive double has ln t > -745, so ln y never needs to leave [-700, 8.1]
            lo, hi = max(-half, -700.0), min(half, 8.1)
            f_lo, f_hi = residual(lo), residual(hi)
            if f_lo * f_hi > 0:
                logger.debug(f"M_inverse(t={t:.6g}): [{lo}, {hi}] does not bracket, widening")
                raise BracketError(f"cannot bracket M(y) = {t:.6g} with ln y in [{lo}, {hi}]")
            s = brentq(residual, lo, hi, xtol=1e-15, rtol=1e-15, maxiter=500)
    return math.exp(s)

@quantized_cache()
def K_of_t(t: float) -> float:
    """
    K(t) = exp(2 t M^{-1}(t)) / erf(sqrt(M^{-1}(t)) / 2)^2, K(0) = 1, strictly increasing.
    """
    if t < 0 or not math.isfinite(t):
        raise ContractViolationError(f"K(t) needs a finite t >= 0, got {t}")
    if t == 0.0:
        return 1.0
    y = M_inverse(t)
    return math.exp(2.0 * t * y) / special.erf(0.5 * math.sqrt(y)) ** 2

def optimal_inner_variance(t: float, width: float) -> float:
    """
    Parent-Gaussian variance s^2 = width^2 / (2 M^{-1}(t)) of the optimal histogram function
    for a discrete variance sigma^2 = t width^2.
    """
    if t <= 0:
        raise ContractViolationError("optimal histogram function needs t > 0")
    return width ** 2 / (2.0 * M_inverse(t))
