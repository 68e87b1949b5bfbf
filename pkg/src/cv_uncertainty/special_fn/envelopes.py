# the Renyi conjugacy constant and the epsilon_alpha envelope of the coarse-grained entropic bounds
import math
from scipy.optimize import brentq

from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.special_fn.memo import quantized_cache
from cv_uncertainty.special_fn.prolate import half_r00_squared, r00

def conjugate_order(alpha: float) -> float:
    """beta with 1/alpha + 1/beta = 2; alpha = 1/2 maps to infinity."""
    if alpha <= 0.5:
        if alpha == 0.5:
            return math.inf
        raise ContractViolationError(f"no conjugate order for alpha = {alpha} <= 1/2")
    return alpha / (2.0 * alpha - 1.0)

def _check_alpha(alpha: float) -> None:
    if not 0.5 <= alpha <= 1.0:
        logger.error(f"alpha {alpha} outside [1/2, 1]")
        raise ContractViolationError(f"alpha must lie in [1/2, 1], got {alpha}")

def _log_term(a: float) -> float:
    """ln(a) / (2 - 2a), with its limits at a = 1 (-1/2) and a = inf (0)."""
    if math.isinf(a):
        return 0.0
    if abs(a - 1.0) < 1e-12:
        return -0.5
    return math.log1p(a - 1.0) / (2.0 - 2.0 * a)

@quantized_cache()
def renyi_constant(alpha: float) -> float:
    """
    alpha^(1/(2-2 alpha)) beta^(1/(2-2 beta)); 1/e at alpha = 1, 1/2 at alpha = 1/2, symmetric in (alpha, beta).
    """
    _check_alpha(alpha)
    return math.exp(_log_term(alpha) + _log_term(conjugate_order(alpha)))

@quantized_cache()
def eps_alpha(alpha: float, x: float) -> float:
    """epsilon_alpha(x) = min(renyi_constant(alpha), R_00(x, 1)^2 / 2)."""
    _check_alpha(alpha)
    return min(renyi_constant(alpha), half_r00_squared(x))

def schurmann_eps(x: float) -> float:
    """
    Conjectured sharper replacement for epsilon_1: e^{-1} R_00(2x/e, 1)^2.
    Diagnostic only; never used for a verdict.
    """
    return math.exp(-1.0) * r00(2.0 * x / math.e) ** 2

def crossover_point(alpha: float = 1.0) -> float:
    """
    x at which R_00(x, 1)^2 / 2 drops to renyi_constant(alpha); below it epsilon_alpha is the constant.
    """
    level = renyi_constant(alpha)
    if level >= 0.5:
        return 0.0
    return float(brentq(lambda x: half_r00_squared(x) - level, 1e-6, 50.0, xtol=1e-13))
