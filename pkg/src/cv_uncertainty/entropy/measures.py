# differential and discrete Shannon / Renyi entropies
import math
import numpy as np

from cv_uncertainty.coarse_grain.types.cg_types import DiscreteDistribution
from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.entropy.types.entropy_types import RenyiOrder
from cv_uncertainty.states.types.state_types import GaussianMarginal, GridDensity, MarginalDensity

# probabilities below this are dropped (0 ln 0 := 0)
_TINY = 1e-300

def _alpha(order: RenyiOrder | float) -> float:
    alpha = order.alpha if isinstance(order, RenyiOrder) else float(order)
    if not alpha > 0:
        raise ContractViolationError(f"Renyi order must be positive, got {alpha}")
    return alpha

def gaussian_entropy(variance: float, alpha: float = 1.0) -> float:
    """h_alpha of N(., variance) = ln(2 pi variance)/2 + ln(alpha) / (2 (alpha - 1))."""
    base = 0.5 * math.log(2.0 * math.pi * variance)
    if alpha == 1.0:
        return base + 0.5
    if math.isinf(alpha):
        return base
    return base + math.log(alpha) / (2.0 * (alpha - 1.0))

def differential_entropy(density: MarginalDensity, order: RenyiOrder | float = 1.0) -> float:
    """
    (1/(1 - alpha)) ln int P^alpha; alpha = 1 dispatches to -int P ln P.
    Grid densities use midpoint sums; Gaussian marginals use the closed form.
    """
    alpha = _alpha(order)
    if isinstance(density, GaussianMarginal):
        return gaussian_entropy(density.variance, alpha)
    values = density.values[density.values > _TINY]
    dx = density.dx
    if alpha == 1.0:
        return float(-np.sum(values * np.log(values)) * dx)
    if math.isinf(alpha):
        return float(-math.log(values.max()))
    # factor out the peak so P^alpha can't overflow/underflow
    peak = values.max()
    log_integral = alpha * math.log(peak) + math.log(float(np.sum((values / peak) ** alpha) * dx))
    return log_integral / (1.0 - alpha)

def discrete_entropy(dist: DiscreteDistribution, order: RenyiOrder | float = 1.0) -> float:
    """H_alpha = (1/(1 - alpha)) ln sum p_k^alpha over coverage-renormalized probabilities; >= 0."""
    alpha = _alpha(order)
    if len(dist.probs) == 0 or dist.coverage <= 0:
        raise ContractViolationError("discrete entropy of an empty distribution")
    p = dist.normalized_probs
    p = p[p > _TINY]
    if alpha == 1.0:
        value = float(-np.sum(p * np.log(p)))
    elif math.isinf(alpha):
        value = float(-math.log(p.max()))
    else:
        value = float(math.log(np.sum(p ** alpha)) / (1.0 - alpha))
    # rounding can leave -1e-17 on deterministic distributions
    return max(value, 0.0)
