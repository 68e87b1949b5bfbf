# standard and periodic coarse graining of marginal densities
import math
import numpy as np
from scipy.special import ndtr

from cv_uncertainty.coarse_grain.types.cg_types import (
    CGKind,
    DiscreteDistribution,
    PeriodicCG,
    StandardCG,
)
from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.states.types.state_types import GaussianMarginal, GridDensity, MarginalDensity

# Gaussian tails beyond this many standard deviations carry < 1e-18 mass
_GAUSS_REACH = 9.0
_MAX_PERIOD_EXPANSIONS = 64

def interval_mass(density: MarginalDensity, lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    """
    Mass of P on [lower, upper] (endpoints have measure zero).
    Gaussian: closed form with tail-stable differences. Grid: exact integral of the piecewise-constant cells.
    """
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    if isinstance(density, GaussianMarginal):
        za = (lower - density.mean) / density.std
        zb = (upper - density.mean) / density.std
        # subtract upper-tail values when the interval sits in the right tail, lower-tail values otherwise
        return np.where(za > 0, ndtr(-za) - ndtr(-zb), ndtr(zb) - ndtr(za))
    return density.cdf(upper) - density.cdf(lower)

def _support(density: MarginalDensity) -> tuple[float, float]:
    if isinstance(density, GaussianMarginal):
        return density.mean - _GAUSS_REACH * density.std, density.mean + _GAUSS_REACH * density.std
    edges = density.cell_edges
    nonzero = np.nonzero(density.values)[0]
    if nonzero.size == 0:
        return float(edges[0]), float(edges[-1])
    return float(edges[nonzero[0]]), float(edges[nonzero[-1] + 1])

def density_mean(density: MarginalDensity) -> float:
    return float(density.mean)

def _warn_if_unfaithful(dist: DiscreteDistribution, what: str) -> None:
    if not dist.faithful:
        logger.warning(f"{what}: coverage {dist.coverage:.9f} below faithful threshold; report will be annotated")

def resolve_u_cen(density: MarginalDensity, cg: StandardCG) -> float:
    """u_cen of the spec, or the density mean when unset."""
    return density_mean(density) if cg.u_cen is None else float(cg.u_cen)

def bin_probabilities(density: MarginalDensity, cg: StandardCG) -> DiscreteDistribution:
    """
    p_k = integral of P over ((k - 1/2) delta + u_cen, (k + 1/2) delta + u_cen].
    """
    if not cg.delta > 0:
        raise ContractViolationError(f"bin width must be positive, got {cg.delta}")
    u_cen = resolve_u_cen(density, cg)
    if cg.k_range is None:
        lo, hi = _support(density)
        k_lo = math.floor((lo - u_cen) / cg.delta + 0.5)
        k_hi = math.ceil((hi - u_cen) / cg.delta - 0.5)
        k_lo, k_hi = min(k_lo, 0), max(k_hi, 0)
    else:
        k_lo, k_hi = cg.k_range
    ks = np.arange(k_lo, k_hi + 1)
    lower, upper = cg.edges(ks, u_cen)
    probs = interval_mass(density, lower, upper)
    dist = DiscreteDistribution.from_probs(
        CGKind.STANDARD, probs, u_cen + ks * cg.delta, width=cg.delta, u_cen=u_cen
    )
    _warn_if_unfaithful(dist, "bin_probabilities")
    return dist

def pcg_probabilities(
    density: MarginalDensity,
    pcg: PeriodicCG,
    residual_mass: float = 1e-12,
) -> DiscreteDistribution:
    """
    d probabilities; outcome k sums all bins congruent to k modulo T.
    The n-sum grows outward until the mass outside the covered periods is below residual_mass.
    """
    if abs(pcg.T - pcg.d * pcg.s) > 1e-12 * pcg.T:
        raise ContractViolationError(f"period T={pcg.T} must equal d*s")
    lo, hi = _support(density)
    n_lo = math.floor((lo - pcg.u_cen) / pcg.T)
    n_hi = math.floor((hi - pcg.u_cen) / pcg.T)
    for _ in range(_MAX_PERIOD_EXPANSIONS):
        covered_lo = pcg.u_cen + n_lo * pcg.T
        covered_hi = pcg.u_cen + (n_hi + 1) * pcg.T
        outside = float(interval_mass(density, -np.inf, covered_lo) + interval_mass(density, covered_hi, np.inf))
        if outside < residual_mass:
            break
        n_lo, n_hi = n_lo - 1, n_hi + 1
    else:
        logger.warning(f"pcg_probabilities: residual mass {outside:.3e} after {_MAX_PERIOD_EXPANSIONS} expansions")

    ns = np.arange(n_lo, n_hi + 1)[:, None]
    ks = np.arange(pcg.d)[None, :]
    lower = pcg.u_cen + ks * pcg.s + ns * pcg.T
    probs = interval_mass(density, lower, lower + pcg.s).sum(axis=0)
    dist = DiscreteDistribution.from_probs(CGKind.PERIODIC, probs, np.arange(pcg.d), width=pcg.s, u_cen=pcg.u_cen)
    _warn_if_unfaithful(dist, "pcg_probabilities")
    return dist

def discrete_variance(dist: DiscreteDistribution) -> float:
    """sum u_k^2 p_k - (sum u_k p_k)^2 over coverage-renormalized probabilities."""
    if dist.kind != CGKind.STANDARD:
        raise ContractViolationError("discrete variance needs real (standard) outcome labels, not periodic ones")
    p = dist.normalized_probs
    # center on the first moment before squaring to avoid cancellation
    labels = dist.labels
    mean = float(p @ labels)
    return float(p @ (labels - mean) ** 2)
