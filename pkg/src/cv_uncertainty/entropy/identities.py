# decomposition and Jensen identities linking continuous, discrete and coarse-grained entropies
import math
from typing import Optional

from cv_uncertainty.coarse_grain.binning import bin_probabilities
from cv_uncertainty.coarse_grain.histogram import hf_moments, render_Q
from cv_uncertainty.coarse_grain.types.cg_types import (
    DiscreteDistribution,
    GaussianOptimalHF,
    HistogramFunction,
    StandardCG,
)
from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.common.types.reports import URKind, URReport
from cv_uncertainty.entropy.measures import differential_entropy, discrete_entropy
from cv_uncertainty.entropy.types.entropy_types import RenyiOrder
from cv_uncertainty.states.types.state_types import GaussianMarginal, MarginalDensity

# Gaussian-optimal HF samples need a fine sub-grid for the quadrature of Q to match the closed forms
DECOMPOSITION_POINTS_PER_BIN = {GaussianOptimalHF: 1 << 14}

def _order(order: RenyiOrder | float) -> float:
    return order.alpha if isinstance(order, RenyiOrder) else float(order)

def decompose_Q_entropy(
    dist: DiscreteDistribution,
    hf: HistogramFunction,
    order: RenyiOrder | float = 1.0,
    points_per_bin: Optional[int] = None,
) -> tuple[float, float]:
    """
    (h_alpha[Q], H_alpha[P_delta] + h_alpha[D]) for Q = render_Q(dist, hf).
    The two sides are computed independently and agree as an identity.
    """
    alpha = _order(order)
    if points_per_bin is None:
        points_per_bin = DECOMPOSITION_POINTS_PER_BIN.get(type(hf))
    # render_Q validates width and kind
    q = render_Q(dist, hf, points_per_bin)
    lhs = differential_entropy(q, alpha)
    hf_entropy, _ = hf_moments(hf, alpha)
    rhs = discrete_entropy(dist, alpha) + hf_entropy
    return lhs, rhs

def _coarse_gap(density: MarginalDensity, cg: StandardCG, alpha: float) -> float:
    dist = bin_probabilities(density, cg)
    return discrete_entropy(dist, alpha) + math.log(cg.delta) - differential_entropy(density, alpha)

def jensen_gap(density: MarginalDensity, cg: StandardCG) -> float:
    """
    h[Q_delta] - h[P] with Q_delta the rectangular lift of the binned density (Shannon only).
    Nonnegative up to quadrature error; a negative value beyond 1e-9 is logged.
    """
    gap = _coarse_gap(density, cg, 1.0)
    if gap < -1e-9:
        logger.warning(f"jensen_gap: negative gap {gap:.3e} for delta={cg.delta}")
    return gap

def renyi_jensen_gap(density: MarginalDensity, cg: StandardCG, order: RenyiOrder | float) -> float:
    """Same gap for a Renyi order. Exploratory: no sign is asserted."""
    return _coarse_gap(density, cg, _order(order))

def entropy_variance_bound(density: MarginalDensity, tolerance: float = 1e-9) -> URReport:
    """
    ln(2 pi e sigma^2) >= 2 h[P], equality iff P is Gaussian.
    """
    variance = density.variance
    if not math.isfinite(variance) or variance <= 0:
        raise ContractViolationError(f"entropy-variance bound needs a finite positive variance, got {variance}")
    lhs = math.log(2.0 * math.pi * math.e * variance)
    bound = 2.0 * differential_entropy(density, 1.0)
    annotations = ["gaussian closed form"] if isinstance(density, GaussianMarginal) else []
    return URReport.evaluate(URKind.ENTROPY_VARIANCE, lhs, bound, annotations=annotations, tolerance=tolerance)
