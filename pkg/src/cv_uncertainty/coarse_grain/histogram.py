# histogram functions: their entropies/variances, and the piecewise-continuous density Q they lift a distribution to
from typing import Optional
import math
import numpy as np
from scipy.special import ndtr
from scipy.stats import truncnorm

from cv_uncertainty.coarse_grain.types.cg_types import (
    CGKind,
    DiscreteDistribution,
    GaussianOptimalHF,
    HistogramFunction,
    RectangularHF,
)
from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.states.types.state_types import GridDensity

DEFAULT_POINTS_PER_BIN = {RectangularHF: 2, GaussianOptimalHF: 256}

def _gaussian_hf_power_integral(hf: GaussianOptimalHF, alpha: float) -> float:
    """
    int D^alpha over the bin, closed form:
    (s Z)^(-alpha) (2 pi)^((1 - alpha)/2) s / sqrt(alpha) [Phi(b sqrt(alpha)) - Phi(a sqrt(alpha))].
    """
    a, b = hf.truncation
    s = hf.parent_std
    z = ndtr(b) - ndtr(a)
    ra = math.sqrt(alpha)
    return (s * z) ** (-alpha) * (2.0 * math.pi) ** (0.5 * (1.0 - alpha)) * s / ra * (ndtr(b * ra) - ndtr(a * ra))

def hf_moments(hf: HistogramFunction, alpha: float) -> tuple[float, float]:
    """
    (Renyi entropy of order alpha, variance) of a histogram function.
    Rectangular: (ln width, width^2/12) for every alpha. Gaussian-optimal: truncated-normal values, entropy <= ln width.
    """
    if not alpha > 0:
        raise ContractViolationError(f"Renyi order must be positive, got {alpha}")
    if isinstance(hf, RectangularHF):
        return math.log(hf.width), hf.width ** 2 / 12.0

    a, b = hf.truncation
    s = hf.parent_std
    variance = float(truncnorm.var(a, b, loc=0.0, scale=s))
    if alpha == 1.0:
        entropy = float(truncnorm.entropy(a, b, loc=0.0, scale=s))
    elif math.isinf(alpha):
        peak = float(hf.pdf(np.array([0.0]))[0])
        entropy = -math.log(peak)
    else:
        entropy = math.log(_gaussian_hf_power_integral(hf, alpha)) / (1.0 - alpha)
    return entropy, variance

def render_Q(
    dist: DiscreteDistribution,
    hf: HistogramFunction,
    points_per_bin: Optional[int] = None,
) -> GridDensity:
    """
    Q(u) = sum_k p_k D(u - u_k) sampled at `points_per_bin` midpoints per bin.
    Each bin's HF samples are renormalized on the grid so bin k carries exactly p_k;
    probabilities are coverage-renormalized so Q integrates to 1.
    """
    if dist.kind != CGKind.STANDARD:
        raise ContractViolationError("render_Q needs a standard coarse-grained distribution")
    if abs(hf.width - dist.width) > 1e-12 * dist.width:
        logger.error(f"render_Q: HF width {hf.width} vs bin width {dist.width}")
        raise ContractViolationError(f"histogram width {hf.width} differs from bin width {dist.width}")
    m = points_per_bin or DEFAULT_POINTS_PER_BIN[type(hf)]
    h = dist.width / m
    offsets = -0.5 * dist.width + h * (np.arange(m) + 0.5)
    shape = hf.pdf(offsets)
    shape = shape / (shape.sum() * h)
    values = np.outer(dist.normalized_probs, shape).ravel()
    x0 = dist.labels[0] + offsets[0]
    if values.size < 2:
        # a single rectangular cell; split it so the grid has two samples
        values = np.repeat(values, 2)
        h = 0.5 * h
        x0 = dist.labels[0] - 0.5 * dist.width + 0.5 * h
    return GridDensity.normalized(values, x0=float(x0), dx=float(h))
