# coarse-grained entropic and variance uncertainty relations
import math
from typing import Optional

from cv_uncertainty.coarse_grain.binning import bin_probabilities, discrete_variance
from cv_uncertainty.coarse_grain.histogram import hf_moments
from cv_uncertainty.coarse_grain.types.cg_types import (
    CGKind,
    DiscreteDistribution,
    HistogramFunction,
    RectangularHF,
    StandardCG,
)
from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.common.types.reports import URKind, URReport
from cv_uncertainty.entropy.measures import discrete_entropy
from cv_uncertainty.entropy.types.entropy_types import ConjugatePair
from cv_uncertainty.special_fn.envelopes import eps_alpha, renyi_constant, schurmann_eps
from cv_uncertainty.special_fn.k_function import K_of_t
from cv_uncertainty.states.types.state_types import MarginalDensity
from cv_uncertainty.ur_bounds.types.ur_types import CGPair

SHANNON = ConjugatePair()
# above this Gamma the rectangular variance bound is implied by the HF variances alone
TRIVIAL_GAMMA = math.pi * math.e

# =====================================================================
# Closed-form bounds as functions of Gamma
# =====================================================================

def cgrur_bound(gamma_capital: float, alpha: float = 1.0) -> float:
    """ln(pi / (eps_alpha(Gamma/4) Gamma)); -> ln(pi e / Gamma) as Gamma -> 0 for alpha = 1, -> 0 as Gamma -> inf."""
    return math.log(math.pi / (eps_alpha(alpha, gamma_capital / 4.0) * gamma_capital))

def bialynicki_bound(gamma_capital: float, alpha: float = 1.0) -> float:
    """ln(pi / (alpha^(1/(2-2 alpha)) beta^(1/(2-2 beta)) Gamma)); negative once Gamma exceeds pi / renyi_constant."""
    return math.log(math.pi / (renyi_constant(alpha) * gamma_capital))

def schurmann_bound(gamma_capital: float) -> float:
    return math.log(math.pi / (schurmann_eps(gamma_capital / 4.0) * gamma_capital))

def k_bound(gamma_capital: float) -> float:
    """pi^2 / (Gamma^2 eps_1(Gamma/4)^2); > 1 for every finite Gamma."""
    return math.pi ** 2 / (gamma_capital ** 2 * eps_alpha(1.0, gamma_capital / 4.0) ** 2)

def cg_entropic_bound(cgp: CGPair, alpha: float = 1.0) -> float:
    """
    Entropic CG bound for a pair. CCO pairs get the prolate-corrected ln(pi / (eps_alpha(Gamma/4) Gamma));
    general pairs are only covered in the eps_1 = 1/e regime, i.e. ln(pi e / Gamma), at every Gamma.
    """
    if cgp.pair.is_cco:
        return cgrur_bound(cgp.gamma_capital, alpha)
    return bialynicki_bound(cgp.gamma_capital, 1.0)

def cg_variance_factor(gamma_capital: float, hf_excess: float = 0.0) -> float:
    """
    Ratio of the CG variance bound to hbar^2 gamma^2 / 4:
    exp(2 (hf_excess - 1)) / eps_1(Gamma/4)^2, with hf_excess = h[D_u] - ln(delta) + h[D_v] - ln(small_delta) <= 0.
    Equals 1 for rectangular HFs while eps_1 = 1/e.
    """
    return math.exp(2.0 * (hf_excess - 1.0)) / eps_alpha(1.0, gamma_capital / 4.0) ** 2

# =====================================================================
# Evaluators
# =====================================================================

def _check_width(dist: DiscreteDistribution, width: float, label: str) -> None:
    if dist.kind != CGKind.STANDARD:
        raise ContractViolationError(f"{label}: coarse-grained URs need standard bins, got {dist.kind.value}")
    if abs(dist.width - width) > 1e-12 * width:
        logger.error(f"{label}: distribution width {dist.width} vs CGPair width {width}")
        raise ContractViolationError(f"{label}: bin width {dist.width} does not match the CGPair width {width}")

def _hf_or_rectangular(hf: Optional[HistogramFunction], width: float, label: str) -> HistogramFunction:
    if hf is None:
        return RectangularHF(width=width)
    if abs(hf.width - width) > 1e-12 * width:
        raise ContractViolationError(f"{label}: histogram width {hf.width} does not match the bin width {width}")
    return hf

def _faithfulness_notes(dist_u: DiscreteDistribution, dist_v: DiscreteDistribution) -> list[str]:
    notes = []
    for label, dist in (("u", dist_u), ("v", dist_v)):
        if not dist.faithful:
            notes.append(f"unfaithful {label}: coverage={dist.coverage:.9f}")
    return notes

def cg_entropic_ur(
    dist_u: DiscreteDistribution,
    dist_v: DiscreteDistribution,
    cgp: CGPair,
    pair: ConjugatePair = SHANNON,
    hf_u: Optional[HistogramFunction] = None,
    hf_v: Optional[HistogramFunction] = None,
) -> URReport:
    """
    H_alpha[P_delta] + H_beta[P_small_delta] >= ln(pi / (eps_alpha(Gamma/4) Gamma)).

    The companion report carries the weaker Bialynicki-Birula-type bound on the same lhs;
    it is flagged trivially satisfied when negative, since discrete entropies are >= 0.
    Renyi orders need a canonically conjugate pair. Shannon accepts general pairs with rectangular HFs.
    """
    _check_width(dist_u, cgp.delta, "u")
    _check_width(dist_v, cgp.small_delta, "v")
    hf_u = _hf_or_rectangular(hf_u, cgp.delta, "u")
    hf_v = _hf_or_rectangular(hf_v, cgp.small_delta, "v")
    cco = cgp.pair.is_cco
    rectangular = isinstance(hf_u, RectangularHF) and isinstance(hf_v, RectangularHF)
    if not cco and not pair.is_shannon:
        logger.error(f"cg_entropic_ur: alpha={pair.alpha} requested on a non-CCO pair")
        raise ContractViolationError(
            f"the coarse-grained Renyi UR (alpha={pair.alpha}) is only established for canonically conjugate pairs"
        )
    if not cco and not rectangular:
        raise ContractViolationError("general (non-CCO) pairs are only covered with rectangular histogram functions")

    gamma_capital = cgp.gamma_capital
    lhs = discrete_entropy(dist_u, pair.order_u) + discrete_entropy(dist_v, pair.order_v)
    bound = cg_entropic_bound(cgp, pair.alpha)

    annotations = [
        "cco" if cco else "non-cco",
        "authorized: coarse-grained Renyi UR (CCO)" if cco
        else "authorized: coarse-grained Shannon UR for general pairs (eps_1 = 1/e, no prolate correction)",
        f"Gamma={gamma_capital:.9g}",
    ]
    annotations += _faithfulness_notes(dist_u, dist_v)
    if cco and pair.is_shannon:
        annotations.append(f"schurmann_bound={schurmann_bound(gamma_capital):.12g}")
    if not rectangular:
        h_du, _ = hf_moments(hf_u, pair.order_u)
        h_dv, _ = hf_moments(hf_v, pair.order_v)
        annotations.append(f"lifted_lhs={lhs + h_du + h_dv:.12g}")
        annotations.append(f"lifted_bound={bound + math.log(cgp.delta * cgp.small_delta):.12g}")

    bialy = bialynicki_bound(gamma_capital, pair.alpha)
    companion = URReport.evaluate(
        URKind.CG_ENTROPIC_BIALYNICKI,
        lhs,
        bialy,
        trivially=bialy < 0.0,
        annotations=[f"Gamma={gamma_capital:.9g}"],
    )
    return URReport.evaluate(
        URKind.CG_ENTROPIC,
        lhs,
        bound,
        trivially=bound <= 0.0,
        annotations=annotations,
        companion=companion,
    )

def cg_variance_ur(
    var_u_disc: float,
    var_v_disc: float,
    cgp: CGPair,
    hf_u: Optional[HistogramFunction] = None,
    hf_v: Optional[HistogramFunction] = None,
) -> URReport:
    """
    (sigma^2_{P_delta} + sigma^2_{D_u})(sigma^2_{P_small_delta} + sigma^2_{D_v})
      >= (hbar^2 gamma^2 / 4) exp(2 (h[D_u] - ln delta + h[D_v] - ln small_delta - 1)) / eps_1(Gamma/4)^2.
    Rectangular HFs (default) reduce the bound to hbar^2 gamma^2 / 4 for Gamma/4 below the eps_1 crossover.
    General (non-CCO) pairs keep eps_1 = 1/e at every Gamma and need rectangular HFs.
    """
    if var_u_disc < 0 or var_v_disc < 0:
        raise ContractViolationError(f"discrete variances must be nonnegative, got {var_u_disc}, {var_v_disc}")
    hf_u = _hf_or_rectangular(hf_u, cgp.delta, "u")
    hf_v = _hf_or_rectangular(hf_v, cgp.small_delta, "v")
    cco = cgp.pair.is_cco
    if not cco and not (isinstance(hf_u, RectangularHF) and isinstance(hf_v, RectangularHF)):
        raise ContractViolationError("general (non-CCO) pairs are only covered with rectangular histogram functions")
    h_du, s2_du = hf_moments(hf_u, 1.0)
    h_dv, s2_dv = hf_moments(hf_v, 1.0)
    gamma_capital = cgp.gamma_capital

    lhs = (var_u_disc + s2_du) * (var_v_disc + s2_dv)
    excess = h_du - math.log(cgp.delta) + h_dv - math.log(cgp.small_delta)
    factor = cg_variance_factor(gamma_capital, excess) if cco else math.exp(2.0 * excess)
    bound = 0.25 * cgp.hbar ** 2 * cgp.pair.gamma ** 2 * factor
    trivially = gamma_capital >= TRIVIAL_GAMMA
    annotations = ["cco" if cco else "non-cco", f"Gamma={gamma_capital:.9g}", f"hf_u={hf_u.kind.value}", f"hf_v={hf_v.kind.value}"]
    if trivially:
        annotations.append("Gamma >= pi e: implied by the histogram-function variances")
    return URReport.evaluate(URKind.CG_VARIANCE, lhs, bound, trivially=trivially, annotations=annotations)

def cg_K_ur(var_u_disc: float, var_v_disc: float, cgp: CGPair) -> URReport:
    """
    K(sigma^2_delta / delta^2) K(sigma^2_small_delta / small_delta^2) >= pi^2 / (Gamma^2 eps_1(Gamma/4)^2).
    Discrete variances are expected with the central bin on the distribution mean.
    """
    if not cgp.pair.is_cco:
        raise ContractViolationError("the K-function variance UR is only established for canonically conjugate pairs")
    if var_u_disc < 0 or var_v_disc < 0:
        raise ContractViolationError(f"discrete variances must be nonnegative, got {var_u_disc}, {var_v_disc}")
    lhs = K_of_t(var_u_disc / cgp.delta ** 2) * K_of_t(var_v_disc / cgp.small_delta ** 2)
    return URReport.evaluate(URKind.CG_K, lhs, k_bound(cgp.gamma_capital), annotations=[f"Gamma={cgp.gamma_capital:.9g}"])

# =====================================================================
# From densities
# =====================================================================

def cg_reports_from_densities(
    density_u: MarginalDensity,
    density_v: MarginalDensity,
    cgp: CGPair,
    pair: ConjugatePair = SHANNON,
) -> list[URReport]:
    """
    Bins both marginals with the central bin on their means and evaluates the
    entropic, variance and (CCO only) K-function coarse-grained relations.
    """
    dist_u = bin_probabilities(density_u, StandardCG(delta=cgp.delta))
    dist_v = bin_probabilities(density_v, StandardCG(delta=cgp.small_delta))
    var_u, var_v = discrete_variance(dist_u), discrete_variance(dist_v)
    reports = [
        cg_entropic_ur(dist_u, dist_v, cgp, pair),
        cg_variance_ur(var_u, var_v, cgp),
    ]
    if cgp.pair.is_cco:
        reports.append(cg_K_ur(var_u, var_v, cgp))
    return reports
