# PPT + uncertainty-relation entanglement witnesses on the global quadratures
from typing import Iterable, Literal, Optional, Union

from cv_uncertainty.coarse_grain.binning import bin_probabilities, discrete_variance
from cv_uncertainty.coarse_grain.types.cg_types import StandardCG
from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.common.types.reports import URKind, URReport, Verdict
from cv_uncertainty.entanglement.ppt import two_mode_squeezed
from cv_uncertainty.entanglement.types.entanglement_types import (
    AdvantageInstance,
    GlobalOperatorPair,
    TwoModeGaussian,
    WitnessMode,
    reflect_second_momentum,
)
from cv_uncertainty.entropy.measures import discrete_entropy
from cv_uncertainty.states.gaussian_ops import bona_fide_check, gaussian_marginal
from cv_uncertainty.states.two_mode import global_momentum_density, global_position_density
from cv_uncertainty.states.types.state_types import (
    GaussianState,
    MarginalDensity,
    QuadraturePair,
    TwoModeGridWavefunction,
)
from cv_uncertainty.ur_bounds.coarse_grained import cg_entropic_bound, cg_variance_ur
from cv_uncertainty.ur_bounds.types.ur_types import CGPair

WitnessState = Union[GaussianState, TwoModeGridWavefunction]

def _mixed_marginals(
    state: WitnessState,
    pair: Optional[GlobalOperatorPair],
) -> list[tuple[str, MarginalDensity, MarginalDensity, QuadraturePair]]:
    """
    (label, P_u, P_v, transposed pair) for both mixed-sign pairs. The transposed pair (du, L dv)
    carries the commutator that bounds separable states.
    """
    pair = pair or GlobalOperatorPair.standard()
    standard = pair == GlobalOperatorPair.standard()
    on_grid = isinstance(state, TwoModeGridWavefunction)
    if on_grid and not standard:
        raise ContractViolationError("grid wavefunctions support only the standard global operators")
    if not on_grid:
        state = TwoModeGaussian.from_state(state)
        physical = bona_fide_check(state)
        if physical.violated:
            logger.error(f"witness called on a covariance that is not bona fide (margin {physical.margin:.6g})")
            raise ContractViolationError(
                "witnesses need a bona fide state; a partially transposed covariance cannot be tested again"
            )
    out = []
    for label, du, dv in pair.mixed_pairs():
        # x1 +- x2 and p1 +- p2 are canonical quadratures scaled by sqrt 2, which leaves Gamma unchanged
        transposed = QuadraturePair(du=du, dv=reflect_second_momentum(dv), is_cco=standard)
        if on_grid:
            u_sign, v_sign = ("+", "-") if label.startswith("u+") else ("-", "+")
            density_u = global_position_density(state, u_sign)
            density_v = global_momentum_density(state, v_sign)
        else:
            density_u, density_v = gaussian_marginal(state, du), gaussian_marginal(state, dv)
        out.append((label, density_u, density_v, transposed))
    return out

def _worst(reports: list[tuple[str, URReport]]) -> URReport:
    """Report of the pair with the smallest margin, annotated with its label and the other pair's margin."""
    label, worst = min(reports, key=lambda item: item[1].margin)
    others = [f"{other}: margin={report.margin:.9g}" for other, report in reports if other != label]
    return worst.model_copy(update={"annotations": [f"pair {label}", *worst.annotations, *others]})

def _cg_pair(cg: Optional[CGPair], transposed: QuadraturePair, hbar: float) -> CGPair:
    if cg is None:
        raise ContractViolationError("coarse-grained witnesses need bin widths (CGPair)")
    return CGPair(delta=cg.delta, small_delta=cg.small_delta, pair=transposed, hbar=hbar)

def _binned(density_u: MarginalDensity, density_v: MarginalDensity, cgp: CGPair):
    return (
        bin_probabilities(density_u, StandardCG(delta=cgp.delta)),
        bin_probabilities(density_v, StandardCG(delta=cgp.small_delta)),
    )

def witness_variance(
    state: WitnessState,
    pair: Optional[GlobalOperatorPair] = None,
    cg: Optional[CGPair] = None,
    mode: Optional[WitnessMode] = None,
    form: Literal["product", "linear"] = "product",
) -> URReport:
    """
    Variance test of the partially transposed state on (u+, v-) and (u-, v+); a violation flags entanglement.
    continuous: sigma_u^2 sigma_v^2 >= hbar^2 gamma'^2 / 4 (or sigma_u^2 + sigma_v^2 >= hbar |gamma'|),
    gamma' = 2 for the standard operators. coarse_grained: the rectangular-HF CG variance bound.
    naive: the continuous bound against binned variances, which gives false positives at coarse bins.
    mode defaults to coarse_grained when `cg` is given.
    """
    mode = mode or (WitnessMode.COARSE_GRAINED if cg is not None else WitnessMode.CONTINUOUS)
    hbar = state.hbar
    reports = []
    for label, density_u, density_v, transposed in _mixed_marginals(state, pair):
        gamma = transposed.gamma
        if mode == WitnessMode.CONTINUOUS:
            var_u, var_v = density_u.variance, density_v.variance
            if form == "linear":
                report = URReport.evaluate(URKind.WITNESS_VARIANCE, var_u + var_v, hbar * abs(gamma), annotations=["linear"])
            else:
                report = URReport.evaluate(URKind.WITNESS_VARIANCE, var_u * var_v, 0.25 * hbar ** 2 * gamma ** 2)
        else:
            cgp = _cg_pair(cg, transposed, hbar)
            dist_u, dist_v = _binned(density_u, density_v, cgp)
            var_u, var_v = discrete_variance(dist_u), discrete_variance(dist_v)
            if mode == WitnessMode.NAIVE:
                report = URReport.evaluate(
                    URKind.WITNESS_VARIANCE_NAIVE,
                    var_u * var_v,
                    0.25 * hbar ** 2 * gamma ** 2,
                    annotations=["continuous bound applied to binned variances"],
                )
            else:
                cg_report = cg_variance_ur(var_u, var_v, cgp)
                report = URReport.evaluate(
                    URKind.WITNESS_VARIANCE,
                    cg_report.lhs,
                    cg_report.bound,
                    trivially=cg_report.verdict == Verdict.TRIVIALLY_SATISFIED,
                    annotations=cg_report.annotations,
                )
        reports.append((label, report))
    result = _worst(reports)
    if result.violated:
        logger.info(f"witness_variance ({mode.value}): entanglement flagged, margin {result.margin:.6g}")
    return result

def witness_entropy(
    state: WitnessState,
    cg: CGPair,
    pair: Optional[GlobalOperatorPair] = None,
) -> URReport:
    """
    Coarse-grained Shannon test H[P_delta(u)] + H[P_small_delta(v)] >= ln(pi / (eps_1(Gamma'/4) Gamma'))
    on both mixed pairs of the partially transposed state. The report also carries the CG variance margin.
    """
    hbar = state.hbar
    reports = []
    for label, density_u, density_v, transposed in _mixed_marginals(state, pair):
        cgp = _cg_pair(cg, transposed, hbar)
        dist_u, dist_v = _binned(density_u, density_v, cgp)
        lhs = discrete_entropy(dist_u) + discrete_entropy(dist_v)
        bound = cg_entropic_bound(cgp)
        variance = cg_variance_ur(discrete_variance(dist_u), discrete_variance(dist_v), cgp)
        annotations = [f"Gamma={cgp.gamma_capital:.9g}", f"variance_margin={variance.margin:.9g}"]
        reports.append((label, URReport.evaluate(URKind.WITNESS_ENTROPY, lhs, bound, trivially=bound <= 0.0, annotations=annotations)))
    result = _worst(reports)
    if result.violated:
        logger.info(f"witness_entropy: entanglement flagged, margin {result.margin:.6g}")
    return result

def search_entropy_advantage(
    r_grid: Iterable[float],
    delta_grid: Iterable[float],
    hbar: float = 1.0,
) -> Optional[AdvantageInstance]:
    """
    First (r, delta) in grid order for which the entropic CG witness flags a two-mode squeezed vacuum
    measured with symmetric bins delta while the CG variance witness does not. None if no such point.
    """
    deltas = [float(d) for d in delta_grid]
    for r in r_grid:
        state = two_mode_squeezed(float(r), hbar)
        for delta in deltas:
            cg = CGPair.symmetric(delta, QuadraturePair.canonical(n_modes=2), hbar)
            entropy_report = witness_entropy(state, cg)
            if not entropy_report.violated:
                continue
            variance_report = witness_variance(state, cg=cg)
            if not variance_report.violated:
                logger.info(f"search_entropy_advantage: r={r}, delta={delta}")
                return AdvantageInstance(
                    r=float(r), delta=delta, entropy_report=entropy_report, variance_report=variance_report
                )
    return None
