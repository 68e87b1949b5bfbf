# ur-scan: every requested uncertainty relation for one state, over a sweep of bin widths
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Union

from cv_uncertainty.cli.commands.records import ReportRecord, ScenarioOutput
from cv_uncertainty.cli.request_models.scenario_config import ScenarioConfig
from cv_uncertainty.coarse_grain.binning import bin_probabilities, discrete_variance
from cv_uncertainty.coarse_grain.types.cg_types import StandardCG
from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.common.types.reports import URKind, URReport
from cv_uncertainty.config.app_config import get_service_settings
from cv_uncertainty.entropy.identities import entropy_variance_bound
from cv_uncertainty.entropy.measures import differential_entropy
from cv_uncertainty.entropy.types.entropy_types import ConjugatePair
from cv_uncertainty.states.fourier import frft
from cv_uncertainty.states.gaussian_ops import bona_fide_check, det_cov_check, gaussian_marginal
from cv_uncertainty.states.types.state_types import GaussianState, GridWavefunction, MarginalDensity, QuadraturePair
from cv_uncertainty.ur_bounds.coarse_grained import cg_entropic_ur, cg_K_ur, cg_variance_ur
from cv_uncertainty.ur_bounds.continuous import heisenberg_ur, linear_ur, renyi_ur, schrodinger_ur, shannon_ur
from cv_uncertainty.ur_bounds.types.ur_types import CGPair

ScanState = Union[GaussianState, GridWavefunction]
CG_KINDS = {URKind.CG_ENTROPIC, URKind.CG_VARIANCE, URKind.CG_K}
TABLE_HEADER = ["point", "delta", "small_delta", "gamma_capital", "kind", "lhs", "bound", "margin", "verdict"]

def pair_marginals(state: ScanState, pair: QuadraturePair) -> tuple[MarginalDensity, MarginalDensity]:
    """
    Marginals of (u, v). Gaussian states use closed forms; single-mode grid wavefunctions use the
    fractional Fourier transform and so need a canonical or rotated pair.
    """
    if isinstance(state, GaussianState):
        return gaussian_marginal(state, pair.du), gaussian_marginal(state, pair.dv)
    if pair.origin == "user" or pair.du.n_modes != 1:
        raise ContractViolationError("grid wavefunctions are scanned with canonical or rotated single-mode pairs")
    theta = math.atan2(pair.du.d[1], pair.du.d[0])
    return frft(state, theta).density(), frft(state, theta + 0.5 * math.pi).density()

def _continuous_reports(
    state: ScanState,
    pair: QuadraturePair,
    density_u: MarginalDensity,
    density_v: MarginalDensity,
    kinds: set[URKind],
    alpha: float,
) -> list[tuple[str, Callable[[], URReport]]]:
    hbar, gamma = state.hbar, pair.gamma
    var_u, var_v = density_u.variance, density_v.variance
    jobs: list[tuple[str, Callable[[], URReport]]] = []
    if URKind.HEISENBERG in kinds:
        jobs.append(("heisenberg", lambda: heisenberg_ur(var_u, var_v, gamma, hbar)))
    if URKind.LINEAR in kinds:
        jobs.append(("linear", lambda: linear_ur(var_u, var_v, gamma, hbar)))
    if URKind.SHANNON in kinds:
        jobs.append(("shannon", lambda: shannon_ur(differential_entropy(density_u), differential_entropy(density_v), gamma, hbar)))
    if URKind.RENYI in kinds:
        orders = ConjugatePair.from_alpha(alpha)
        jobs.append((
            "renyi",
            lambda: renyi_ur(
                differential_entropy(density_u, orders.order_u),
                differential_entropy(density_v, orders.order_v),
                orders,
                pair.is_cco,
                gamma,
                hbar,
            ),
        ))
    if URKind.ENTROPY_VARIANCE in kinds:
        jobs.append(("entropy_variance_u", lambda: entropy_variance_bound(density_u)))
        jobs.append(("entropy_variance_v", lambda: entropy_variance_bound(density_v)))
    if isinstance(state, GaussianState):
        mode = pair.du.vector.nonzero()[0][0] % state.n_modes
        if URKind.SCHRODINGER in kinds:
            jobs.append(("schrodinger", lambda: schrodinger_ur(state, mode)))
        if URKind.BONA_FIDE in kinds:
            jobs.append(("bona_fide", lambda: bona_fide_check(state)))
        if URKind.DET_COV in kinds:
            jobs.append(("det_cov", lambda: det_cov_check(state, mode)))
    return jobs

def _record(config: ScenarioConfig, point: int, label: str, params: dict, job: Callable[[], URReport]) -> ReportRecord:
    try:
        return ReportRecord(scenario=config.name, point=point, label=label, params=params, report=job())
    except ContractViolationError as e:
        logger.warning(f"ur-scan: {label} refused: {e}")
        return ReportRecord(scenario=config.name, point=point, label=label, params=params, refused=str(e))

def _cg_point(
    config: ScenarioConfig,
    point: int,
    widths: tuple[float, float],
    density_u: MarginalDensity,
    density_v: MarginalDensity,
    pair: QuadraturePair,
    hbar: float,
) -> list[ReportRecord]:
    delta, small_delta = widths
    cgp = CGPair(delta=delta, small_delta=small_delta, pair=pair, hbar=hbar)
    params = {"delta": delta, "small_delta": small_delta, "gamma_capital": cgp.gamma_capital}
    dist_u = bin_probabilities(density_u, StandardCG(delta=delta))
    dist_v = bin_probabilities(density_v, StandardCG(delta=small_delta))
    var_u, var_v = discrete_variance(dist_u), discrete_variance(dist_v)
    kinds = set(config.ur_kinds)
    records = []
    if URKind.CG_ENTROPIC in kinds:
        orders = ConjugatePair.from_alpha(config.alpha)
        records.append(_record(config, point, "cg_entropic", params, lambda: cg_entropic_ur(dist_u, dist_v, cgp, orders)))
    if URKind.CG_VARIANCE in kinds:
        records.append(_record(config, point, "cg_variance", params, lambda: cg_variance_ur(var_u, var_v, cgp)))
    if URKind.CG_K in kinds:
        records.append(_record(config, point, "cg_k", params, lambda: cg_K_ur(var_u, var_v, cgp)))
    return records

def _width_points(config: ScenarioConfig) -> list[tuple[float, float]]:
    if config.cg is None:
        return []
    delta, small_delta = config.cg.widths
    if config.sweep is None:
        return [(delta, small_delta)]
    # sweep values replace delta; small_delta keeps its ratio to delta
    ratio = small_delta / delta
    return [(w, w * ratio) for w in config.sweep.points()]

def run_ur_scan(config: ScenarioConfig) -> ScenarioOutput:
    state = config.state.build()
    pair = config.pair.build(state.n_modes if isinstance(state, GaussianState) else 1)
    density_u, density_v = pair_marginals(state, pair)
    kinds = set(config.ur_kinds)
    output = ScenarioOutput(header=TABLE_HEADER)

    for label, job in _continuous_reports(state, pair, density_u, density_v, kinds, config.alpha):
        output.records.append(_record(config, 0, label, {}, job))

    points = _width_points(config) if kinds & CG_KINDS else []
    if points:
        workers = get_service_settings().SWEEP_WORKERS
        logger.info(f"ur-scan '{config.name}': {len(points)} width points on {workers} workers")
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_point = list(pool.map(
                lambda item: _cg_point(config, item[0] + 1, item[1], density_u, density_v, pair, state.hbar),
                enumerate(points),
            ))
        for records in per_point:
            output.records.extend(records)

    for record in output.records:
        if record.report is None:
            continue
        report = record.report
        output.rows.append([
            record.point,
            record.params.get("delta", ""),
            record.params.get("small_delta", ""),
            record.params.get("gamma_capital", ""),
            record.label,
            report.lhs,
            report.bound,
            report.margin,
            report.verdict.value,
        ])
    return output
