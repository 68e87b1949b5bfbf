# validate: fast smoke set over the library's identities, limits and examples
import math
from typing import Callable
import numpy as np

from cv_uncertainty.cli.commands.records import CheckRecord, ScenarioOutput
from cv_uncertainty.coarse_grain.binning import bin_probabilities
from cv_uncertainty.coarse_grain.types.cg_types import RectangularHF, StandardCG
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.entanglement.ppt import two_mode_squeezed
from cv_uncertainty.entanglement.types.entanglement_types import WitnessMode
from cv_uncertainty.entanglement.witnesses import witness_variance
from cv_uncertainty.entropy.identities import decompose_Q_entropy, jensen_gap, renyi_jensen_gap
from cv_uncertainty.mub.condition import mub_condition
from cv_uncertainty.mub.types.mub_types import MubStatus
from cv_uncertainty.special_fn.envelopes import crossover_point
from cv_uncertainty.special_fn.k_function import K_of_t, M, M_inverse
from cv_uncertainty.special_fn.prolate import r00, r00_from_eigenvalue
from cv_uncertainty.states.generators import vacuum_state
from cv_uncertainty.states.types.state_types import GaussianMarginal
from cv_uncertainty.ur_bounds.coarse_grained import bialynicki_bound, cgrur_bound
from cv_uncertainty.ur_bounds.continuous import heisenberg_ur
from cv_uncertainty.ur_bounds.discrete import discrete_mu_bounds

TABLE_HEADER = ["check", "passed", "value", "detail"]
VACUUM = GaussianMarginal(mean=0.0, variance=0.5)

def _vacuum_saturation() -> CheckRecord:
    report = heisenberg_ur(0.5, 0.5, 1.0)
    return CheckRecord(check="vacuum_heisenberg_saturation", passed=abs(report.margin) < 1e-12, value=report.margin)

def _decomposition() -> CheckRecord:
    dist = bin_probabilities(VACUUM, StandardCG(delta=0.5))
    lhs, rhs = decompose_Q_entropy(dist, RectangularHF(width=0.5), 0.7)
    return CheckRecord(check="decomposition_identity", passed=abs(lhs - rhs) < 1e-8, value=lhs - rhs)

def _jensen() -> CheckRecord:
    gap = jensen_gap(VACUUM, StandardCG(delta=5.0 * VACUUM.std))
    return CheckRecord(check="jensen_gap_coarse", passed=gap > 0.0, value=gap)

def _renyi_jensen() -> CheckRecord:
    gap = renyi_jensen_gap(VACUUM, StandardCG(delta=VACUUM.std), 0.7)
    return CheckRecord(check="renyi_jensen_gap", passed=True, value=gap, detail="informational, no sign asserted")

def _prolate_oracle() -> CheckRecord:
    diff = abs(r00(2.0) - r00_from_eigenvalue(2.0))
    return CheckRecord(check="r00_dual_method", passed=diff < 1e-8, value=diff)

def _k_function() -> CheckRecord:
    roundtrip = abs(M(M_inverse(0.05)) - 0.05) / 0.05
    return CheckRecord(check="k_function", passed=K_of_t(0.0) == 1.0 and roundtrip < 1e-10, value=roundtrip)

def _crossover() -> CheckRecord:
    x = crossover_point(1.0)
    return CheckRecord(check="eps1_crossover", passed=1.7 < x < 1.9, value=x)

def _mub_examples() -> CheckRecord:
    d = 4
    statuses = [mub_condition(math.sqrt(2 * math.pi * d / m), math.sqrt(2 * math.pi * d / m), d).status for m in (1, 2, 3)]
    ok = statuses == [MubStatus.UNBIASED, MubStatus.BIASED, MubStatus.UNBIASED]
    return CheckRecord(check="mub_condition_d4", passed=ok, detail=",".join(s.value for s in statuses))

def _witness() -> CheckRecord:
    flagged = witness_variance(two_mode_squeezed(1.0), mode=WitnessMode.CONTINUOUS).violated
    vacuum = witness_variance(vacuum_state(2), mode=WitnessMode.CONTINUOUS).violated
    return CheckRecord(check="tmsv_witness", passed=flagged and not vacuum)

def _bound_ordering() -> CheckRecord:
    gammas = np.geomspace(0.05, 100.0, 12)
    worst = min(cgrur_bound(g) - bialynicki_bound(g) for g in gammas)
    return CheckRecord(check="cgrur_dominates_bialynicki", passed=worst >= -1e-12, value=worst)

def _mu_fourier() -> CheckRecord:
    fourier = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)
    _, mu = discrete_mu_bounds(fourier)
    return CheckRecord(check="mu_fourier_d2", passed=abs(mu - math.log(2.0)) < 1e-12, value=mu)

SMOKE_CHECKS: list[Callable[[], CheckRecord]] = [
    _vacuum_saturation,
    _decomposition,
    _jensen,
    _renyi_jensen,
    _prolate_oracle,
    _k_function,
    _crossover,
    _mub_examples,
    _witness,
    _bound_ordering,
    _mu_fourier,
]

def run_validate() -> ScenarioOutput:
    output = ScenarioOutput(header=TABLE_HEADER)
    for check in SMOKE_CHECKS:
        record = check()
        if not record.passed:
            logger.error(f"validate: {record.check} failed (value={record.value}, {record.detail})")
        output.records.append(record)
        output.rows.append([record.check, record.passed, "" if record.value is None else record.value, record.detail])
    return output

def failed_checks(output: ScenarioOutput) -> int:
    return sum(1 for record in output.records if isinstance(record, CheckRecord) and not record.passed)
