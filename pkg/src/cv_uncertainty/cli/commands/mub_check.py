# mub-check: exact unbiasedness verdicts, optionally backed by the numerical probe test
import math

from cv_uncertainty.cli.commands.records import MubRecord, ScenarioOutput
from cv_uncertainty.cli.request_models.scenario_config import MubSpec, ScenarioConfig
from cv_uncertainty.coarse_grain.types.cg_types import PeriodicCG
from cv_uncertainty.mub.condition import alternative_forms_check, mub_condition
from cv_uncertainty.mub.probes import unbiasedness_test

TABLE_HEADER = ["point", "d", "m", "product", "status", "forms_consistent", "deviation"]

def _configurations(spec: MubSpec) -> list[tuple[int, float, float]]:
    if spec.Tu is not None and spec.Tv is not None:
        return [(spec.d, spec.Tu, spec.Tv)]
    out = []
    for d in spec.d_values:
        for m in spec.m_values:
            period = math.sqrt(2.0 * math.pi * spec.hbar * d / m)
            out.append((d, period, period))
    return out

def run_mub_check(config: ScenarioConfig) -> ScenarioOutput:
    spec = config.mub
    output = ScenarioOutput(header=TABLE_HEADER)
    for point, (d, Tu, Tv) in enumerate(_configurations(spec)):
        verdict = mub_condition(Tu, Tv, d, spec.hbar)
        consistent = alternative_forms_check(Tu / d, Tu, Tv / d, Tv, d, spec.hbar)
        deviation = None
        if spec.numeric:
            deviation = unbiasedness_test(
                PeriodicCG.from_period(Tu, d),
                PeriodicCG.from_period(Tv, d, u_cen=spec.v_cen),
                trials=spec.trials,
                seed=config.seed,
                hbar=spec.hbar,
            )
        record = MubRecord(
            scenario=config.name,
            point=point,
            d=d,
            m=verdict.m,
            product=verdict.product,
            status=verdict.status.value,
            forms_consistent=consistent,
            deviation=deviation,
        )
        output.records.append(record)
        output.rows.append([point, d, "" if verdict.m is None else verdict.m, verdict.product, verdict.status.value, consistent, "" if deviation is None else deviation])
    return output
