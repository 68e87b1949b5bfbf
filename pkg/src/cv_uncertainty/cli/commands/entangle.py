# entangle: PPT witnesses on a two-mode state, over one or more symmetric bin widths
from cv_uncertainty.cli.commands.records import ReportRecord, ScenarioOutput
from cv_uncertainty.cli.request_models.scenario_config import EntangleCriterion, ScenarioConfig
from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.entanglement.types.entanglement_types import TwoModeGaussian, WitnessMode
from cv_uncertainty.entanglement.witnesses import witness_entropy, witness_variance
from cv_uncertainty.states.generators import two_mode_grid_from_gaussian
from cv_uncertainty.states.types.state_types import GaussianState, QuadraturePair
from cv_uncertainty.ur_bounds.types.ur_types import CGPair

TABLE_HEADER = ["point", "delta", "small_delta", "criterion", "lhs", "bound", "margin", "verdict", "entangled"]

def run_entangle(config: ScenarioConfig) -> ScenarioOutput:
    state = config.state.build()
    if not isinstance(state, GaussianState):
        raise ContractViolationError("entangle needs a two-mode Gaussian state spec")
    state = TwoModeGaussian.from_state(state)
    spec = config.entangle
    criteria = spec.criteria if spec is not None else [EntangleCriterion.VARIANCE, EntangleCriterion.ENTROPY]
    target = two_mode_grid_from_gaussian(state, spec.grid_points) if spec is not None and spec.on_grid else state

    delta, small_delta = config.cg.widths
    widths = [(delta, small_delta)]
    if config.sweep is not None:
        widths = [(w, w * small_delta / delta) for w in config.sweep.points()]

    output = ScenarioOutput(header=TABLE_HEADER)
    for point, (du, dv) in enumerate(widths):
        # only the widths matter; the witnesses substitute the transposed global pair
        cg = CGPair(delta=du, small_delta=dv, pair=QuadraturePair.canonical(n_modes=2), hbar=state.hbar)
        for criterion in criteria:
            if criterion == EntangleCriterion.ENTROPY:
                report = witness_entropy(target, cg)
            elif criterion == EntangleCriterion.VARIANCE_CONTINUOUS:
                report = witness_variance(target, mode=WitnessMode.CONTINUOUS)
            elif criterion == EntangleCriterion.VARIANCE_NAIVE:
                report = witness_variance(target, cg=cg, mode=WitnessMode.NAIVE)
            else:
                report = witness_variance(target, cg=cg, mode=WitnessMode.COARSE_GRAINED)
            output.records.append(ReportRecord(
                scenario=config.name,
                point=point,
                label=criterion.value,
                params={"delta": du, "small_delta": dv},
                report=report,
            ))
            output.rows.append([point, du, dv, criterion.value, report.lhs, report.bound, report.margin, report.verdict.value, report.violated])
    return output
