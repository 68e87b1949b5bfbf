# pre-defined scenarios to allow one-command reproduction and regression testing
# NOTE: each builder returns a ScenarioConfig that can be fed directly into run_scenario().
# Parameters are fixed so the regression suite can pin the outcomes listed under each banner.

from enum import Enum
from typing import Callable

from cv_uncertainty.cli.request_models.scenario_config import (
    CGSpec,
    EntangleCriterion,
    EntangleSpec,
    MubSpec,
    OutputSpec,
    ScenarioConfig,
    ScenarioTask,
    SweepSpec,
)
from cv_uncertainty.common.types.reports import URKind
from cv_uncertainty.states.state_spec import GaussianStateSpec, TwoModeSqueezedSpec

class ScenarioName(str, Enum):
    VACUUM_SATURATION = "vacuum_saturation"
    FALSE_POSITIVE = "false_positive"
    BOUND_VS_GAMMA = "bound_vs_gamma"
    TMSV_WITNESS = "tmsv_witness"
    MUB_TABLE = "mub_table"

# ---------------------------------------------------------------------------
# Scenario 1: vacuum saturates every continuous relation
# Expected -> all margins |m| < 1e-6
# ---------------------------------------------------------------------------

def vacuum_saturation() -> ScenarioConfig:
    return ScenarioConfig(
        name=ScenarioName.VACUUM_SATURATION.value,
        task=ScenarioTask.UR_SCAN,
        state=GaussianStateSpec(n_modes=1),
        ur_kinds=[
            URKind.HEISENBERG,
            URKind.LINEAR,
            URKind.SCHRODINGER,
            URKind.SHANNON,
            URKind.RENYI,
            URKind.ENTROPY_VARIANCE,
            URKind.BONA_FIDE,
            URKind.DET_COV,
        ],
        alpha=0.75,
        outputs=OutputSpec(table="margins.csv"),
    )

# ---------------------------------------------------------------------------
# Scenario 2: coarse bins on a displaced product state
# Expected -> naive continuous bound on binned variances flags entanglement (false positive);
#             the coarse-grained bound does not
# ---------------------------------------------------------------------------

def false_positive() -> ScenarioConfig:
    return ScenarioConfig(
        name=ScenarioName.FALSE_POSITIVE.value,
        task=ScenarioTask.ENTANGLE,
        state=GaussianStateSpec(n_modes=2, mean=[1.5, -0.7, 0.4, 2.0]),
        cg=CGSpec(delta=10.0, small_delta=10.0),
        entangle=EntangleSpec(criteria=[EntangleCriterion.VARIANCE_NAIVE, EntangleCriterion.VARIANCE]),
        outputs=OutputSpec(table="witness.csv"),
    )

# ---------------------------------------------------------------------------
# Scenario 3: all coarse-grained bounds against Gamma
# Expected -> CSV of (Gamma, CGRUR, Bialynicki, K-bound, CG variance, Schurmann) over 0.05..100
# ---------------------------------------------------------------------------

def bound_vs_gamma() -> ScenarioConfig:
    return ScenarioConfig(
        name=ScenarioName.BOUND_VS_GAMMA.value,
        task=ScenarioTask.BOUND_CURVES,
        sweep=SweepSpec(start=0.05, stop=100.0, num=64),
        outputs=OutputSpec(table="bounds.csv"),
    )

# ---------------------------------------------------------------------------
# Scenario 4: two-mode squeezed vacuum r = 1 over growing bin widths
# Expected -> continuous and fine-bin witnesses flag; flags disappear as bins coarsen
# ---------------------------------------------------------------------------

def tmsv_witness() -> ScenarioConfig:
    return ScenarioConfig(
        name=ScenarioName.TMSV_WITNESS.value,
        task=ScenarioTask.ENTANGLE,
        state=TwoModeSqueezedSpec(r=1.0),
        cg=CGSpec(delta=0.1),
        sweep=SweepSpec(start=0.1, stop=6.4, num=7),
        entangle=EntangleSpec(
            criteria=[EntangleCriterion.VARIANCE_CONTINUOUS, EntangleCriterion.VARIANCE, EntangleCriterion.ENTROPY]
        ),
        outputs=OutputSpec(table="witness.csv"),
    )

# ---------------------------------------------------------------------------
# Scenario 5: unbiasedness verdicts for d = 2..5 and m = 1..6
# Expected -> Unbiased iff gcd(m, d) = 1 and m != 0 mod d; Commuting for m = d
# ---------------------------------------------------------------------------

def mub_table() -> ScenarioConfig:
    return ScenarioConfig(
        name=ScenarioName.MUB_TABLE.value,
        task=ScenarioTask.MUB_CHECK,
        mub=MubSpec(d_values=[2, 3, 4, 5], m_values=[1, 2, 3, 4, 5, 6]),
        outputs=OutputSpec(table="mub.csv"),
    )

SCENARIOS: dict[ScenarioName, Callable[[], ScenarioConfig]] = {
    ScenarioName.VACUUM_SATURATION: vacuum_saturation,
    ScenarioName.FALSE_POSITIVE: false_positive,
    ScenarioName.BOUND_VS_GAMMA: bound_vs_gamma,
    ScenarioName.TMSV_WITNESS: tmsv_witness,
    ScenarioName.MUB_TABLE: mub_table,
}
