from .scenario_config import (
    ScenarioTask,
    PairSpec,
    SweepSpec,
    CGSpec,
    MubSpec,
    EntangleCriterion,
    EntangleSpec,
    OutputSpec,
    ScenarioConfig,
    DEFAULT_UR_KINDS,
)
