# JSON scenario documents consumed by the CLI
# NOTE: one JSON document per scenario; parse errors are re-raised as ScenarioConfigError with line / field context

import json
from enum import Enum
from pathlib import Path
from typing import Literal, Optional
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, ValidationError, model_validator

from cv_uncertainty.common.errors import ScenarioConfigError
from cv_uncertainty.common.types.reports import URKind
from cv_uncertainty.states.state_spec import StateSpec
from cv_uncertainty.states.types.state_types import QuadratureCoeffs, QuadraturePair

class ScenarioTask(str, Enum):
    UR_SCAN = "ur-scan"
    MUB_CHECK = "mub-check"
    ENTANGLE = "entangle"
    R00_TABLE = "r00-table"
    BOUND_CURVES = "bound-curves"

class _ConfigBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

class PairSpec(_ConfigBase):
    """
    "canonical" (x_k, p_k), "rotated" by theta, or explicit coefficient vectors with a CCO declaration.
    """
    kind: Literal["canonical", "rotated", "vectors"] = "canonical"
    mode: int = Field(default=0, ge=0)
    theta: float = 0.0
    du: Optional[list[float]] = None
    dv: Optional[list[float]] = None
    is_cco: bool = False

    @model_validator(mode="after")
    def _vectors_given(self) -> "PairSpec":
        if self.kind == "vectors" and (self.du is None or self.dv is None):
            raise ValueError("pair kind 'vectors' needs both du and dv")
        return self

    def build(self, n_modes: int) -> QuadraturePair:
        if self.kind == "canonical":
            return QuadraturePair.canonical(n_modes, self.mode)
        if self.kind == "rotated":
            return QuadraturePair.rotated(self.theta, n_modes, self.mode)
        return QuadraturePair(
            du=QuadratureCoeffs(d=tuple(self.du)),
            dv=QuadratureCoeffs(d=tuple(self.dv)),
            is_cco=self.is_cco,
        )

class SweepSpec(_ConfigBase):
    """num points from start to stop, geometric when log is set."""
    start: PositiveFloat
    stop: PositiveFloat
    num: int = Field(default=16, ge=1)
    log: bool = True

    def points(self) -> list[float]:
        grid = np.geomspace(self.start, self.stop, self.num) if self.log else np.linspace(self.start, self.stop, self.num)
        return [float(v) for v in grid]

class CGSpec(_ConfigBase):
    """Bin widths; small_delta defaults to delta. A sweep in the scenario scales both symmetrically."""
    delta: PositiveFloat
    small_delta: Optional[PositiveFloat] = None

    @property
    def widths(self) -> tuple[float, float]:
        return self.delta, self.small_delta or self.delta

class MubSpec(_ConfigBase):
    """
    Either one configuration (Tu, Tv, d) or a verdict table over d_values x m_values with Tu = Tv = sqrt(2 pi hbar d / m).
    """
    d: int = Field(default=2, ge=2)
    Tu: Optional[PositiveFloat] = None
    Tv: Optional[PositiveFloat] = None
    v_cen: float = 0.0
    d_values: list[int] = Field(default_factory=list)
    m_values: list[int] = Field(default_factory=list)
    numeric: bool = False
    trials: int = Field(default=4, ge=1)
    hbar: PositiveFloat = 1.0

    @model_validator(mode="after")
    def _one_mode_of_use(self) -> "MubSpec":
        single = self.Tu is not None and self.Tv is not None
        table = bool(self.d_values) and bool(self.m_values)
        if single == table:
            raise ValueError("mub needs either Tu and Tv, or non-empty d_values and m_values")
        if any(d < 2 for d in self.d_values) or any(m < 1 for m in self.m_values):
            raise ValueError("d_values must be >= 2 and m_values >= 1")
        return self

class EntangleCriterion(str, Enum):
    VARIANCE = "variance"
    VARIANCE_CONTINUOUS = "variance_continuous"
    VARIANCE_NAIVE = "variance_naive"
    ENTROPY = "entropy"

class EntangleSpec(_ConfigBase):
    criteria: list[EntangleCriterion] = Field(default_factory=lambda: [EntangleCriterion.VARIANCE, EntangleCriterion.ENTROPY])
    # evaluate on the two-mode grid wavefunction instead of closed-form marginals (pure TMSV only)
    on_grid: bool = False
    grid_points: Optional[int] = None

class OutputSpec(_ConfigBase):
    reports: str = "reports.jsonl"
    table: Optional[str] = "table.csv"

DEFAULT_UR_KINDS = [
    URKind.HEISENBERG,
    URKind.LINEAR,
    URKind.SHANNON,
    URKind.CG_ENTROPIC,
    URKind.CG_VARIANCE,
    URKind.CG_K,
]

class ScenarioConfig(_ConfigBase):
    """
    A runnable scenario. `seed` fixes every random draw; identical config + seed gives identical output.
    """
    name: str
    task: ScenarioTask
    state: Optional[StateSpec] = None
    pair: PairSpec = Field(default_factory=PairSpec)
    cg: Optional[CGSpec] = None
    sweep: Optional[SweepSpec] = None
    ur_kinds: list[URKind] = Field(default_factory=lambda: list(DEFAULT_UR_KINDS))
    alpha: float = Field(default=1.0, ge=0.5, le=1.0)
    mub: Optional[MubSpec] = None
    entangle: Optional[EntangleSpec] = None
    outputs: OutputSpec = Field(default_factory=OutputSpec)
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _sections_for_task(self) -> "ScenarioConfig":
        needs = {
            ScenarioTask.UR_SCAN: ("state",),
            ScenarioTask.MUB_CHECK: ("mub",),
            ScenarioTask.ENTANGLE: ("state", "cg"),
            ScenarioTask.R00_TABLE: ("sweep",),
            ScenarioTask.BOUND_CURVES: ("sweep",),
        }[self.task]
        missing = [name for name in needs if getattr(self, name) is None]
        if missing:
            raise ValueError(f"task '{self.task.value}' needs section(s) {missing}")
        if self.task == ScenarioTask.UR_SCAN and self.cg is None and self.sweep is not None:
            raise ValueError("a width sweep needs a base cg section")
        return self

    # =====================================================================
    # Parsing
    # =====================================================================

    @classmethod
    def from_json(cls, text: str, source: str = "<config>") -> "ScenarioConfig":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise ScenarioConfigError(f"{source}:{e.lineno}:{e.colno}: invalid JSON ({e.msg})") from e
        try:
            return cls.model_validate(raw)
        except ValidationError as e:
            first = e.errors()[0]
            field = ".".join(str(part) for part in first["loc"]) or "<root>"
            line = _line_of(text, first["loc"])
            raise ScenarioConfigError(f"{source}:{line}: field '{field}': {first['msg']}") from e

    @classmethod
    def from_file(cls, path: str | Path) -> "ScenarioConfig":
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ScenarioConfigError(f"cannot read config {path}: {e}") from e
        return cls.from_json(text, source=str(path))

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

def _line_of(text: str, loc: tuple) -> int:
    """1-based line of the deepest string key of `loc` found in the document, else 1."""
    for part in reversed(loc):
        if isinstance(part, str):
            index = text.find(f'"{part}"')
            if index >= 0:
                return text.count("\n", 0, index) + 1
    return 1
