# the uniform report every uncertainty relation / witness evaluates to
from __future__ import annotations

from enum import Enum
from typing import Optional
from pydantic import BaseModel, ConfigDict, Field, model_validator

# absolute tolerance on margins; mirrors ServiceSettings.VERDICT_TOLERANCE default
DEFAULT_VERDICT_TOLERANCE = 1e-9

class Verdict(str, Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    # the bound is implied by positivity alone (e.g. Gamma >= pi*e, or a negative entropic bound)
    TRIVIALLY_SATISFIED = "trivially_satisfied"

class URKind(str, Enum):
    """
    Identifier of the relation an URReport was evaluated for.
    """
    BONA_FIDE = "bona_fide"
    DET_COV = "det_cov"
    HEISENBERG = "heisenberg"
    LINEAR = "linear"
    SCHRODINGER = "schrodinger"
    ENTROPY_VARIANCE = "entropy_variance"
    SHANNON = "shannon"
    RENYI = "renyi"
    CG_ENTROPIC = "cg_entropic"
    CG_ENTROPIC_BIALYNICKI = "cg_entropic_bialynicki"
    CG_VARIANCE = "cg_variance"
    CG_K = "cg_k"
    WITNESS_VARIANCE = "witness_variance"
    WITNESS_VARIANCE_NAIVE = "witness_variance_naive"
    WITNESS_ENTROPY = "witness_entropy"

class URReport(BaseModel):
    """
    Evaluated left-hand side, lower bound, margin (lhs - bound) and verdict of one relation.
    Serializes to a single JSON line via model_dump_json().
    """
    model_config = ConfigDict(frozen=True)

    kind: URKind
    lhs: float
    bound: float
    margin: float
    verdict: Verdict
    annotations: list[str] = Field(default_factory=list)
    tolerance: float = DEFAULT_VERDICT_TOLERANCE
    # secondary bound evaluated on the same lhs (e.g. the Bialynicki-Birula variant of the CG entropic UR)
    companion: Optional[URReport] = None

    @model_validator(mode="after")
    def _verdict_matches_margin(self) -> "URReport":
        tol = self.tolerance
        if self.verdict == Verdict.VIOLATED and self.margin >= -tol:
            raise ValueError(f"verdict 'violated' inconsistent with margin {self.margin}")
        if self.verdict != Verdict.VIOLATED and self.margin < -tol:
            raise ValueError(f"verdict '{self.verdict.value}' inconsistent with margin {self.margin}")
        return self

    @classmethod
    def evaluate(
        cls,
        kind: URKind,
        lhs: float,
        bound: float,
        *,
        trivially: bool = False,
        annotations: Optional[list[str]] = None,
        companion: Optional[URReport] = None,
        tolerance: float = DEFAULT_VERDICT_TOLERANCE,
    ) -> "URReport":
        """
        Builds a report from lhs and bound. `trivially` only upgrades a non-violated verdict.
        """
        margin = float(lhs) - float(bound)
        if margin < -tolerance:
            verdict = Verdict.VIOLATED
        elif trivially:
            verdict = Verdict.TRIVIALLY_SATISFIED
        else:
            verdict = Verdict.SATISFIED
        return cls(
            kind=kind,
            lhs=float(lhs),
            bound=float(bound),
            margin=margin,
            verdict=verdict,
            annotations=list(annotations or []),
            companion=companion,
            tolerance=tolerance,
        )

    @property
    def violated(self) -> bool:
        return self.verdict == Verdict.VIOLATED
