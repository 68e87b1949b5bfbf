# output records of a scenario run: JSON lines plus an optional CSV table
from typing import Any, Optional
from pydantic import BaseModel, ConfigDict, Field

from cv_uncertainty.common.types.reports import URReport

class ReportRecord(BaseModel):
    """One evaluated (or refused) relation at one sweep point."""
    model_config = ConfigDict(frozen=True)

    scenario: str
    point: int
    label: str
    params: dict[str, float] = Field(default_factory=dict)
    report: Optional[URReport] = None
    # set instead of `report` when an evaluator refused its contract (e.g. Renyi UR on a non-CCO pair)
    refused: Optional[str] = None

class MubRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    scenario: str
    point: int
    d: int
    m: Optional[int]
    product: float
    status: str
    forms_consistent: bool
    deviation: Optional[float] = None

class CheckRecord(BaseModel):
    """One smoke check of the validate command; informational checks always pass."""
    model_config = ConfigDict(frozen=True)

    check: str
    passed: bool
    value: Optional[float] = None
    detail: str = ""

class ScenarioOutput(BaseModel):
    """Ordered JSON-line records and CSV rows of one run."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    records: list[BaseModel] = Field(default_factory=list)
    header: list[str] = Field(default_factory=list)
    rows: list[list[Any]] = Field(default_factory=list)

    def lines(self) -> list[str]:
        return [record.model_dump_json(exclude_none=True) for record in self.records]

    def violations(self) -> int:
        return sum(
            1 for record in self.records
            if isinstance(record, ReportRecord) and record.report is not None and record.report.violated
        )
