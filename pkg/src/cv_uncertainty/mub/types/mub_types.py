# verdicts of the periodic coarse-graining unbiasedness condition
from enum import Enum
from typing import Optional
from pydantic import BaseModel, ConfigDict, Field, model_validator

from cv_uncertainty.common.errors import ContractViolationError

class MubStatus(str, Enum):
    UNBIASED = "unbiased"
    # every PCG projector of u commutes with every PCG projector of v
    COMMUTING = "commuting"
    BIASED = "biased"

class MubVerdict(BaseModel):
    """
    Outcome of testing T_u T_v / (2 pi hbar) = d/m. `m` is set whenever the product matched d/m for an integer m.
    """
    model_config = ConfigDict(frozen=True)

    status: MubStatus
    d: int = Field(ge=2)
    product: float
    m: Optional[int] = None

    @model_validator(mode="after")
    def _unbiased_has_m(self) -> "MubVerdict":
        if self.status != MubStatus.BIASED and self.m is None:
            raise ContractViolationError(f"status {self.status.value} requires the integer m")
        return self

    @property
    def unbiased(self) -> bool:
        return self.status == MubStatus.UNBIASED
