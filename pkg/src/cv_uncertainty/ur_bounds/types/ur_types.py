# joint coarse-graining parameters of a measured quadrature pair
from pydantic import BaseModel, ConfigDict, PositiveFloat, computed_field, model_validator

from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.states.types.state_types import QuadraturePair

class CGPair(BaseModel):
    """
    Bin widths (delta for u, small_delta for v) of a quadrature pair.
    gamma_capital = delta * small_delta / (hbar |gamma|) is recomputed from the fields.
    """
    model_config = ConfigDict(frozen=True)

    delta: PositiveFloat
    small_delta: PositiveFloat
    pair: QuadraturePair
    hbar: PositiveFloat = 1.0

    @model_validator(mode="after")
    def _nonzero_commutator(self) -> "CGPair":
        if self.pair.gamma == 0.0:
            raise ContractViolationError("coarse-grained URs need a pair with nonzero commutator coefficient")
        return self

    @computed_field
    @property
    def gamma_capital(self) -> float:
        return self.delta * self.small_delta / (self.hbar * abs(self.pair.gamma))

    @property
    def abs_gamma(self) -> float:
        return abs(self.pair.gamma)

    @classmethod
    def symmetric(cls, width: float, pair: QuadraturePair, hbar: float = 1.0) -> "CGPair":
        return cls(delta=width, small_delta=width, pair=pair, hbar=hbar)

