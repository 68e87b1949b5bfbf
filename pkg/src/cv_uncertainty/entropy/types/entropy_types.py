# entropy orders and conjugate (alpha, beta) pairs
import math
from typing import Literal
from pydantic import BaseModel, ConfigDict, model_validator

from cv_uncertainty.common.errors import ContractViolationError

class RenyiOrder(BaseModel):
    """alpha > 0; alpha = 1 is the Shannon branch, alpha = inf the min-entropy."""
    model_config = ConfigDict(frozen=True)

    alpha: float = 1.0

    @model_validator(mode="after")
    def _positive(self) -> "RenyiOrder":
        if not self.alpha > 0:
            raise ContractViolationError(f"Renyi order must be positive, got {self.alpha}")
        return self

    @property
    def is_shannon(self) -> bool:
        return self.alpha == 1.0

class ConjugatePair(BaseModel):
    """
    (alpha, beta) with 1/alpha + 1/beta = 2 and 1/2 <= alpha <= 1.
    u_order says which of the two orders is applied to the u distribution.
    """
    model_config = ConfigDict(frozen=True)

    alpha: float = 1.0
    beta: float = 1.0
    u_order: Literal["alpha", "beta"] = "alpha"

    @model_validator(mode="after")
    def _conjugate(self) -> "ConjugatePair":
        if not 0.5 <= self.alpha <= 1.0:
            raise ContractViolationError(f"alpha must lie in [1/2, 1], got {self.alpha}")
        inv_beta = 0.0 if math.isinf(self.beta) else 1.0 / self.beta
        if abs(1.0 / self.alpha + inv_beta - 2.0) >= 1e-12:
            raise ContractViolationError(f"1/alpha + 1/beta must equal 2, got alpha={self.alpha}, beta={self.beta}")
        return self

    @classmethod
    def from_alpha(cls, alpha: float, u_order: Literal["alpha", "beta"] = "alpha") -> "ConjugatePair":
        beta = math.inf if alpha == 0.5 else alpha / (2.0 * alpha - 1.0)
        return cls(alpha=alpha, beta=beta, u_order=u_order)

    @property
    def is_shannon(self) -> bool:
        return self.alpha == 1.0

    @property
    def order_u(self) -> float:
        return self.alpha if self.u_order == "alpha" else self.beta

    @property
    def order_v(self) -> float:
        return self.beta if self.u_order == "alpha" else self.alpha
