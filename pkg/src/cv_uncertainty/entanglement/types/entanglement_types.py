# two-mode Gaussian states and the global operators of the PPT witnesses
from enum import Enum
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.common.types.reports import URReport
from cv_uncertainty.states.symplectic import commutator_gamma
from cv_uncertainty.states.types.state_types import GaussianState, ModeSystem, QuadratureCoeffs

# partial transposition of mode 2 acts as p2 -> -p2 (xxpp: x1, x2, p1, p2)
PPT_REFLECTION = np.diag([1.0, 1.0, 1.0, -1.0])

class TwoModeGaussian(GaussianState):
    """
    Gaussian state of two modes. Partial transposes are representable too, so bona fide-ness
    is checked by `bona_fide` / bona_fide_check rather than at construction. Witnesses refuse
    inputs that fail it.
    """
    system: ModeSystem = Field(default_factory=lambda: ModeSystem(n_modes=2))

    @model_validator(mode="after")
    def _two_modes(self) -> "TwoModeGaussian":
        if self.system.n_modes != 2:
            raise ContractViolationError(f"TwoModeGaussian needs n_modes = 2, got {self.system.n_modes}")
        return self

    @classmethod
    def from_state(cls, state: GaussianState) -> "TwoModeGaussian":
        return cls(mean=state.mean, cov=state.cov, system=state.system)

def reflect_second_momentum(d: QuadratureCoeffs) -> QuadratureCoeffs:
    return QuadratureCoeffs(d=tuple(float(c) for c in PPT_REFLECTION @ d.vector))

class GlobalOperatorPair(BaseModel):
    """
    u_+/- = x1 +/- x2 and v_+/- = p1 +/- p2 (or any vectors with the same commutator pattern):
    [u_s, v_s] = 2 i hbar gamma, [u_s, v_-s] = 0.
    """
    model_config = ConfigDict(frozen=True)

    u_plus: QuadratureCoeffs
    u_minus: QuadratureCoeffs
    v_plus: QuadratureCoeffs
    v_minus: QuadratureCoeffs

    @model_validator(mode="after")
    def _commutators(self) -> "GlobalOperatorPair":
        vectors = (self.u_plus, self.u_minus, self.v_plus, self.v_minus)
        if any(v.n_modes != 2 for v in vectors):
            raise ContractViolationError("global operators are defined over exactly two modes")
        same_plus = commutator_gamma(self.u_plus, self.v_plus)
        same_minus = commutator_gamma(self.u_minus, self.v_minus)
        mixed = (commutator_gamma(self.u_plus, self.v_minus), commutator_gamma(self.u_minus, self.v_plus))
        if same_plus == 0.0 or abs(same_plus - same_minus) > 1e-12 * abs(same_plus):
            raise ContractViolationError(
                f"[u+, v+] and [u-, v-] must share a nonzero coefficient, got {same_plus} and {same_minus}"
            )
        if any(abs(g) > 1e-12 * abs(same_plus) for g in mixed):
            raise ContractViolationError(f"mixed-sign global operators must commute, got gamma {mixed}")
        return self

    @classmethod
    def standard(cls) -> "GlobalOperatorPair":
        return cls(
            u_plus=QuadratureCoeffs(d=(1.0, 1.0, 0.0, 0.0)),
            u_minus=QuadratureCoeffs(d=(1.0, -1.0, 0.0, 0.0)),
            v_plus=QuadratureCoeffs(d=(0.0, 0.0, 1.0, 1.0)),
            v_minus=QuadratureCoeffs(d=(0.0, 0.0, 1.0, -1.0)),
        )

    @property
    def gamma(self) -> float:
        """Commutator coefficient of the same-sign pairs (2 for the standard operators)."""
        return commutator_gamma(self.u_plus, self.v_plus)

    def mixed_pairs(self) -> list[tuple[str, QuadratureCoeffs, QuadratureCoeffs]]:
        return [("u+,v-", self.u_plus, self.v_minus), ("u-,v+", self.u_minus, self.v_plus)]

    @staticmethod
    def transposed_gamma(du: QuadratureCoeffs, dv: QuadratureCoeffs) -> float:
        """Commutator coefficient the pair acquires on the partially transposed state."""
        return commutator_gamma(du, reflect_second_momentum(dv))

class WitnessMode(str, Enum):
    CONTINUOUS = "continuous"
    COARSE_GRAINED = "coarse_grained"
    # continuous bound applied to binned variances; not a valid criterion
    NAIVE = "naive"

class AdvantageInstance(BaseModel):
    """A TMSV squeezing and symmetric bin width where the entropic witness flags and the variance one does not."""
    model_config = ConfigDict(frozen=True)

    r: float
    delta: float
    entropy_report: URReport
    variance_report: URReport
