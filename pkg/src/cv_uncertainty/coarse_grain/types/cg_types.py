# coarse-graining specs, discrete outcome distributions and histogram functions
from __future__ import annotations

from enum import Enum
from typing import Annotated, Literal, Optional, Union
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, model_validator
from scipy.special import ndtr

from cv_uncertainty.common.errors import ContractViolationError

FAITHFUL_COVERAGE = 0.999999
PERIOD_TOLERANCE = 1e-12

class CGKind(str, Enum):
    STANDARD = "standard"
    PERIODIC = "periodic"

class StandardCG(BaseModel):
    """
    Contiguous bins ((k - 1/2) delta + u_cen, (k + 1/2) delta + u_cen], outcome u_k = u_cen + k delta.
    u_cen = None centers the central bin on the measured mean; k_range = None covers the whole support.
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal[CGKind.STANDARD] = CGKind.STANDARD
    delta: PositiveFloat
    u_cen: Optional[float] = None
    k_range: Optional[tuple[int, int]] = None

    @model_validator(mode="after")
    def _check_range(self) -> "StandardCG":
        if self.k_range is not None and self.k_range[0] > self.k_range[1]:
            raise ContractViolationError(f"empty k_range {self.k_range}")
        return self

    def edges(self, ks: np.ndarray, u_cen: float) -> tuple[np.ndarray, np.ndarray]:
        lower = u_cen + (np.asarray(ks, dtype=float) - 0.5) * self.delta
        return lower, lower + self.delta

class PeriodicCG(BaseModel):
    """
    Bins of width s repeated with period T = d s; outcome k collects
    [u_cen + k s + n T, u_cen + (k + 1) s + n T) for every integer n.
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal[CGKind.PERIODIC] = CGKind.PERIODIC
    s: PositiveFloat
    T: PositiveFloat
    u_cen: float = 0.0
    d: int = Field(ge=2)

    @model_validator(mode="after")
    def _period_matches(self) -> "PeriodicCG":
        if abs(self.T - self.d * self.s) > PERIOD_TOLERANCE * self.T:
            raise ContractViolationError(f"period T={self.T} must equal d*s = {self.d}*{self.s}")
        return self

    @classmethod
    def from_period(cls, T: float, d: int, u_cen: float = 0.0) -> "PeriodicCG":
        return cls(s=T / d, T=T, u_cen=u_cen, d=d)

# NOTE: discriminated on "kind" for the CLI config schema
CoarseGraining = Annotated[Union[StandardCG, PeriodicCG], Field(discriminator="kind")]

class DiscreteDistribution(BaseModel):
    """
    Outcome probabilities of a coarse-grained measurement. sum(probs) = coverage <= 1;
    coverage below FAITHFUL_COVERAGE marks the measurement design as unfaithful.
    """
    model_config = ConfigDict(frozen=True)

    kind: CGKind
    probs: tuple[float, ...]
    # real bin centers (standard) or integer labels 0..d-1 (periodic)
    outcomes: tuple[float, ...]
    coverage: float
    width: PositiveFloat
    u_cen: float = 0.0

    @model_validator(mode="after")
    def _check(self) -> "DiscreteDistribution":
        if len(self.probs) != len(self.outcomes):
            raise ContractViolationError("probs and outcomes must have equal length")
        if any(p < 0 for p in self.probs):
            raise ContractViolationError("probabilities must be nonnegative")
        total = float(np.sum(self.probs))
        if total > 1.0 + 1e-12 or abs(total - self.coverage) > 1e-12:
            raise ContractViolationError(f"probabilities sum to {total}, coverage {self.coverage}")
        return self

    @property
    def p(self) -> np.ndarray:
        return np.asarray(self.probs, dtype=float)

    @property
    def labels(self) -> np.ndarray:
        return np.asarray(self.outcomes, dtype=float)

    @property
    def normalized_probs(self) -> np.ndarray:
        if self.coverage <= 0:
            raise ContractViolationError("distribution has zero coverage")
        return self.p / self.coverage

    @property
    def faithful(self) -> bool:
        return self.coverage >= FAITHFUL_COVERAGE

    @classmethod
    def from_probs(cls, kind: CGKind, probs, outcomes, width: float, u_cen: float = 0.0) -> "DiscreteDistribution":
        probs = np.clip(np.asarray(probs, dtype=float), 0.0, None)
        return cls(
            kind=kind,
            probs=tuple(float(v) for v in probs),
            outcomes=tuple(float(v) for v in outcomes),
            coverage=float(np.sum(probs)),
            width=width,
            u_cen=u_cen,
        )

class HFKind(str, Enum):
    RECTANGULAR = "rectangular"
    GAUSSIAN_OPTIMAL = "gaussian_optimal"

class RectangularHF(BaseModel):
    """Uniform density 1/width on the bin."""
    model_config = ConfigDict(frozen=True)

    kind: Literal[HFKind.RECTANGULAR] = HFKind.RECTANGULAR
    width: PositiveFloat

    def pdf(self, u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        inside = (u >= -0.5 * self.width) & (u < 0.5 * self.width)
        return np.where(inside, 1.0 / self.width, 0.0)

class GaussianOptimalHF(BaseModel):
    """
    Gaussian of variance inner_variance, restricted to the central bin [-width/2, width/2) and renormalized.
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal[HFKind.GAUSSIAN_OPTIMAL] = HFKind.GAUSSIAN_OPTIMAL
    width: PositiveFloat
    inner_variance: PositiveFloat

    @property
    def parent_std(self) -> float:
        return float(np.sqrt(self.inner_variance))

    @property
    def truncation(self) -> tuple[float, float]:
        """Standardized truncation points (a, b) = (-width/2, width/2) / parent_std."""
        b = 0.5 * self.width / self.parent_std
        return -b, b

    def pdf(self, u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        a, b = self.truncation
        z = ndtr(b) - ndtr(a)
        s = self.parent_std
        dens = np.exp(-0.5 * (u / s) ** 2) / (s * np.sqrt(2.0 * np.pi) * z)
        inside = (u >= -0.5 * self.width) & (u < 0.5 * self.width)
        return np.where(inside, dens, 0.0)

HistogramFunction = Annotated[Union[RectangularHF, GaussianOptimalHF], Field(discriminator="kind")]
