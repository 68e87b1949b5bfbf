# JSON state specification consumed by the CLI: {"kind": "gaussian"|"grid"|"fock_superposition"|"two_mode_squeezed", ...}
from typing import Annotated, Literal, Optional, Union
import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from cv_uncertainty.states.generators import (
    fock_superposition,
    squeezed_state,
    two_mode_squeezed_covariance,
    wavefunction_from_csv,
)
from cv_uncertainty.states.types.state_types import GaussianState, GridWavefunction, ModeSystem

class _SpecBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    hbar: float = Field(default=1.0, gt=0)

class GaussianStateSpec(_SpecBase):
    """
    Either an explicit (mean, cov) pair, or a product of identical single-mode
    displaced squeezed thermal states.
    """
    kind: Literal["gaussian"] = "gaussian"
    n_modes: int = Field(default=1, ge=1)
    mean: Optional[list[float]] = None
    cov: Optional[list[list[float]]] = None
    squeezing: float = 0.0
    squeeze_angle: float = 0.0
    thermal_nbar: float = Field(default=0.0, ge=0)

    def build(self) -> GaussianState:
        system = ModeSystem(n_modes=self.n_modes, hbar=self.hbar)
        dim = 2 * self.n_modes
        if self.cov is not None:
            cov = np.asarray(self.cov, dtype=float)
        else:
            single = squeezed_state(self.squeezing, self.squeeze_angle, self.hbar, self.thermal_nbar).cov
            cov = np.zeros((dim, dim))
            for k in range(self.n_modes):
                idx = [k, self.n_modes + k]
                cov[np.ix_(idx, idx)] = single
        mean = np.zeros(dim) if self.mean is None else np.asarray(self.mean, dtype=float)
        return GaussianState(mean=mean, cov=cov, system=system)

class GridStateSpec(_SpecBase):
    kind: Literal["grid"] = "grid"
    csv_path: str
    renormalize: bool = False

    def build(self) -> GridWavefunction:
        return wavefunction_from_csv(self.csv_path, hbar=self.hbar, renormalize=self.renormalize)

class FockSuperpositionSpec(_SpecBase):
    kind: Literal["fock_superposition"] = "fock_superposition"
    # amplitudes of |0>, |1>, ...; optional phases in radians
    amplitudes: list[float] = Field(min_length=1)
    phases: Optional[list[float]] = None
    n_points: Optional[int] = None

    def build(self) -> GridWavefunction:
        amps = np.asarray(self.amplitudes, dtype=float)
        phases = np.zeros_like(amps) if self.phases is None else np.asarray(self.phases, dtype=float)
        return fock_superposition(amps * np.exp(1j * phases), hbar=self.hbar, n_points=self.n_points)

class TwoModeSqueezedSpec(_SpecBase):
    kind: Literal["two_mode_squeezed"] = "two_mode_squeezed"
    r: float = 0.0

    def build(self) -> GaussianState:
        return GaussianState(
            mean=np.zeros(4),
            cov=two_mode_squeezed_covariance(self.r, self.hbar),
            system=ModeSystem(n_modes=2, hbar=self.hbar),
        )

# NOTE: discriminated on "kind" so schema errors point at the right variant
StateSpec = Annotated[
    Union[GaussianStateSpec, GridStateSpec, FockSuperpositionSpec, TwoModeSqueezedSpec],
    Field(discriminator="kind"),
]
