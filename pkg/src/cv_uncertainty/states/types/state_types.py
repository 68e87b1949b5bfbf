# value types for CV quantum states: grid wavefunctions/densities, Gaussian states, quadrature vectors
# NOTE: quadrature ordering is xxpp throughout, x_hat = (x_1..x_n, p_1..p_n)
from __future__ import annotations

from typing import Literal, Union
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, computed_field, field_validator, model_validator

from cv_uncertainty.common.errors import (
    ContractViolationError,
    DimensionMismatchError,
    NormalizationError,
)

NORMALIZATION_TOLERANCE = 1e-9
SYMMETRY_TOLERANCE = 1e-12

def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype, copy=True)
    arr.flags.writeable = False
    return arr

def symplectic_form(n_modes: int) -> np.ndarray:
    """J = [[0, I], [-I, 0]] in xxpp ordering."""
    eye = np.eye(n_modes)
    zero = np.zeros((n_modes, n_modes))
    return np.block([[zero, eye], [-eye, zero]])

class ArrayModel(BaseModel):
    """
    Base for immutable, numpy-backed value types.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

class ModeSystem(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_modes: PositiveInt = 1
    hbar: PositiveFloat = 1.0

# =====================================================================
# Grid representations
# =====================================================================

class GridWavefunction(ArrayModel):
    """
    Pure-state amplitudes sampled at x_k = x0 + k dx.
    """
    samples: np.ndarray
    x0: float
    dx: PositiveFloat
    hbar: PositiveFloat = 1.0

    @field_validator("samples", mode="before")
    @classmethod
    def _as_complex(cls, v):
        return _frozen_array(v, complex)

    @model_validator(mode="after")
    def _check_normalized(self) -> "GridWavefunction":
        if self.samples.ndim != 1 or self.samples.size < 2:
            raise DimensionMismatchError(f"grid wavefunction needs a 1-D array with N >= 2, got shape {self.samples.shape}")
        norm = self.norm
        if abs(norm - 1.0) > NORMALIZATION_TOLERANCE:
            raise NormalizationError(f"wavefunction norm is {norm:.12g}, expected 1 within {NORMALIZATION_TOLERANCE}")
        return self

    @property
    def n_points(self) -> int:
        return int(self.samples.size)

    @property
    def norm(self) -> float:
        return float(np.sum(np.abs(self.samples) ** 2) * self.dx)

    @property
    def grid(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.n_points)

    def density(self) -> GridDensity:
        return GridDensity(values=np.abs(self.samples) ** 2, x0=self.x0, dx=self.dx, hbar=self.hbar)

    @classmethod
    def normalized(cls, samples, x0: float, dx: float, hbar: float = 1.0) -> "GridWavefunction":
        """Rescales raw samples to unit norm before validating."""
        arr = np.asarray(samples, dtype=complex)
        norm = float(np.sum(np.abs(arr) ** 2) * dx)
        if not np.isfinite(norm) or norm <= 0.0:
            raise NormalizationError("cannot normalize a zero or non-finite wavefunction")
        return cls(samples=arr / np.sqrt(norm), x0=x0, dx=dx, hbar=hbar)

class GridDensity(ArrayModel):
    """
    Probability density sampled on a uniform grid.
    NOTE: sample k is treated as the value of a constant cell [x_k - dx/2, x_k + dx/2),
    so every integral below is a midpoint sum and the CDF is piecewise linear.
    """
    values: np.ndarray
    x0: float
    dx: PositiveFloat
    hbar: PositiveFloat = 1.0

    @field_validator("values", mode="before")
    @classmethod
    def _as_real(cls, v):
        return _frozen_array(v, float)

    @model_validator(mode="after")
    def _check_density(self) -> "GridDensity":
        if self.values.ndim != 1 or self.values.size < 2:
            raise DimensionMismatchError(f"grid density needs a 1-D array with N >= 2, got shape {self.values.shape}")
        if np.any(self.values < 0) or not np.all(np.isfinite(self.values)):
            raise ContractViolationError("grid density has negative or non-finite values")
        total = self.total_mass
        if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
            raise NormalizationError(f"density integrates to {total:.12g}, expected 1 within {NORMALIZATION_TOLERANCE}")
        return self

    @property
    def n_points(self) -> int:
        return int(self.values.size)

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.values) * self.dx)

    @property
    def grid(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.n_points)

    @property
    def cell_edges(self) -> np.ndarray:
        return self.x0 - 0.5 * self.dx + self.dx * np.arange(self.n_points + 1)

    @property
    def mean(self) -> float:
        return float(np.sum(self.grid * self.values) * self.dx)

    @property
    def variance(self) -> float:
        centered = self.grid - self.mean
        return float(np.sum(centered ** 2 * self.values) * self.dx)

    def cdf(self, points: np.ndarray) -> np.ndarray:
        """Exact CDF of the piecewise-constant density, evaluated at arbitrary points."""
        edges = self.cell_edges
        cumulative = np.concatenate([[0.0], np.cumsum(self.values) * self.dx])
        return np.interp(np.asarray(points, dtype=float), edges, cumulative, left=0.0, right=cumulative[-1])

    @classmethod
    def normalized(cls, values, x0: float, dx: float, hbar: float = 1.0) -> "GridDensity":
        arr = np.clip(np.asarray(values, dtype=float), 0.0, None)
        total = float(np.sum(arr) * dx)
        if not np.isfinite(total) or total <= 0.0:
            raise NormalizationError("cannot normalize a zero or non-finite density")
        return cls(values=arr / total, x0=x0, dx=dx, hbar=hbar)

class GaussianMarginal(BaseModel):
    """
    Closed-form Gaussian marginal of a quadrature, N(mean, variance).
    """
    model_config = ConfigDict(frozen=True)

    mean: float = 0.0
    variance: PositiveFloat

    @property
    def std(self) -> float:
        return float(np.sqrt(self.variance))

# a marginal density, either sampled or closed-form
MarginalDensity = Union[GridDensity, GaussianMarginal]

class TwoModeGridWavefunction(ArrayModel):
    """
    psi(x1, x2) on a square uniform grid (same x0, dx on both axes); axis 0 is mode 1.
    """
    samples: np.ndarray
    x0: float
    dx: PositiveFloat
    hbar: PositiveFloat = 1.0

    @field_validator("samples", mode="before")
    @classmethod
    def _as_complex(cls, v):
        return _frozen_array(v, complex)

    @model_validator(mode="after")
    def _check_normalized(self) -> "TwoModeGridWavefunction":
        if self.samples.ndim != 2 or self.samples.shape[0] != self.samples.shape[1]:
            raise DimensionMismatchError(f"two-mode grid must be square 2-D, got shape {self.samples.shape}")
        norm = float(np.sum(np.abs(self.samples) ** 2) * self.dx ** 2)
        if abs(norm - 1.0) > NORMALIZATION_TOLERANCE:
            raise NormalizationError(f"two-mode wavefunction norm is {norm:.12g}")
        return self

    @property
    def n_points(self) -> int:
        return int(self.samples.shape[0])

    @property
    def grid(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.n_points)

# =====================================================================
# Gaussian states
# =====================================================================

class GaussianState(ArrayModel):
    """
    n-mode Gaussian state: first moments <x_hat> and covariance V_ij = <{dx_i, dx_j}>/2.
    """
    mean: np.ndarray
    cov: np.ndarray
    system: ModeSystem = Field(default_factory=ModeSystem)

    @field_validator("mean", "cov", mode="before")
    @classmethod
    def _as_real(cls, v):
        return _frozen_array(v, float)

    @model_validator(mode="after")
    def _check_cov(self) -> "GaussianState":
        dim = 2 * self.system.n_modes
        if self.mean.shape != (dim,) or self.cov.shape != (dim, dim):
            raise DimensionMismatchError(
                f"{self.system.n_modes}-mode state needs mean ({dim},) and cov ({dim},{dim}), "
                f"got {self.mean.shape} and {self.cov.shape}"
            )
        if not np.allclose(self.cov, self.cov.T, rtol=0.0, atol=SYMMETRY_TOLERANCE):
            raise ContractViolationError("asymmetric covariance matrix (tolerance 1e-12)")
        if np.linalg.eigvalsh(self.cov).min() <= 0.0:
            raise ContractViolationError("covariance matrix must be positive definite")
        return self

    @property
    def n_modes(self) -> int:
        return self.system.n_modes

    @property
    def hbar(self) -> float:
        return self.system.hbar

    @property
    def bona_fide(self) -> bool:
        """V + (i hbar / 2) J is positive semidefinite (tolerance 1e-10)."""
        hermitian = self.cov + 0.5j * self.hbar * symplectic_form(self.n_modes)
        return bool(np.linalg.eigvalsh(hermitian).min() >= -1e-10)

# =====================================================================
# Quadrature vectors
# =====================================================================

class QuadratureCoeffs(BaseModel):
    """
    Real 2n-vector d defining u_hat = d^T x_hat, with blocks (a, a') over positions and momenta.
    """
    model_config = ConfigDict(frozen=True)

    d: tuple[float, ...]

    @field_validator("d")
    @classmethod
    def _nonzero_even(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if len(v) == 0 or len(v) % 2:
            raise DimensionMismatchError(f"quadrature vector must have even length 2n, got {len(v)}")
        if not any(c != 0.0 for c in v):
            raise ContractViolationError("quadrature vector must be nonzero")
        return v

    @property
    def vector(self) -> np.ndarray:
        return np.asarray(self.d, dtype=float)

    @property
    def n_modes(self) -> int:
        return len(self.d) // 2

    @classmethod
    def position(cls, n_modes: int = 1, mode: int = 0) -> "QuadratureCoeffs":
        d = [0.0] * (2 * n_modes)
        d[mode] = 1.0
        return cls(d=tuple(d))

    @classmethod
    def momentum(cls, n_modes: int = 1, mode: int = 0) -> "QuadratureCoeffs":
        d = [0.0] * (2 * n_modes)
        d[n_modes + mode] = 1.0
        return cls(d=tuple(d))

class QuadraturePair(BaseModel):
    """
    Pair (u_hat, v_hat) with [u_hat, v_hat] = i hbar gamma.
    is_cco is a declaration of Fourier conjugacy; gamma alone never implies it.
    """
    model_config = ConfigDict(frozen=True)

    du: QuadratureCoeffs
    dv: QuadratureCoeffs
    is_cco: bool = False
    # how the CCO flag was obtained, recorded in reports
    origin: Literal["user", "canonical", "rotated"] = "user"

    @computed_field
    @property
    def gamma(self) -> float:
        if self.du.n_modes != self.dv.n_modes:
            raise DimensionMismatchError(
                f"quadrature vectors have lengths {len(self.du.d)} and {len(self.dv.d)}"
            )
        return float(self.du.vector @ symplectic_form(self.du.n_modes) @ self.dv.vector)

    @model_validator(mode="after")
    def _cco_needs_commutator(self) -> "QuadraturePair":
        if self.is_cco and self.gamma == 0.0:
            raise ContractViolationError("a CCO pair cannot have gamma = 0")
        return self

    @classmethod
    def canonical(cls, n_modes: int = 1, mode: int = 0) -> "QuadraturePair":
        return cls(
            du=QuadratureCoeffs.position(n_modes, mode),
            dv=QuadratureCoeffs.momentum(n_modes, mode),
            is_cco=True,
            origin="canonical",
        )

    @classmethod
    def rotated(cls, theta: float, n_modes: int = 1, mode: int = 0) -> "QuadraturePair":
        """
        (x cos(theta) + p sin(theta), -x sin(theta) + p cos(theta)): the variables of frft(theta)
        and frft(theta + pi/2), hence Fourier conjugate.
        """
        c, s = float(np.cos(theta)), float(np.sin(theta))
        du = [0.0] * (2 * n_modes)
        dv = [0.0] * (2 * n_modes)
        du[mode], du[n_modes + mode] = c, s
        dv[mode], dv[n_modes + mode] = -s, c
        return cls(du=QuadratureCoeffs(d=tuple(du)), dv=QuadratureCoeffs(d=tuple(dv)), is_cco=True, origin="rotated")
