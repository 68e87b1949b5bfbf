# mixin settings for the numerical kernels: grids, tolerances, special functions, sweeps
from pydantic import BaseModel, Field

class GridSettingsMixin(BaseModel):
    """
    Model for uniform sampling grid settings.
    """
    GRID_POINTS: int = Field(default=4096, description="Default number of samples of 1-D grid wavefunctions/densities.")
    GRID_TAIL_MASS: float = Field(default=1e-10, description="Probability mass allowed outside an auto-chosen grid window.")
    TWO_MODE_GRID_POINTS: int = Field(default=1024, description="Samples per axis for two-mode grid wavefunctions.")

class ToleranceSettingsMixin(BaseModel):
    """
    Model for numerical tolerances shared by verdicts and validators.
    """
    VERDICT_TOLERANCE: float = Field(default=1e-9, description="Absolute tolerance on UR margins.")
    NORMALIZATION_TOLERANCE: float = Field(default=1e-9, description="Tolerance on sum(|psi|^2) dx = 1.")
    FAITHFUL_COVERAGE: float = Field(default=0.999999, description="Coverage below which a coarse-grained distribution is unfaithful.")
    PCG_RESIDUAL_MASS: float = Field(default=1e-12, description="Residual mass at which periodic n-sums are truncated.")

class SpecialFunctionSettingsMixin(BaseModel):
    """
    Model for prolate / K-function evaluator settings.
    """
    PROLATE_MIN_TRUNCATION: int = Field(default=16, description="Initial number of even Legendre terms.")
    PROLATE_TAIL_TOLERANCE: float = Field(default=1e-14, description="Trailing Legendre coefficient at which the expansion is accepted.")
    PROLATE_MAX_ATTEMPTS: int = Field(default=8, description="Max truncation doublings before giving up.")
    M_INVERSE_MAX_ATTEMPTS: int = Field(default=12, description="Max bracket expansions when inverting M.")

class SweepSettingsMixin(BaseModel):
    """
    Model for parameter sweep / randomized trial settings.
    """
    SWEEP_WORKERS: int = Field(default=4, description="Thread pool size for sweeps; 1 runs sequentially.")
    DEFAULT_SEED: int = Field(default=0, description="Seed used when a scenario doesn't pin one.")
