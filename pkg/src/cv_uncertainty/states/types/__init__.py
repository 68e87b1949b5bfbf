from .state_types import (
    ModeSystem,
    GridWavefunction,
    GridDensity,
    GaussianMarginal,
    GaussianState,
    QuadratureCoeffs,
    QuadraturePair,
    TwoModeGridWavefunction,
    MarginalDensity,
)

__all__ = [
    "ModeSystem",
    "GridWavefunction",
    "GridDensity",
    "GaussianMarginal",
    "GaussianState",
    "QuadratureCoeffs",
    "QuadraturePair",
    "TwoModeGridWavefunction",
    "MarginalDensity",
]
