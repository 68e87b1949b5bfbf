from .cg_types import (
    StandardCG,
    PeriodicCG,
    DiscreteDistribution,
    CGKind,
    HFKind,
    RectangularHF,
    GaussianOptimalHF,
    HistogramFunction,
    CoarseGraining,
)

__all__ = [
    "StandardCG",
    "PeriodicCG",
    "DiscreteDistribution",
    "CGKind",
    "HFKind",
    "RectangularHF",
    "GaussianOptimalHF",
    "HistogramFunction",
    "CoarseGraining",
]
