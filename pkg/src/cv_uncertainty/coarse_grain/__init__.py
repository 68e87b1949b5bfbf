from .types.cg_types import (
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
from .binning import (
    interval_mass,
    resolve_u_cen,
    bin_probabilities,
    pcg_probabilities,
    discrete_variance,
)
from .histogram import hf_moments, render_Q
from .csv_io import to_csv, from_csv
