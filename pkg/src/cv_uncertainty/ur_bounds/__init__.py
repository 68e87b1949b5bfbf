from .types.ur_types import CGPair
from .continuous import heisenberg_ur, linear_ur, schrodinger_ur, shannon_ur, renyi_ur
from .coarse_grained import (
    cgrur_bound,
    cg_entropic_bound,
    bialynicki_bound,
    schurmann_bound,
    k_bound,
    cg_variance_factor,
    cg_entropic_ur,
    cg_variance_ur,
    cg_K_ur,
    cg_reports_from_densities,
)
from .discrete import discrete_mu_bounds
from .curves import BoundCurveRow, bound_row, bound_curves
