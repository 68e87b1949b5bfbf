from .prolate import (
    ProlateEvaluator,
    r00,
    half_r00_squared,
    prolate_matrix,
    sinc_kernel_eigenvalue,
    r00_from_eigenvalue,
)
from .envelopes import conjugate_order, renyi_constant, eps_alpha, schurmann_eps, crossover_point
from .k_function import erf, M, log_M, M_inverse, K_of_t, optimal_inner_variance
