from .types.state_types import (
    ModeSystem,
    GridWavefunction,
    GridDensity,
    GaussianMarginal,
    GaussianState,
    QuadratureCoeffs,
    QuadraturePair,
    TwoModeGridWavefunction,
    MarginalDensity,
    symplectic_form,
)
from .symplectic import (
    commutator_gamma,
    is_symplectic,
    random_symplectic,
    rotation_symplectic,
    squeezing_symplectic,
    transform_state,
    symplectic_eigenvalues,
)
from .gaussian_ops import gaussian_marginal, bona_fide_check, det_cov_check
from .fourier import conjugate_wavefunction, frft, parity
from .two_mode import global_position_density, global_momentum_density
from .generators import (
    vacuum_state,
    coherent_state,
    thermal_state,
    squeezed_state,
    two_mode_squeezed_covariance,
    random_bona_fide_covariance,
    random_gaussian_state,
    gaussian_wavefunction,
    wavefunction_from_gaussian_state,
    hermite_functions,
    fock_superposition,
    random_fock_superposition,
    wavefunction_from_csv,
    density_on_grid,
    mixture_density,
    two_mode_grid_from_gaussian,
)
from .state_spec import StateSpec, GaussianStateSpec, GridStateSpec, FockSuperpositionSpec, TwoModeSqueezedSpec
