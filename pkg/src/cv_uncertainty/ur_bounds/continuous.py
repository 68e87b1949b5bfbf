# uncertainty relations of the continuous (fine-grained) quadrature statistics
import math

from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.common.types.reports import URKind, URReport
from cv_uncertainty.entropy.types.entropy_types import ConjugatePair
from cv_uncertainty.special_fn.envelopes import renyi_constant
from cv_uncertainty.states.types.state_types import GaussianState

def _check_variances(var_u: float, var_v: float) -> None:
    if var_u < 0 or var_v < 0:
        raise ContractViolationError(f"variances must be nonnegative, got {var_u}, {var_v}")

def heisenberg_ur(var_u: float, var_v: float, gamma: float, hbar: float = 1.0) -> URReport:
    """sigma_u^2 sigma_v^2 >= hbar^2 gamma^2 / 4."""
    _check_variances(var_u, var_v)
    bound = 0.25 * hbar ** 2 * gamma ** 2
    return URReport.evaluate(URKind.HEISENBERG, var_u * var_v, bound)

def linear_ur(var_u: float, var_v: float, gamma: float, hbar: float = 1.0) -> URReport:
    """sigma_u^2 + sigma_v^2 >= hbar |gamma|; implied by the product form."""
    _check_variances(var_u, var_v)
    return URReport.evaluate(URKind.LINEAR, var_u + var_v, hbar * abs(gamma))

def schrodinger_ur(state: GaussianState, mode: int = 0) -> URReport:
    """
    sigma_x^2 sigma_p^2 >= hbar^2/4 + V_xp^2 for one mode of a Gaussian state.
    The symmetrized moment <{dx, dp}>/2 is read off the covariance as V_xp.
    """
    if not isinstance(state, GaussianState):
        raise ContractViolationError("schrodinger_ur needs a Gaussian state (anticommutator moment read from V)")
    if not 0 <= mode < state.n_modes:
        raise ContractViolationError(f"mode index {mode} out of range for a {state.n_modes}-mode state")
    n = state.n_modes
    v_xx = float(state.cov[mode, mode])
    v_pp = float(state.cov[n + mode, n + mode])
    v_xp = float(state.cov[mode, n + mode])
    bound = 0.25 * state.hbar ** 2 + v_xp ** 2
    return URReport.evaluate(URKind.SCHRODINGER, v_xx * v_pp, bound)

def shannon_ur(h_u: float, h_v: float, gamma: float, hbar: float = 1.0) -> URReport:
    """h[P_u] + h[P_v] >= ln(pi e hbar |gamma|); holds for arbitrary linear combinations."""
    if gamma == 0.0:
        raise ContractViolationError("shannon_ur needs a nonzero commutator coefficient")
    bound = math.log(math.pi * math.e * hbar * abs(gamma))
    return URReport.evaluate(URKind.SHANNON, h_u + h_v, bound)

def renyi_ur(
    h_alpha_u: float,
    h_beta_v: float,
    pair: ConjugatePair,
    cco: bool,
    gamma: float = 1.0,
    hbar: float = 1.0,
) -> URReport:
    """
    h_alpha[P_u] + h_beta[P_v] >= ln(pi hbar |gamma| / (alpha^(1/(2-2 alpha)) beta^(1/(2-2 beta)))).
    Only established for canonically conjugate pairs (including fractional-Fourier rotated ones).
    """
    if not cco:
        logger.error("renyi_ur: refused a pair not declared canonically conjugate")
        raise ContractViolationError(
            "the Renyi entropic UR is only established for canonically conjugate pairs; "
            "use shannon_ur for general linear combinations"
        )
    if gamma == 0.0:
        raise ContractViolationError("renyi_ur needs a nonzero commutator coefficient")
    bound = math.log(math.pi * hbar * abs(gamma) / renyi_constant(pair.alpha))
    return URReport.evaluate(URKind.RENYI, h_alpha_u + h_beta_v, bound, annotations=[f"alpha={pair.alpha:.6g}"])
