# tests for the prolate radial function, the epsilon envelope, and M / K of the variance bound
import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy import special

from cv_uncertainty.common.errors import BracketError, ContractViolationError, ConvergenceError
from cv_uncertainty.special_fn import (
    K_of_t,
    M,
    M_inverse,
    ProlateEvaluator,
    conjugate_order,
    crossover_point,
    eps_alpha,
    erf,
    half_r00_squared,
    optimal_inner_variance,
    r00,
    r00_from_eigenvalue,
    renyi_constant,
    schurmann_eps,
)

# =====================================================================
# R_00(x, 1)
# =====================================================================

def test_r00_at_zero():
    assert r00(0.0) == 1.0
    assert half_r00_squared(0.0) == 0.5

@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0])
def test_r00_agrees_with_sinc_kernel_eigenvalue(x):
    assert r00(x) == pytest.approx(r00_from_eigenvalue(x), abs=1e-8)

def test_r00_large_argument_asymptote():
    ratio = (2.0 * 50.0 / math.pi) * r00(50.0) ** 2
    assert 0.99 <= ratio <= 1.0 + 1e-12

def test_r00_is_decreasing():
    values = [r00(x) for x in (0.1, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0)]
    assert all(a > b for a, b in zip(values, values[1:]))

@pytest.mark.parametrize("x", [0.3, 1.79, 7.0, 25.0])
def test_adaptive_truncation_is_converged(x):
    assert ProlateEvaluator().convergence_gap(x) < 1e-10

def test_r00_rejects_negative_argument():
    with pytest.raises(ContractViolationError):
        r00(-0.1)

def test_truncation_floor():
    with pytest.raises(ContractViolationError):
        ProlateEvaluator(truncation=8)

def test_expansion_gives_up_after_its_attempt_budget():
    evaluator = ProlateEvaluator(truncation=16, tolerance=1e-14, max_attempts=1)
    with pytest.raises(ConvergenceError):
        evaluator.coefficients(200.0)

def test_quantized_cache_shares_nearby_arguments():
    r00.cache_clear()
    r00(0.1 + 0.2)
    r00(0.3)
    assert r00.cache_info().hits == 1

# =====================================================================
# Renyi constant and epsilon_alpha
# =====================================================================

def test_conjugate_order():
    assert conjugate_order(0.75) == pytest.approx(1.5)
    assert conjugate_order(1.0) == 1.0
    assert math.isinf(conjugate_order(0.5))
    with pytest.raises(ContractViolationError):
        conjugate_order(0.4)

def test_renyi_constant_endpoints():
    assert renyi_constant(1.0) == pytest.approx(1.0 / math.e, rel=1e-12)
    assert renyi_constant(0.5) == pytest.approx(0.5, rel=1e-12)

def test_renyi_constant_matches_the_conjugate_product():
    alpha = 0.75
    beta = conjugate_order(alpha)
    expected = alpha ** (1.0 / (2.0 - 2.0 * alpha)) * beta ** (1.0 / (2.0 - 2.0 * beta))
    assert renyi_constant(alpha) == pytest.approx(expected, rel=1e-12)
    assert renyi_constant(alpha) == pytest.approx(0.375, rel=1e-12)

@pytest.mark.parametrize("alpha", [0.3, 1.2])
def test_renyi_constant_rejects_orders_outside_range(alpha):
    with pytest.raises(ContractViolationError):
        renyi_constant(alpha)
    with pytest.raises(ContractViolationError):
        eps_alpha(alpha, 1.0)

@pytest.mark.parametrize("x", [0.0, 0.5, 1.0, 1.7])
def test_envelope_is_flat_below_crossover(x):
    assert eps_alpha(1.0, x) == pytest.approx(1.0 / math.e, rel=1e-12)

def test_envelope_follows_prolate_at_large_width():
    assert eps_alpha(1.0, 100.0) < 1.0 / math.e
    assert eps_alpha(1.0, 100.0) == pytest.approx(half_r00_squared(100.0))

def test_min_entropy_envelope():
    assert eps_alpha(0.5, 0.0) == 0.5
    assert eps_alpha(0.5, 1.0) == pytest.approx(half_r00_squared(1.0))

def test_crossover_point():
    x_star = crossover_point()
    assert abs(x_star - 1.79) < 0.05
    assert half_r00_squared(x_star) == pytest.approx(1.0 / math.e, abs=1e-10)
    assert crossover_point(0.5) == 0.0

def test_schurmann_envelope_matches_at_zero():
    assert schurmann_eps(0.0) == pytest.approx(1.0 / math.e)
    assert schurmann_eps(5.0) < 1.0 / math.e

# =====================================================================
# erf, M, K
# =====================================================================

def test_erf():
    assert erf(1.0) == pytest.approx(0.8427007929, abs=1e-10)
    assert isinstance(erf(0.5), float)

@pytest.mark.parametrize("y", [1e-3, 0.1, 1.0, 7.5, 60.0, 200.0])
def test_m_inverse_round_trip(y):
    assert M_inverse(M(y)) == pytest.approx(y, rel=1e-10)

@given(st.floats(min_value=1e-3, max_value=300.0), st.floats(min_value=1e-3, max_value=300.0))
@settings(max_examples=100, deadline=None)
def test_m_is_strictly_decreasing(a, b):
    if abs(a - b) < 1e-9 * max(a, b):
        return
    lo, hi = sorted((a, b))
    assert M(lo) > M(hi)

def test_m_small_argument_expansion():
    y = 1e-4
    assert M(y) == pytest.approx(1.0 / (2.0 * y) - 1.0 / 12.0, rel=1e-9)

def test_m_contract():
    with pytest.raises(ContractViolationError):
        M(0.0)

@pytest.mark.parametrize("t", [0.0, -1.0, math.inf, math.nan])
def test_m_inverse_rejects_values_outside_range(t):
    with pytest.raises(BracketError):
        M_inverse(t)

def test_k_at_zero_and_near_zero():
    assert K_of_t(0.0) == 1.0
    assert abs(K_of_t(1e-6) - 1.0) < 1e-3
    with pytest.raises(ContractViolationError):
        K_of_t(-0.1)

def test_k_reduces_to_heisenberg_for_fine_bins():
    sigma2, delta = 1.0, 0.01
    ratio = delta ** 2 * K_of_t(sigma2 / delta ** 2) / (2.0 * math.pi * math.e * sigma2)
    assert 0.99 <= ratio <= 1.01

def _bisect_m(t: float) -> float:
    def m_of(y: float) -> float:
        return math.exp(-0.25 * y) / (2.0 * math.sqrt(math.pi * y) * special.erf(0.5 * math.sqrt(y)))

    lo, hi = 1e-8, 1e3
    for _ in range(200):
        mid = math.sqrt(lo * hi)
        if m_of(mid) > t:
            lo = mid
        else:
            hi = mid
    return math.sqrt(lo * hi)

def test_k_matches_a_bisection_oracle():
    t = 0.01
    y = _bisect_m(t)
    expected = math.exp(2.0 * t * y) / special.erf(0.5 * math.sqrt(y)) ** 2
    assert K_of_t(t) == pytest.approx(expected, rel=1e-9)

@given(st.floats(min_value=1e-4, max_value=100.0), st.floats(min_value=1e-4, max_value=100.0))
@settings(max_examples=60, deadline=None)
def test_k_is_increasing(a, b):
    if abs(a - b) < 1e-6 * max(a, b):
        return
    lo, hi = sorted((a, b))
    assert K_of_t(lo) < K_of_t(hi)

def test_optimal_inner_variance_inverts_m():
    t, width = 0.05, 2.0
    s2 = optimal_inner_variance(t, width)
    assert M(width ** 2 / (2.0 * s2)) == pytest.approx(t, rel=1e-10)
    with pytest.raises(ContractViolationError):
        optimal_inner_variance(0.0, width)
