# tests for partial transposition and the variance / entropic entanglement witnesses
import math

import numpy as np
import pytest

from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.common.types.reports import URKind, Verdict
from cv_uncertainty.entanglement import (
    GlobalOperatorPair,
    TwoModeGaussian,
    WitnessMode,
    ppt_transform,
    random_separable_gaussian,
    search_entropy_advantage,
    two_mode_squeezed,
    witness_entropy,
    witness_variance,
)
from cv_uncertainty.states import (
    QuadratureCoeffs,
    QuadraturePair,
    bona_fide_check,
    coherent_state,
    gaussian_marginal,
    squeezed_state,
    two_mode_grid_from_gaussian,
    vacuum_state,
)
from cv_uncertainty.ur_bounds import CGPair

TWO_MODE_CANONICAL = QuadraturePair.canonical(n_modes=2)

def widths(delta: float, small_delta: float | None = None) -> CGPair:
    return CGPair(delta=delta, small_delta=small_delta or delta, pair=TWO_MODE_CANONICAL)

def q(*values: float) -> QuadratureCoeffs:
    return QuadratureCoeffs(d=tuple(float(v) for v in values))

# =====================================================================
# partial transposition
# =====================================================================

def test_ppt_of_squeezed_vacuum_is_not_bona_fide():
    assert bona_fide_check(two_mode_squeezed(1.0)).verdict == Verdict.SATISFIED
    assert bona_fide_check(ppt_transform(two_mode_squeezed(1.0))).violated

def test_ppt_is_an_involution(rng):
    state = random_separable_gaussian(rng)
    twice = ppt_transform(ppt_transform(state))
    assert np.array_equal(twice.cov, state.cov)
    assert np.array_equal(twice.mean, state.mean)

def test_ppt_of_separable_states_stays_bona_fide(rng):
    for _ in range(50):
        state = random_separable_gaussian(rng)
        assert bona_fide_check(state).verdict != Verdict.VIOLATED
        assert bona_fide_check(ppt_transform(state)).verdict != Verdict.VIOLATED

def test_witnesses_refuse_states_that_are_not_bona_fide():
    transposed = ppt_transform(two_mode_squeezed(1.0))
    assert isinstance(transposed, TwoModeGaussian)
    with pytest.raises(ContractViolationError, match="bona fide"):
        witness_variance(transposed)
    with pytest.raises(ContractViolationError, match="bona fide"):
        witness_entropy(transposed, widths(0.5))

def test_ppt_needs_two_modes():
    with pytest.raises(ValueError):
        ppt_transform(squeezed_state(0.3))

# =====================================================================
# two-mode squeezed vacuum
# =====================================================================

def test_zero_squeezing_is_vacuum():
    assert np.allclose(two_mode_squeezed(0.0).cov, vacuum_state(n_modes=2).cov, atol=0.0)

@pytest.mark.parametrize("r", [0.1, 0.5, 1.3])
def test_epr_variances(r):
    state = two_mode_squeezed(r)
    var_minus = gaussian_marginal(state, q(1, -1, 0, 0)).variance
    var_plus = gaussian_marginal(state, q(0, 0, 1, 1)).variance
    assert var_minus + var_plus == pytest.approx(2.0 * math.exp(-2.0 * r), rel=1e-12)

def test_two_mode_gaussian_rejects_single_mode():
    with pytest.raises(ValueError):
        TwoModeGaussian.from_state(vacuum_state())

# =====================================================================
# global operators
# =====================================================================

def test_standard_global_operators():
    pair = GlobalOperatorPair.standard()
    assert pair.gamma == 2.0
    labels = [label for label, _, _ in pair.mixed_pairs()]
    assert labels == ["u+,v-", "u-,v+"]
    for _, du, dv in pair.mixed_pairs():
        assert GlobalOperatorPair.transposed_gamma(du, dv) == 2.0

def test_global_operators_must_have_the_commutator_pattern():
    with pytest.raises(ValueError):
        GlobalOperatorPair(u_plus=q(1, 1, 0, 0), u_minus=q(1, 0, 0, 0), v_plus=q(0, 0, 1, 1), v_minus=q(0, 0, 1, -1))
    with pytest.raises(ValueError):
        GlobalOperatorPair(u_plus=q(1, 0), u_minus=q(1, 0), v_plus=q(0, 1), v_minus=q(0, 1))

# =====================================================================
# witnesses on entangled states
# =====================================================================

def test_continuous_witness_flags_squeezed_vacuum():
    report = witness_variance(two_mode_squeezed(1.0))
    assert report.kind == URKind.WITNESS_VARIANCE
    assert report.violated
    assert report.annotations[0] == "pair u-,v+"
    assert report.margin == pytest.approx(math.exp(-4.0) - 1.0, rel=1e-12)

def test_linear_form_flags_squeezed_vacuum():
    report = witness_variance(two_mode_squeezed(1.0), form="linear")
    assert report.margin == pytest.approx(2.0 * math.exp(-2.0) - 2.0, rel=1e-12)

def test_coarse_grained_witnesses_flag_squeezed_vacuum():
    state = two_mode_squeezed(1.0)
    assert witness_variance(state, cg=widths(0.1)).violated
    entropy = witness_entropy(state, widths(0.1))
    assert entropy.kind == URKind.WITNESS_ENTROPY
    assert entropy.violated
    assert any(a.startswith("variance_margin=") for a in entropy.annotations)

def test_witness_margin_decreases_with_squeezing():
    margins = [witness_variance(two_mode_squeezed(r)).margin for r in (0.0, 0.2, 0.5, 1.0)]
    assert all(a > b for a, b in zip(margins, margins[1:]))

def test_witness_on_grid_wavefunction():
    r = 0.5
    psi = two_mode_grid_from_gaussian(two_mode_squeezed(r), n_points=256)
    report = witness_variance(psi)
    assert report.violated
    assert report.margin == pytest.approx(math.exp(-4.0 * r) - 1.0, abs=5e-3)

def test_grid_witness_refuses_custom_operators():
    psi = two_mode_grid_from_gaussian(two_mode_squeezed(0.5), n_points=256)
    scaled = GlobalOperatorPair(
        u_plus=q(2, 2, 0, 0), u_minus=q(2, -2, 0, 0), v_plus=q(0, 0, 2, 2), v_minus=q(0, 0, 2, -2)
    )
    with pytest.raises(ContractViolationError):
        witness_variance(psi, pair=scaled)

def test_coarse_grained_witness_needs_widths():
    with pytest.raises(ContractViolationError):
        witness_variance(two_mode_squeezed(1.0), mode=WitnessMode.NAIVE)

# =====================================================================
# separable states are never flagged
# =====================================================================

@pytest.mark.parametrize("delta", [0.1, 1.0, 3.0])
def test_vacuum_is_never_flagged(delta):
    vacuum = TwoModeGaussian.from_state(vacuum_state(n_modes=2))
    assert not witness_variance(vacuum).violated
    assert not witness_variance(vacuum, cg=widths(delta)).violated
    assert not witness_entropy(vacuum, widths(delta)).violated

@pytest.mark.slow
def test_random_separable_states_are_never_flagged(rng):
    for _ in range(1000):
        state = random_separable_gaussian(rng)
        assert not witness_variance(state).violated
        assert not witness_variance(state, form="linear").violated
        cg = widths(float(rng.uniform(0.05, 4.0)), float(rng.uniform(0.05, 4.0)))
        assert not witness_variance(state, cg=cg).violated
        assert not witness_entropy(state, cg).violated

# =====================================================================
# false positives of the naive witness
# =====================================================================

def test_naive_witness_flags_a_coherent_state_at_coarse_bins():
    state = coherent_state([1.5, -0.7, 0.4, 2.0])
    naive = witness_variance(state, cg=widths(10.0), mode=WitnessMode.NAIVE)
    assert naive.kind == URKind.WITNESS_VARIANCE_NAIVE
    assert naive.violated

    corrected = witness_variance(state, cg=widths(10.0))
    assert corrected.verdict == Verdict.TRIVIALLY_SATISFIED
    assert corrected.lhs == pytest.approx((100.0 / 12.0) ** 2, rel=1e-4)
    assert corrected.lhs > corrected.bound

# =====================================================================
# entropic advantage
# =====================================================================

def test_entropy_witness_detects_where_variance_does_not():
    delta = math.sqrt(10.0)
    state = two_mode_squeezed(0.3)
    assert witness_entropy(state, widths(delta)).violated
    assert not witness_variance(state, cg=widths(delta)).violated

def test_search_finds_the_advantage_instance():
    instance = search_entropy_advantage([0.3], [0.1, math.sqrt(10.0)])
    assert instance is not None
    assert instance.r == 0.3
    assert instance.delta == pytest.approx(math.sqrt(10.0))
    assert instance.entropy_report.violated
    assert not instance.variance_report.violated

def test_search_returns_none_without_entanglement():
    assert search_entropy_advantage([0.0], [0.5, 1.0, math.sqrt(10.0)]) is None
