# tests for the periodic coarse-graining unbiasedness condition and its numerical probe test
import math

import numpy as np
import pytest

from cv_uncertainty.coarse_grain import PeriodicCG, pcg_probabilities
from cv_uncertainty.common.errors import ContractViolationError, DimensionMismatchError
from cv_uncertainty.mub import (
    MubStatus,
    MubVerdict,
    alternative_forms_check,
    localized_probe_state,
    mub_condition,
    probe_centers,
    probe_grid,
    unbiasedness_test,
)

def periods_for(d: int, m: int, hbar: float = 1.0, Tu: float = 1.0) -> tuple[float, float]:
    """(Tu, Tv) with Tu Tv = 2 pi hbar d / m."""
    return Tu, 2.0 * math.pi * hbar * d / (m * Tu)

# =====================================================================
# exact condition
# =====================================================================

@pytest.mark.parametrize(
    "m, status",
    [
        (1, MubStatus.UNBIASED),
        (2, MubStatus.BIASED),
        (3, MubStatus.UNBIASED),
        (4, MubStatus.COMMUTING),
        (5, MubStatus.UNBIASED),
        (6, MubStatus.BIASED),
    ],
)
def test_d_four_table(m, status):
    verdict = mub_condition(*periods_for(4, m), d=4)
    assert verdict.status == status
    assert verdict.m == m

@pytest.mark.parametrize("m", [1, 2, 3, 4, 6])
def test_d_five_is_unbiased_for_every_coprime_m(m):
    assert mub_condition(*periods_for(5, m), d=5).unbiased

def test_d_five_commutes_for_multiples_of_d():
    assert mub_condition(*periods_for(5, 5), d=5).status == MubStatus.COMMUTING
    assert mub_condition(*periods_for(5, 10), d=5).status == MubStatus.COMMUTING

@pytest.mark.parametrize("d", [2, 3, 4, 5, 7, 12])
def test_m_one_is_always_unbiased(d):
    verdict = mub_condition(*periods_for(d, 1), d=d)
    assert verdict.unbiased
    assert verdict.product == pytest.approx(d)

def test_irrational_product_is_biased():
    verdict = mub_condition(1.0, 1.0, d=3)
    assert verdict.status == MubStatus.BIASED
    assert verdict.m is None

def test_condition_is_symmetric_and_scale_free():
    Tu, Tv = periods_for(4, 3)
    reference = mub_condition(Tu, Tv, d=4)
    assert mub_condition(Tv, Tu, d=4) == reference
    assert mub_condition(2.5 * Tu, Tv / 2.5, d=4).status == reference.status

def test_hbar_enters_the_product():
    Tu, Tv = periods_for(3, 2, hbar=2.0)
    assert mub_condition(Tu, Tv, d=3, hbar=2.0).unbiased
    assert mub_condition(Tu, Tv, d=3, hbar=math.pi).status == MubStatus.BIASED

def test_condition_contract():
    with pytest.raises(ContractViolationError):
        mub_condition(1.0, 1.0, d=1)
    with pytest.raises(ContractViolationError):
        mub_condition(-1.0, 1.0, d=2)

def test_unbiased_verdict_needs_m():
    with pytest.raises(ValueError):
        MubVerdict(status=MubStatus.UNBIASED, d=2, product=2.0)

def test_alternative_forms_agree():
    d, m = 4, 3
    Tu, Tv = periods_for(d, m, Tu=1.7)
    assert alternative_forms_check(Tu / d, Tu, Tv / d, Tv, d)

def test_alternative_forms_reject_bad_inputs():
    d = 4
    Tu, Tv = periods_for(d, 3, Tu=1.7)
    # period not d bins wide
    assert not alternative_forms_check(Tu / 3, Tu, Tv / d, Tv, d)
    # product not 2 pi hbar d / m for an integer m
    assert not alternative_forms_check(0.25, 1.0, 0.25, 1.0, d)

# =====================================================================
# probes
# =====================================================================

def test_probe_centers_sit_mid_bin():
    pcg = PeriodicCG.from_period(3.0, 3, u_cen=0.2)
    assert np.allclose(probe_centers(pcg, 1, 3), 0.2 + 1.5 + np.array([-3.0, 0.0, 3.0]))

def test_probe_grid_resolves_the_conjugate_bins():
    pcg = PeriodicCG.from_period(2.0, 2)
    x0, dx, n = probe_grid(pcg, conjugate_bin=1.0, inner_width=0.1, copies=3)
    assert dx == pytest.approx(0.025)
    assert n & (n - 1) == 0
    assert x0 == pytest.approx(-(n // 2) * dx)
    assert n * dx / (2.0 * math.pi) >= 128

@pytest.mark.parametrize("copies", [1, 5])
def test_probe_is_localized_in_its_outcome(copies):
    pcg = PeriodicCG.from_period(4.0, 4)
    psi = localized_probe_state(pcg, outcome=2, copies=copies)
    dist = pcg_probabilities(psi.density(), pcg)
    assert dist.normalized_probs[2] >= 1.0 - 1e-6

def test_probe_width_bounded_by_quarter_bin():
    pcg = PeriodicCG.from_period(4.0, 4)
    with pytest.raises(ContractViolationError):
        localized_probe_state(pcg, outcome=0, inner_width=0.5)
    with pytest.raises(ContractViolationError):
        localized_probe_state(pcg, outcome=4)

# =====================================================================
# numerical unbiasedness
# =====================================================================

def test_unbiased_pair_passes_the_probe_test():
    T = 2.0 * math.sqrt(math.pi)
    deviation = unbiasedness_test(PeriodicCG.from_period(T, 2), PeriodicCG.from_period(T, 2), trials=3, seed=3)
    assert deviation < 1e-3

def test_commuting_pair_is_far_from_unbiased():
    T = math.sqrt(2.0 * math.pi)
    pcg_u = PeriodicCG.from_period(T, 2)
    pcg_v = PeriodicCG.from_period(T, 2, u_cen=-0.25 * T)
    assert mub_condition(T, T, d=2).status == MubStatus.COMMUTING
    assert unbiasedness_test(pcg_u, pcg_v, trials=1, copies=3) > 0.4

def test_biased_pair_fails_the_probe_test():
    T = 2.0 * math.sqrt(math.pi)
    assert mub_condition(T, T, d=4).status == MubStatus.BIASED
    deviation = unbiasedness_test(PeriodicCG.from_period(T, 4), PeriodicCG.from_period(T, 4), trials=4, seed=11)
    assert deviation > 1e-2

def test_probe_test_is_deterministic_for_a_seed():
    T = 2.0 * math.sqrt(math.pi)
    pcg = PeriodicCG.from_period(T, 2)
    assert unbiasedness_test(pcg, pcg, trials=2, seed=5) == unbiasedness_test(pcg, pcg, trials=2, seed=5, workers=1)

def test_probe_test_needs_equal_outcome_counts():
    with pytest.raises(DimensionMismatchError):
        unbiasedness_test(PeriodicCG.from_period(2.0, 2), PeriodicCG.from_period(3.0, 3))
