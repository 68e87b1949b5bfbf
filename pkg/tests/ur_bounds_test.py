# tests for continuous, coarse-grained and discrete uncertainty relations
import math

import numpy as np
import pytest
from scipy.stats import unitary_group

from cv_uncertainty.coarse_grain import GaussianOptimalHF, RectangularHF, StandardCG, bin_probabilities, discrete_variance
from cv_uncertainty.common.errors import ContractViolationError, DimensionMismatchError
from cv_uncertainty.common.types.reports import URKind, Verdict
from cv_uncertainty.entropy import ConjugatePair, differential_entropy
from cv_uncertainty.states import (
    GaussianMarginal,
    QuadratureCoeffs,
    QuadraturePair,
    gaussian_marginal,
    random_gaussian_state,
    squeezed_state,
    thermal_state,
    vacuum_state,
)
from cv_uncertainty.ur_bounds import (
    BoundCurveRow,
    CGPair,
    bialynicki_bound,
    bound_curves,
    cg_entropic_bound,
    cg_entropic_ur,
    cg_K_ur,
    cg_reports_from_densities,
    cg_variance_ur,
    cgrur_bound,
    discrete_mu_bounds,
    heisenberg_ur,
    k_bound,
    linear_ur,
    renyi_ur,
    schrodinger_ur,
    shannon_ur,
)
from cv_uncertainty.ur_bounds.coarse_grained import TRIVIAL_GAMMA

CANONICAL = QuadraturePair.canonical()
VACUUM_MARGINAL = GaussianMarginal(variance=0.5)

# =====================================================================
# continuous relations
# =====================================================================

def test_heisenberg_saturated_by_vacuum():
    report = heisenberg_ur(0.5, 0.5, 1.0)
    assert report.kind == URKind.HEISENBERG
    assert report.verdict == Verdict.SATISFIED
    assert report.margin == 0.0

def test_heisenberg_violation_is_data():
    report = heisenberg_ur(0.1, 0.1, 1.0)
    assert report.violated
    assert report.margin == pytest.approx(0.01 - 0.25)

def test_linear_ur_scales_with_hbar():
    assert linear_ur(1.0, 1.0, 1.0, hbar=2.0).margin == pytest.approx(0.0)
    assert linear_ur(0.4, 0.4, 1.0).violated

def test_negative_variance_rejected():
    with pytest.raises(ContractViolationError):
        heisenberg_ur(-0.1, 1.0, 1.0)

def test_schrodinger_saturated_by_rotated_squeezed_state():
    state = squeezed_state(0.7, phi=0.5)
    report = schrodinger_ur(state)
    assert state.cov[0, 1] != 0.0
    assert abs(report.margin) < 1e-12
    # the plain product relation leaves slack the correlation term accounts for
    assert heisenberg_ur(state.cov[0, 0], state.cov[1, 1], 1.0).margin > 1e-3

def test_schrodinger_strict_for_thermal_state():
    assert schrodinger_ur(thermal_state(0.5)).margin == pytest.approx(1.0 - 0.25)

def test_schrodinger_mode_out_of_range():
    with pytest.raises(ContractViolationError):
        schrodinger_ur(vacuum_state(), mode=2)

def test_shannon_saturated_by_vacuum():
    h = differential_entropy(VACUUM_MARGINAL)
    report = shannon_ur(h, h, 1.0)
    assert report.kind == URKind.SHANNON
    assert abs(report.margin) < 1e-12

def test_shannon_needs_a_commutator():
    with pytest.raises(ContractViolationError):
        shannon_ur(1.0, 1.0, 0.0)

@pytest.mark.parametrize("alpha", [0.5, 0.75, 1.0])
def test_renyi_saturated_by_vacuum(alpha):
    pair = ConjugatePair.from_alpha(alpha)
    h_u = differential_entropy(VACUUM_MARGINAL, pair.alpha)
    h_v = differential_entropy(VACUUM_MARGINAL, pair.beta)
    report = renyi_ur(h_u, h_v, pair, cco=True)
    assert report.kind == URKind.RENYI
    assert abs(report.margin) < 1e-12

def test_renyi_refuses_non_conjugate_pairs():
    with pytest.raises(ContractViolationError):
        renyi_ur(1.0, 1.0, ConjugatePair.from_alpha(0.75), cco=False)

# =====================================================================
# closed-form coarse-grained bounds
# =====================================================================

def test_cgrur_fine_limit():
    assert cgrur_bound(1e-4) == pytest.approx(math.log(math.pi * math.e / 1e-4), abs=1e-9)

def test_cgrur_vanishes_for_coarse_bins():
    assert abs(cgrur_bound(100.0)) < 1e-6
    assert cgrur_bound(100.0) >= 0.0

@pytest.mark.parametrize("gamma_capital", [0.1, 1.0, 4.0, 6.8])
def test_cgrur_equals_bialynicki_below_crossover(gamma_capital):
    assert cgrur_bound(gamma_capital) == pytest.approx(bialynicki_bound(gamma_capital), abs=1e-12)

@pytest.mark.parametrize("gamma_capital", [0.1, 1.0, 8.0, 20.0, 100.0])
@pytest.mark.parametrize("alpha", [0.5, 0.75, 1.0])
def test_cgrur_never_below_bialynicki(gamma_capital, alpha):
    assert cgrur_bound(gamma_capital, alpha) >= bialynicki_bound(gamma_capital, alpha) - 1e-12

def test_cgrur_strictly_better_above_crossover():
    assert cgrur_bound(20.0) > bialynicki_bound(20.0) + 1e-3

@pytest.mark.parametrize("gamma_capital", [0.1, 1.0, 10.0, 100.0])
def test_k_bound_exceeds_one(gamma_capital):
    assert k_bound(gamma_capital) > 1.0

def test_k_bound_tends_to_one():
    assert k_bound(1e3) == pytest.approx(1.0, abs=1e-2)

# =====================================================================
# coarse-grained evaluators
# =====================================================================

def test_sharp_distributions_violate_the_cg_variance_relation():
    report = cg_variance_ur(0.0, 0.0, CGPair.symmetric(1.0, CANONICAL))
    assert report.kind == URKind.CG_VARIANCE
    assert report.lhs == pytest.approx(1.0 / 144.0)
    assert report.bound == pytest.approx(0.25)
    assert report.violated

def test_cg_variance_trivial_above_pi_e():
    width = math.sqrt(4.0 * math.pi * math.e)
    cgp = CGPair.symmetric(width, CANONICAL)
    assert cgp.gamma_capital >= TRIVIAL_GAMMA
    report = cg_variance_ur(0.0, 0.0, cgp)
    assert report.verdict == Verdict.TRIVIALLY_SATISFIED

def test_cg_k_holds_for_binned_vacuum():
    cgp = CGPair.symmetric(2.0, CANONICAL)
    dist = bin_probabilities(VACUUM_MARGINAL, StandardCG(delta=2.0))
    var = discrete_variance(dist)
    report = cg_K_ur(var, var, cgp)
    assert report.kind == URKind.CG_K
    assert not report.violated

def test_cg_k_needs_conjugate_pair():
    pair = QuadraturePair(du=QuadratureCoeffs(d=(1.0, 0.0)), dv=QuadratureCoeffs(d=(1.0, 1.0)))
    with pytest.raises(ContractViolationError):
        cg_K_ur(0.1, 0.1, CGPair.symmetric(1.0, pair))

def test_cg_entropic_has_bialynicki_companion():
    cgp = CGPair.symmetric(5.0, CANONICAL)
    dist = bin_probabilities(VACUUM_MARGINAL, StandardCG(delta=5.0))
    report = cg_entropic_ur(dist, dist, cgp)
    assert report.kind == URKind.CG_ENTROPIC
    assert report.companion.kind == URKind.CG_ENTROPIC_BIALYNICKI
    # bialynicki bound is negative at Gamma = 25
    assert report.companion.verdict == Verdict.TRIVIALLY_SATISFIED
    assert any(a.startswith("schurmann_bound=") for a in report.annotations)

def test_cg_entropic_refuses_renyi_on_general_pairs():
    pair = QuadraturePair(du=QuadratureCoeffs(d=(1.0, 0.0)), dv=QuadratureCoeffs(d=(1.0, 1.0)))
    cgp = CGPair.symmetric(1.0, pair)
    dist = bin_probabilities(VACUUM_MARGINAL, StandardCG(delta=1.0))
    with pytest.raises(ContractViolationError):
        cg_entropic_ur(dist, dist, cgp, ConjugatePair.from_alpha(0.75))
    assert "non-cco" in cg_entropic_ur(dist, dist, cgp).annotations

def test_cg_entropic_rejects_width_mismatch():
    dist = bin_probabilities(VACUUM_MARGINAL, StandardCG(delta=1.0))
    with pytest.raises(ContractViolationError):
        cg_entropic_ur(dist, dist, CGPair.symmetric(0.5, CANONICAL))
    with pytest.raises(ContractViolationError):
        cg_entropic_ur(dist, dist, CGPair.symmetric(1.0, CANONICAL), hf_u=RectangularHF(width=0.5))

GENERAL_PAIR = QuadraturePair(du=QuadratureCoeffs(d=(1.0, 0.0)), dv=QuadratureCoeffs(d=(1.0, 1.0)))

def test_general_pairs_get_no_prolate_correction():
    # Gamma = 20 puts Gamma / 4 well above the eps_1 crossover
    cgp = CGPair(delta=5.0, small_delta=4.0, pair=GENERAL_PAIR)
    assert cgp.gamma_capital == pytest.approx(20.0)
    dist_u = bin_probabilities(VACUUM_MARGINAL, StandardCG(delta=5.0))
    dist_v = bin_probabilities(GaussianMarginal(variance=1.0), StandardCG(delta=4.0))

    entropic = cg_entropic_ur(dist_u, dist_v, cgp)
    assert entropic.bound == pytest.approx(math.log(math.pi * math.e / 20.0), rel=1e-12)
    assert entropic.bound < cgrur_bound(20.0)
    assert "non-cco" in entropic.annotations
    assert not any(a.startswith("schurmann_bound=") for a in entropic.annotations)
    assert cg_entropic_bound(cgp) == entropic.bound

    variance = cg_variance_ur(0.0, 0.0, cgp)
    assert variance.bound == pytest.approx(0.25, rel=1e-12)
    canonical = cg_variance_ur(0.0, 0.0, CGPair(delta=5.0, small_delta=4.0, pair=CANONICAL))
    assert canonical.bound > variance.bound

def test_general_pairs_below_crossover_match_the_conjugate_bound():
    cgp = CGPair(delta=1.0, small_delta=2.0, pair=GENERAL_PAIR)
    assert cg_entropic_bound(cgp) == pytest.approx(cgrur_bound(2.0), abs=1e-12)
    assert cg_variance_ur(0.0, 0.0, cgp).bound == pytest.approx(
        cg_variance_ur(0.0, 0.0, CGPair(delta=1.0, small_delta=2.0, pair=CANONICAL)).bound, rel=1e-12
    )

def test_general_pair_variance_needs_rectangular_bins():
    cgp = CGPair.symmetric(1.0, GENERAL_PAIR)
    with pytest.raises(ContractViolationError):
        cg_variance_ur(0.1, 0.1, cgp, hf_u=GaussianOptimalHF(width=1.0, inner_variance=0.01))

def test_cg_pair_needs_a_commutator():
    pair = QuadraturePair(du=QuadratureCoeffs(d=(1.0, 0.0)), dv=QuadratureCoeffs(d=(2.0, 0.0)))
    with pytest.raises(ValueError):
        CGPair.symmetric(1.0, pair)

RENYI_ORDERS = (1.0, 0.6, 0.75, 0.9)

@pytest.mark.slow
def test_random_states_never_violate_cg_relations(rng):
    checked = 0
    while checked < 10_000:
        state = random_gaussian_state(1, rng)
        if rng.random() < 0.5:
            pair = QuadraturePair.rotated(float(rng.uniform(0, math.pi)))
            orders = ConjugatePair.from_alpha(float(rng.choice(RENYI_ORDERS)), u_order=str(rng.choice(["alpha", "beta"])))
        else:
            pair = QuadraturePair(
                du=QuadratureCoeffs(d=tuple(rng.normal(size=2))),
                dv=QuadratureCoeffs(d=tuple(rng.normal(size=2))),
            )
            if abs(pair.gamma) < 1e-3:
                continue
            orders = ConjugatePair()
        # Gamma log-uniform on [1e-3, 1e3], split unevenly between the two widths
        gamma_capital = 10.0 ** float(rng.uniform(-3.0, 3.0))
        scale = math.sqrt(gamma_capital * abs(pair.gamma))
        skew = math.exp(float(rng.uniform(-1.0, 1.0)))
        cgp = CGPair(delta=scale * skew, small_delta=scale / skew, pair=pair)
        reports = cg_reports_from_densities(
            gaussian_marginal(state, pair.du), gaussian_marginal(state, pair.dv), cgp, orders
        )
        assert [r.kind for r in reports][:2] == [URKind.CG_ENTROPIC, URKind.CG_VARIANCE]
        assert len(reports) == (3 if pair.is_cco else 2)
        for report in reports:
            assert not report.violated, (gamma_capital, orders, report)
        checked += 1

# =====================================================================
# finite-dimensional bounds
# =====================================================================

def test_hadamard_bases():
    deutsch, mu = discrete_mu_bounds(np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0))
    assert mu == pytest.approx(math.log(2.0))
    assert deutsch == pytest.approx(-2.0 * math.log(0.5 * (1.0 + math.sqrt(0.5))))

def test_identical_bases_have_no_bound():
    assert discrete_mu_bounds(np.eye(3)) == (0.0, 0.0)

def test_deutsch_never_exceeds_mu():
    for seed in range(10):
        U = unitary_group.rvs(4, random_state=seed)
        deutsch, mu = discrete_mu_bounds(U)
        assert deutsch <= mu + 1e-12

def test_discrete_bounds_contract():
    with pytest.raises(ContractViolationError):
        discrete_mu_bounds(np.array([[1.0, 1.0], [0.0, 1.0]]))
    with pytest.raises(DimensionMismatchError):
        discrete_mu_bounds(np.ones((2, 3)))

# =====================================================================
# bound curves
# =====================================================================

def test_bound_curves_keep_input_order():
    gammas = [50.0, 0.1, 7.0, 2.0, 200.0]
    rows = bound_curves(gammas, workers=4)
    assert [row.gamma_capital for row in rows] == gammas
    assert rows == bound_curves(gammas, workers=1)
    assert BoundCurveRow.header()[0] == "gamma_capital"

def test_bound_curves_drop_schurmann_for_renyi_orders():
    rows = bound_curves([1.0, 10.0], alpha=0.75, workers=1)
    assert all(row.schurmann is None for row in rows)
    assert all(row.cgrur >= row.bialynicki - 1e-12 for row in rows)
