"""Q function, zero loci, and second-moment separability witnesses."""

import cmath
import json
import math

import numpy as np
import pytest
from scipy.integrate import simpson

from paircoherent import (
    duan_total_variance,
    j0_zero,
    joint_variance,
    mancini_product,
    pair_coherent,
    pair_coherent_total_variance,
    q_function,
    q_grid,
    q_zero_loci,
    sign_condition,
    squeezed_vacuum,
)
from paircoherent.errors import DomainError


def i0_series(x: float, terms: int = 200) -> float:
    return math.fsum(
        math.exp(2.0 * k * math.log(x / 2.0) - 2.0 * math.lgamma(k + 1))
        for k in range(terms)) if x > 0 else 1.0


def i1_series(x: float, terms: int = 200) -> float:
    return math.fsum(
        math.exp((2.0 * k + 1) * math.log(x / 2.0)
                 - math.lgamma(k + 1) - math.lgamma(k + 2))
        for k in range(terms)) if x > 0 else 0.0


def test_q_at_origin():
    for zeta in (0.5, 1.0, 2.0):
        expected = 1.0 / (math.pi**2 * i0_series(2.0 * zeta))
        assert q_function(zeta, 0.0, 0.0) == pytest.approx(expected, rel=1e-12)


def test_q_vanishes_at_first_locus():
    z1 = j0_zero(1)
    # several factorizations of |alpha||beta| = z1^2/4, out of phase
    for a_mod in (z1 / 2.0, 0.4, 1.9):
        b_mod = z1**2 / 4.0 / a_mod
        assert q_function(1.0, a_mod, -b_mod) < 1e-12


def test_q_fock_sum_oracle():
    # oracle: Q = |<alpha,beta|psi>|^2 / pi^2 with the coherent-state
    # overlaps <alpha,beta|n,n> = e^{-(|a|^2+|b|^2)/2} (a* b*)^n / n!
    rng = np.random.default_rng(99)
    zeta = 0.9 * cmath.exp(0.7j)
    state = pair_coherent(zeta)
    c = state.coefficients
    n = np.arange(c.size)
    lf = np.array([math.lgamma(k + 1) for k in n])
    for _ in range(20):
        alpha = rng.uniform(0.05, 2.5) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        beta = rng.uniform(0.05, 2.5) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        w = np.conj(alpha) * np.conj(beta)
        overlap = math.exp(-0.5 * (abs(alpha) ** 2 + abs(beta) ** 2)) \
            * np.sum(c * np.exp(n * np.log(w) - lf))
        expected = abs(overlap) ** 2 / math.pi**2
        assert q_function(zeta, alpha, beta) == pytest.approx(expected, abs=1e-12)


def test_q_positive_everywhere():
    rng = np.random.default_rng(5)
    for zeta in (0.3, 1.5, 3.0, 2.0 * cmath.exp(0.9j)):
        alpha = rng.uniform(0, 4, 2500) * np.exp(1j * rng.uniform(0, 2 * np.pi, 2500))
        beta = rng.uniform(0, 4, 2500) * np.exp(1j * rng.uniform(0, 2 * np.pi, 2500))
        values = q_function(zeta, alpha, beta)
        assert np.all(values >= 0.0)


@pytest.mark.parametrize("zeta", [1.0, 0.8 * cmath.exp(0.7j)])
def test_q_normalization(zeta):
    # Q depends on the angles only through their sum s, so
    # integral = 2 pi * int ds dr_a dr_b r_a r_b Q(r_a, r_b e^{is})
    r = np.linspace(0.0, 6.0, 61)
    s = np.linspace(0.0, 2.0 * np.pi, 81)
    ra = r[:, None, None]
    rb = r[None, :, None]
    phase = np.exp(1j * s)[None, None, :]
    values = q_function(zeta, ra.astype(complex), rb * phase) * ra * rb
    inner = simpson(values, x=s, axis=2)
    inner = simpson(inner, x=r, axis=1)
    total = 2.0 * np.pi * simpson(inner, x=r, axis=0)
    assert total == pytest.approx(1.0, abs=1e-3)


def test_zero_confirmation_in_vs_out_of_phase():
    # the Gaussian envelope makes the in-phase value tiny in absolute
    # terms past k = 1 (~2e-5 at k = 2), so the absolute 1e-3 anchor is
    # asserted at the first locus and the in/out separation at all five
    for k in range(1, 6):
        a_mod = j0_zero(k) / 2.0
        out_phase = q_function(1.0, a_mod, -a_mod)
        in_phase = q_function(1.0, a_mod, a_mod)
        assert out_phase < 1e-12
        assert in_phase > 1e6 * out_phase
    assert q_function(1.0, j0_zero(1) / 2.0, j0_zero(1) / 2.0) > 1e-3


def test_q_zero_loci_values():
    assert q_zero_loci(1.0, 1) == pytest.approx(2.4048**2 / 4.0, abs=1e-3)
    assert q_zero_loci(1.0, 1) == pytest.approx(1.4458, abs=1e-4)
    assert q_zero_loci(1.0, 3) == pytest.approx(8.6537**2 / 4.0, abs=1e-3)
    assert q_zero_loci(2.0, 4) == q_zero_loci(1.0, 4) / 2.0


def test_q_zero_loci_domain():
    with pytest.raises(DomainError):
        q_zero_loci(0.0, 1)
    with pytest.raises(DomainError):
        q_zero_loci(-1.0, 1)
    with pytest.raises(DomainError):
        q_zero_loci(1.0 + 0.5j, 1)
    with pytest.raises(DomainError):
        q_zero_loci(1.0, 31)


def test_q_grid_properties():
    grid = q_grid(1.0, 3.0, 61, math.pi)
    assert np.all(grid.values >= 0.0)
    assert np.all(np.diff(grid.alpha_abs) > 0)
    # far-field nodes of the out-of-phase grid do dip below the mark
    assert np.any(grid.values < 1e-10)
    in_phase = q_grid(1.0, 3.0, 61, 0.0)
    assert not np.any(in_phase.values < 1e-10)


def test_q_grid_ridge_mark_at_fine_resolution():
    # at 101 points a node lands close enough to the first zero locus
    grid = q_grid(1.0, 3.0, 101, math.pi)
    locus = j0_zero(1) ** 2 / 4.0
    marked = np.argwhere(grid.values < 1e-10)
    products = grid.alpha_abs[marked[:, 0]] * grid.beta_abs[marked[:, 1]]
    assert np.any(np.abs(products - locus) < 0.01)


def test_q_grid_csv_columns():
    grid = q_grid(1.0, 2.0, 3, math.pi)
    plain = grid.to_csv().splitlines()
    assert plain[0] == "alpha_abs,beta_abs,rel_phase,Q"
    assert len(plain) == 1 + 9
    marked = grid.to_csv(mark_zeros=True).splitlines()
    assert marked[0] == "alpha_abs,beta_abs,rel_phase,Q,near_zero"
    assert marked[1].endswith(",0") or marked[1].endswith(",1")
    decoded = json.loads(grid.to_json())
    assert decoded["rel_phase"] == math.pi


def test_joint_variance_vacuum():
    assert joint_variance(pair_coherent(0.0), 1.0) == (1.0, 1.0)


def test_joint_variance_bessel_anchor():
    state = pair_coherent(cmath.exp(1j * math.pi))
    expected = 1.0 + 2.0 * i1_series(2.0) / i0_series(2.0) - 2.0
    var_u, var_v = joint_variance(state, 1.0)
    assert var_u == pytest.approx(expected, abs=1e-10)
    assert var_u == pytest.approx(0.3955, abs=1e-4)
    assert var_v == pytest.approx(var_u, abs=1e-14)


def test_joint_variance_equal_components():
    rng = np.random.default_rng(31)
    for _ in range(10):
        zeta = rng.uniform(0, 2.5) * cmath.exp(1j * rng.uniform(-np.pi, np.pi))
        m = rng.choice([-1.0, 1.0]) * rng.uniform(0.3, 2.5)
        var_u, var_v = joint_variance(pair_coherent(zeta), m)
        assert var_u == pytest.approx(var_v, rel=1e-14)
        assert var_u > 0.0


def test_joint_variance_domain():
    with pytest.raises(DomainError):
        joint_variance(pair_coherent(1.0), 0.0)


def test_variance_matches_closed_form():
    rng = np.random.default_rng(2718)
    for _ in range(30):
        mod = rng.uniform(0.0, 3.0)
        phi = rng.uniform(-math.pi, math.pi)
        state = pair_coherent(mod * cmath.exp(1j * phi))
        var_u, var_v = joint_variance(state, 1.0)
        closed = pair_coherent_total_variance(mod, phi, 1.0)
        assert var_u + var_v == pytest.approx(closed, abs=1e-10)


def test_mancini_vacuum_exact():
    assert mancini_product(pair_coherent(0.0)) == 1.0


def test_mancini_below_unity_out_of_phase():
    for mod in np.linspace(0.05, 3.0, 25):
        assert mancini_product(pair_coherent(-mod)) < 1.0


def test_mancini_anchor():
    assert mancini_product(pair_coherent(-1.0)) == pytest.approx(0.3955**2, abs=1e-3)
    assert mancini_product(pair_coherent(-1.0)) == pytest.approx(0.15646, abs=1e-5)


def test_duan_vacuum_boundary():
    report = duan_total_variance(pair_coherent(0.0), 1.0)
    assert report.total_variance == 2.0
    assert report.duan_threshold == 2.0
    assert not report.duan_witnessed
    assert report.mancini_product == 1.0
    assert not report.mancini_witnessed


def test_duan_witnessed_out_of_phase():
    report = duan_total_variance(pair_coherent(-1.0), 1.0)
    assert report.total_variance == pytest.approx(0.7911, abs=1e-4)
    assert report.duan_witnessed
    assert report.sign_condition is True


def test_duan_fails_in_phase():
    report = duan_total_variance(pair_coherent(1.0), 1.0)
    assert report.total_variance > 2.0
    assert not report.duan_witnessed
    assert report.sign_condition is False


def test_duan_threshold_identity():
    for m in (1.0, -1.0, 2.0, 0.5):
        report = duan_total_variance(pair_coherent(-0.5), m)
        assert report.duan_threshold >= 2.0
        if abs(m) == 1.0:
            assert report.duan_threshold == 2.0
        else:
            assert report.duan_threshold > 2.0
        assert report.duan_lower == abs(m * m - 1.0 / (m * m))


def test_sign_condition_cases():
    assert sign_condition(1.0, math.pi) is True
    assert sign_condition(1.0, 0.0) is False
    assert sign_condition(-1.0, 0.0) is True
    assert sign_condition(1.0, math.pi / 2.0) is None
    with pytest.raises(DomainError):
        sign_condition(0.0, 1.0)


def test_witness_consistency_product_vs_component():
    for mod in np.linspace(0.0, 3.0, 16):
        state = pair_coherent(-mod)
        var_u, _ = joint_variance(state, 1.0)
        assert (mancini_product(state) < 1.0) == (var_u < 1.0)


def test_squeezed_vacuum_violates_more():
    for mod in np.linspace(0.5, 0.95, 10):
        pcs = pair_coherent(-mod)
        tmsv = squeezed_vacuum(-mod)
        assert duan_total_variance(tmsv, 1.0).total_variance < \
            duan_total_variance(pcs, 1.0).total_variance
        assert mancini_product(tmsv) < mancini_product(pcs)


def test_witness_report_json_roundtrip():
    report = duan_total_variance(pair_coherent(-0.8), 1.0)
    decoded = json.loads(report.to_json())
    assert decoded["total_variance"] == report.total_variance
    assert decoded["mancini_witnessed"] is True


def test_q_function_zeta_domain():
    with pytest.raises(DomainError):
        q_function(51.0, 0.1, 0.1)
