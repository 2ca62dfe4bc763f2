import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate, stats

from improprietest.augmented import AugmentedSample, glrt_statistic, sample_spectrum
from improprietest.nulls import (
    GLRT_METHODS,
    BulkLaw,
    RegimeParams,
    SpikeMap,
    bulk_cdf,
    bulk_moments,
    bulk_pdf,
    cca_offset_mean,
    exact_glrt_moments,
    glrt_clt_params,
    glrt_null_cdf,
    glrt_null_quantile,
    glrt_null_sf,
    roy_null_cdf,
    roy_null_quantile,
    roy_params,
    sample_wilks_null,
    spike_map,
)
from oracles import arcsine_cdf, bulk_cdf_closed_form, wilks_sf

# exact P(T' > q) at each calibration's 1 - alpha quantile, from Gil-Pelaez inversion
# (N, M, alpha): (lognormal, adjusted_bartlett, bartlett)
EXACT_FAR = {
    (4, 10, 0.05): (0.058658, 0.046340, 0.108302),
    (4, 10, 0.01): (0.020681, 0.009948, 0.033000),
    (20, 100, 0.05): (0.053792, 0.050014, 0.070825),
    (20, 100, 0.01): (0.012739, 0.010031, 0.016012),
    (200, 1000, 0.05): (0.050413, 0.050003, 0.449680),
    (200, 1000, 0.01): (0.010280, 0.010004, 0.211325),
}


# ---- bulk law


@pytest.mark.parametrize("gamma", [2.1, 2.5, 5.0, 10.0, 100.0])
def test_bulk_cdf_matches_closed_form(gamma):
    r = np.linspace(0, 1, 101)
    np.testing.assert_allclose(bulk_cdf(BulkLaw(gamma), r), bulk_cdf_closed_form(gamma, r), atol=1e-9)


def test_bulk_at_gamma_two_is_arcsine():
    law = BulkLaw(2.0)
    assert law.edge_c == 1.0
    r = np.linspace(0, 1, 51)
    np.testing.assert_allclose(bulk_cdf(law, r), arcsine_cdf(r), atol=1e-9)
    assert bulk_pdf(law, 0.25) == pytest.approx(1 / (math.pi * math.sqrt(0.25 * 0.75)))


def test_scalar_and_vector_cdf_agree():
    law = BulkLaw(3.0)
    r = np.array([0.05, 0.3, 0.7])
    np.testing.assert_allclose(bulk_cdf(law, r), [bulk_cdf(law, v) for v in r], atol=1e-10)


@pytest.mark.parametrize("gamma", [2.0, 2.5, 5.0, 10.0])
def test_bulk_density_normalised_with_moments(gamma):
    law = BulkLaw(gamma)
    c = law.edge_c
    f = lambda r: bulk_pdf(law, r)
    mass = integrate.quad(f, 0, c, limit=200)[0]
    mean = integrate.quad(lambda r: r * f(r), 0, c, limit=200)[0]
    second = integrate.quad(lambda r: r * r * f(r), 0, c, limit=200)[0]
    mom = bulk_moments(law)
    assert mass == pytest.approx(1.0, abs=1e-6)
    assert mean == pytest.approx(mom["mean"], abs=1e-6)
    assert second - mean**2 == pytest.approx(mom["variance"], abs=1e-6)


def test_bulk_support_and_domain():
    law = BulkLaw(5.0)
    assert law.edge_c == pytest.approx(0.64)
    assert bulk_pdf(law, 0.7) == 0.0 and bulk_pdf(law, 0.0) == 0.0
    assert bulk_cdf(law, 0.64) == 1.0 and bulk_cdf(law, 0.0) == 0.0
    with pytest.raises(ValueError):
        bulk_pdf(law, 1.2)
    with pytest.raises(ValueError):
        BulkLaw(1.5)


@settings(max_examples=30, deadline=None)
@given(gamma=st.floats(2.0, 50.0), a=st.floats(0, 1), b=st.floats(0, 1))
def test_bulk_cdf_monotone(gamma, a, b):
    law = BulkLaw(gamma)
    lo, hi = sorted((a, b))
    assert bulk_cdf(law, lo) <= bulk_cdf(law, hi) + 1e-12


# ---- exact null sampler


def test_sampler_single_dimension_closed_form():
    # N = 1: T = u ~ Beta((M-1)/2, 1), so P(T' > x) = exp(-x (M-1)/2)
    m = 11
    draws = sample_wilks_null(1, m, 20_000, np.random.default_rng(0))
    res = stats.kstest(draws, lambda x: 1 - np.exp(-x * (m - 1) / 2))
    assert res.pvalue > 0.001


def test_sampler_matches_pipeline():
    n, m = 3, 12
    rng = np.random.default_rng(1)
    exact = sample_wilks_null(n, m, 4000, rng)
    pipe = [glrt_statistic(sample_spectrum(AugmentedSample(rng.standard_normal((m, 2 * n))))).T_prime
            for _ in range(4000)]
    assert stats.ks_2samp(exact, pipe).pvalue > 0.001


def test_sampler_validation():
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError):
        sample_wilks_null(5, 9, 10, rng)
    assert sample_wilks_null(2, 4, 0, rng).shape == (0,)


@pytest.mark.parametrize("n,m,n1", [(1, 5, None), (4, 10, None), (20, 100, None), (50, 500, 50)])
def test_exact_moments_vs_monte_carlo(n, m, n1):
    draws = sample_wilks_null(n, m, 200_000, np.random.default_rng(2), n1=n1)
    mom = exact_glrt_moments(n, m, n1)
    se = draws.std() / math.sqrt(draws.size)
    assert abs(draws.mean() - mom["mean"]) < 3 * se
    assert draws.var() == pytest.approx(mom["variance"], rel=0.02)


def test_exact_moments_from_characteristic_function():
    # mean = -i phi'(0), by a central difference of the oracle CF
    from oracles import wilks_char_fn
    h = 1e-5
    d = (wilks_char_fn(h, 6, 20) - wilks_char_fn(-h, 6, 20)) / (2 * h)
    assert (-1j * d).real == pytest.approx(exact_glrt_moments(6, 20)["mean"], rel=1e-7)


# ---- GLRT calibrations


def test_clt_constants_match_exact_moments_at_scale():
    p = glrt_clt_params(RegimeParams(200, 1000))
    mom = exact_glrt_moments(200, 1000)
    assert p.m == pytest.approx(mom["mean"], abs=0.01 * p.s)
    assert p.s**2 == pytest.approx(mom["variance"], rel=0.01)


def test_adjusted_bartlett_matches_first_two_moments():
    p = glrt_clt_params(RegimeParams(10, 40))
    mean = p.alpha_shift + p.s * p.p * p.q
    var = (p.s * p.p) ** 2 * p.q
    assert mean == pytest.approx(p.m, rel=1e-12)
    assert var == pytest.approx(p.s**2, rel=1e-12)


@pytest.mark.parametrize("method", GLRT_METHODS)
@pytest.mark.parametrize("prob", [0.01, 0.5, 0.95, 0.99])
def test_glrt_quantile_inverts_cdf(method, prob):
    p = glrt_clt_params(RegimeParams(20, 100))
    q = glrt_null_quantile(p, prob, method)
    assert glrt_null_cdf(p, q, method) == pytest.approx(prob, abs=1e-10)
    assert glrt_null_sf(p, q, method) == pytest.approx(1 - prob, abs=1e-10)


def test_glrt_regime_errors():
    with pytest.raises(ValueError, match="CLT"):
        glrt_clt_params(RegimeParams(10, 20))
    with pytest.raises(ValueError):
        glrt_null_quantile(glrt_clt_params(RegimeParams(10, 40)), 1.0)


@pytest.mark.parametrize("key", sorted(EXACT_FAR))
def test_exact_tail_at_calibrated_thresholds(key):
    n, m, alpha = key
    p = glrt_clt_params(RegimeParams(n, m))
    for method, expected in zip(GLRT_METHODS, EXACT_FAR[key]):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            exact = wilks_sf(glrt_null_quantile(p, 1 - alpha, method), n, m)
        assert exact == pytest.approx(expected, abs=2e-6)


def test_oracle_tail_agrees_with_sampler():
    n, m = 4, 10
    x = 3.0
    draws = sample_wilks_null(n, m, 400_000, np.random.default_rng(3))
    emp = np.mean(draws > x)
    assert abs(emp - wilks_sf(x, n, m)) < 4 * math.sqrt(emp * (1 - emp) / draws.size)


# ---- Roy


def test_roy_location_tends_to_edge_logit():
    c = 4 * 4 / 25
    p = roy_params(2000, 10_000)
    assert p.mu == pytest.approx(math.log(c / (1 - c)), abs=1e-3)
    assert p.sigma < 0.01


def test_roy_degenerate_and_near_degenerate():
    with pytest.raises(ValueError):
        roy_params(10, 20)
    with pytest.warns(RuntimeWarning):
        p = roy_params(10, 21)
    assert p.near_degenerate
    assert not roy_params(10, 25).near_degenerate


def test_roy_quantile_inverts_cdf():
    p = roy_params(100, 500)
    for prob in (0.01, 0.5, 0.99):
        assert roy_null_cdf(p, roy_null_quantile(p, prob)) == pytest.approx(prob, abs=1e-8)


# ---- spike map and CCA offset


def test_spike_map_threshold_and_limit():
    smap = SpikeMap(5.0)
    assert smap.rho_c == pytest.approx(0.25)
    assert spike_map(smap, 0.1) == {"above_threshold": False, "limit": pytest.approx(0.64)}
    out = spike_map(smap, 0.4)
    assert out["above_threshold"] and out["limit"] == pytest.approx(0.676)
    # continuous at the threshold and monotone above it
    assert smap.limiting_value(smap.rho_c) == pytest.approx(smap.edge_c)
    vals = [smap.limiting_value(x) for x in np.linspace(0.26, 1.0, 20)]
    assert np.all(np.diff(vals) > 0)
    assert smap.limiting_value(1.0) == pytest.approx(1.0)


def test_cca_offset_against_exact_means():
    n, m = 200, 2000
    p = glrt_clt_params(RegimeParams(n, m))
    gap = exact_glrt_moments(n, m, n1=n)["mean"] - exact_glrt_moments(n, m)["mean"]
    assert gap == pytest.approx(math.log(0.9), abs=2e-3)
    assert cca_offset_mean(p) - p.m == pytest.approx(math.log(0.9))
