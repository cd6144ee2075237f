import numpy as np
import pytest
import scipy.stats
from hypothesis import given, settings
from hypothesis import strategies as st

from ppbench import (
    DegenerateSampleError,
    DistributionSpec,
    DomainError,
    build_moments,
    exceedance_probability,
    fit_gls,
    fit_mle,
    fit_ols,
    positions_for,
    predict_quantile,
    proposed_positions,
    quantile,
    reduced,
    sample,
)


def _design(family, n, formula="blom"):
    ps = positions_for(formula, n, family=family)
    return quantile(reduced(family), ps.p)


def test_ols_matches_polyfit():
    rng = np.random.default_rng(5)
    x = np.sort(rng.normal(3.0, 2.0, 25))
    y = _design("normal", 25)
    fit = fit_ols(x, y)
    b, a = np.polyfit(y, x, 1)
    assert fit.a_hat == pytest.approx(a, rel=1e-12)
    assert fit.b_hat == pytest.approx(b, rel=1e-12)
    assert fit.method == "ols"


def test_ols_recovers_exact_line():
    y = _design("gumbel", 12)
    x = 4.0 + 1.5 * y
    fit = fit_ols(np.sort(x), y, family="gumbel")
    assert fit.a_hat == pytest.approx(4.0, rel=1e-12)
    assert fit.b_hat == pytest.approx(1.5, rel=1e-12)
    assert np.max(np.abs(fit.residuals)) < 1e-12


@given(
    st.floats(min_value=-50, max_value=50),
    st.floats(min_value=0.01, max_value=40),
    st.integers(min_value=4, max_value=40),
)
@settings(max_examples=50, deadline=None)
def test_ols_location_scale_equivariance(shift, scale, n):
    base = np.sort(sample(reduced("gumbel"), n, 99))
    y = _design("gumbel", n)
    f0 = fit_ols(base, y, family="gumbel")
    f1 = fit_ols(shift + scale * base, y, family="gumbel")
    assert f1.a_hat == pytest.approx(shift + scale * f0.a_hat, rel=1e-9, abs=1e-9)
    assert f1.b_hat == pytest.approx(scale * f0.b_hat, rel=1e-9, abs=1e-10)


def test_gls_with_identity_weights_equals_ols():
    x = np.sort(sample(DistributionSpec("normal", 1.0, 2.0), 15, 3))
    m = build_moments("normal", 15, cov_mode="identity")
    g = fit_gls(x, m)
    o = fit_ols(x, m.y)
    assert g.a_hat == pytest.approx(o.a_hat, rel=1e-10)
    assert g.b_hat == pytest.approx(o.b_hat, rel=1e-10)


def test_gls_normal_equations_orthogonality():
    # whitened residual must be orthogonal to the whitened design columns
    x = np.sort(sample(DistributionSpec("gumbel", 2.0, 0.7), 12, 8))
    m = build_moments("gumbel", 12)
    fit = fit_gls(x, m)
    L = np.linalg.cholesky(m.V + fit.ridge * np.eye(12))
    X = np.column_stack([np.ones(12), m.y])
    r = x - X @ np.array([fit.a_hat, fit.b_hat])
    Xw = np.linalg.solve(L, X)
    rw = np.linalg.solve(L, r)
    assert np.max(np.abs(Xw.T @ rw)) < 1e-8


def test_gls_unbiased_under_repeated_sampling():
    # mean of estimates over replicates approaches the truth
    truth = DistributionSpec("gumbel", 10.0, 3.0)
    m = build_moments("gumbel", 10)
    a_hats, b_hats = [], []
    for seed in range(600):
        x = np.sort(sample(truth, 10, seed))
        fit = fit_gls(x, m)
        a_hats.append(fit.a_hat)
        b_hats.append(fit.b_hat)
    assert np.mean(a_hats) == pytest.approx(10.0, abs=0.15)
    assert np.mean(b_hats) == pytest.approx(3.0, abs=0.15)


def test_fit_input_validation():
    y3 = _design("normal", 3)
    with pytest.raises(ValueError):
        fit_ols(np.array([1.0, 2.0]), y3[:2])
    with pytest.raises(ValueError):
        fit_ols(np.array([1.0, 2.0, np.nan]), y3)
    with pytest.raises(ValueError):
        fit_ols(np.array([1.0, 2.0, 3.0, 4.0]), y3)


def test_fit_degenerate_sample():
    y = _design("normal", 5)
    with pytest.raises(DegenerateSampleError):
        fit_mle(np.full(5, 2.0), "normal")
    with pytest.raises(DegenerateSampleError):
        fit_mle(np.full(5, 2.0), "gumbel")


def test_normal_mle_closed_form():
    rng = np.random.default_rng(17)
    x = rng.normal(5.0, 1.3, 40)
    fit = fit_mle(x, "normal")
    assert fit.a_hat == pytest.approx(np.mean(x), rel=1e-14)
    assert fit.b_hat == pytest.approx(np.std(x), rel=1e-14)
    assert fit.method == "mle"


def test_gumbel_mle_matches_scipy():
    rng = np.random.default_rng(23)
    x = scipy.stats.gumbel_r.rvs(loc=4.0, scale=2.0, size=200, random_state=rng)
    fit = fit_mle(x, "gumbel")
    loc, scale = scipy.stats.gumbel_r.fit(x)
    assert fit.a_hat == pytest.approx(loc, rel=1e-5)
    assert fit.b_hat == pytest.approx(scale, rel=1e-5)
    assert fit.iterations > 0


def test_mle_rejects_unsupported_family():
    with pytest.raises(ValueError):
        fit_mle(np.arange(5.0), "lognormal3")


def test_predict_quantile_return_period():
    y = _design("gumbel", 20)
    fit = fit_ols(np.sort(2.0 + 0.5 * y), y, family="gumbel")
    est = predict_quantile(fit, 100.0)
    z = quantile(reduced("gumbel"), 1 - 1 / 100.0)
    assert est.x_T_hat == pytest.approx(2.0 + 0.5 * z, rel=1e-10)
    assert est.F_level == pytest.approx(0.99)
    with pytest.raises(DomainError):
        predict_quantile(fit, 1.0)
    with pytest.raises(DomainError):
        predict_quantile(fit, 0.5)


def test_exceedance_probability_consistency():
    y = _design("gumbel", 20)
    fit = fit_ols(np.sort(2.0 + 0.5 * y), y, family="gumbel")
    d = DistributionSpec("gumbel", fit.a_hat, fit.b_hat)
    from ppbench import cdf

    assert exceedance_probability(fit, 3.0) == pytest.approx(1 - cdf(d, 3.0), rel=1e-14)


def test_exceedance_probability_shifted_log_family():
    # fitting log(x - c) on a normal scale and asking for P(X > t)
    y = _design("normal", 20)
    logs = np.sort(0.5 + 0.25 * y)
    fit = fit_ols(logs, y)
    p = exceedance_probability(fit, 3.0, family="lognormal3", c=1.0)
    z = (np.log(3.0 - 1.0) - fit.a_hat) / fit.b_hat
    assert p == pytest.approx(1 - scipy.stats.norm.cdf(z), rel=1e-12)
    # below the threshold the exceedance saturates
    assert exceedance_probability(fit, 0.5, family="lognormal3", c=1.0) == 1.0


def test_design_parameter_freeness_of_fitted_indices():
    # the sampling law of (a_hat - a)/b and b_hat/b does not depend on (a, b);
    # with common random numbers the realized values match exactly
    n = 10
    y = proposed_positions("gumbel", n).p
    design = quantile(reduced("gumbel"), y)
    z = np.sort(sample(reduced("gumbel"), n, 314))
    f_reduced = fit_ols(z, design, family="gumbel")
    x = 7.0 + 3.0 * z
    f_scaled = fit_ols(x, design, family="gumbel")
    k1 = (f_scaled.a_hat - 7.0) / 3.0
    k2 = f_scaled.b_hat / 3.0
    assert k1 == pytest.approx(f_reduced.a_hat, rel=1e-10, abs=1e-12)
    assert k2 == pytest.approx(f_reduced.b_hat, rel=1e-10)
