"""Measure-integrated entire approximants: values, errors, transforms."""

import math

import numpy as np
import pytest

from xapprox import (
    DivergentAtZero,
    EntireApproximant,
    HaarLog,
    PointMasses,
    PowerSigma,
    SeriesControl,
    TargetForm,
    error_fourier_transform,
    error_mu_pointwise,
    eval_K_mu,
    f_mu,
    l1_error_mu,
    l1_error_mu_quadrature,
    l1_error_mu_raw,
    power_l1_constant,
)

HAAR_LOG = EntireApproximant(HaarLog(), 1.0, TargetForm.LOG)


def test_approximant_validation():
    with pytest.raises(ValueError):
        EntireApproximant(HaarLog(), -1.0)
    with pytest.raises(ValueError):
        EntireApproximant(PowerSigma(0.5), 1.0, TargetForm.LOG)
    with pytest.raises(ValueError):
        EntireApproximant(HaarLog(), 1.0, TargetForm.POWER)
    with pytest.raises(Exception):
        EntireApproximant(PowerSigma(1.0), 1.0)


def test_series_control_validation():
    with pytest.raises(ValueError):
        SeriesControl(tol=0.0)
    with pytest.raises(ValueError):
        SeriesControl(max_pairs=4)
    with pytest.raises(ValueError):
        SeriesControl(acceleration="fast")


def test_log_approximant_frozen_values(ref):
    for row in ref["log_approx_samples"]:
        assert eval_K_mu(HAAR_LOG, row["x"]) == pytest.approx(row["value"],
                                                              abs=1e-9)


def test_log_approximant_interpolates():
    for m in (0.5, 1.5, 4.5, 9.5):
        assert eval_K_mu(HAAR_LOG, m) == pytest.approx(math.log(m), abs=1e-12)


def test_log_approximant_even_and_complex_consistent():
    v = eval_K_mu(HAAR_LOG, 0.7)
    assert eval_K_mu(HAAR_LOG, -0.7) == pytest.approx(v, abs=1e-12)
    vc = eval_K_mu(HAAR_LOG, 0.7 + 0.0j)
    assert isinstance(vc, complex)
    assert vc.real == pytest.approx(v, abs=1e-8)
    assert abs(vc.imag) < 1e-8


def test_power_approximant_frozen_values(ref):
    for row in ref["power_approx_samples"]:
        a = EntireApproximant(PowerSigma(row["sigma"]), 1.0, TargetForm.POWER)
        assert eval_K_mu(a, row["x"]) == pytest.approx(row["value"], abs=1e-9)


def test_power_approximant_interpolates():
    for sigma in (0.5, 1.5):
        a = EntireApproximant(PowerSigma(sigma), 1.0, TargetForm.POWER)
        for m in (0.5, 2.5):
            assert eval_K_mu(a, m) == pytest.approx(m ** (sigma - 1.0), abs=1e-11)


def test_point_mass_frozen_value(ref):
    row = ref["point_mass_sample"]
    spec = PointMasses(tuple(tuple(m) for m in row["masses"]))
    a = EntireApproximant(spec, 1.0, TargetForm.RAW)
    assert eval_K_mu(a, row["x"]) == pytest.approx(row["value"], abs=1e-11)


def test_dilated_interpolation_nodes():
    # delta = 2: nodes are (n - 1/2)/2
    a = EntireApproximant(HaarLog(), 2.0, TargetForm.RAW)
    for node in (0.25, 0.75, 1.75):
        assert eval_K_mu(a, node) == pytest.approx(f_mu(HaarLog(), node), abs=1e-10)


def test_raw_vs_presented_forms_are_affine():
    spec = PowerSigma(0.5)
    raw = eval_K_mu(EntireApproximant(spec, 1.0, TargetForm.RAW), 0.8)
    pres = eval_K_mu(EntireApproximant(spec, 1.0, TargetForm.POWER), 0.8)
    assert pres == pytest.approx(raw / math.gamma(0.5) + 1.0, rel=1e-13)


def test_pointwise_error_matches_direct_difference():
    x = 0.3
    direct = math.log(x) - eval_K_mu(HAAR_LOG, x)
    oracle = error_mu_pointwise(HAAR_LOG, x)
    assert oracle == pytest.approx(direct, abs=1e-9)

    a = EntireApproximant(PowerSigma(1.5), 1.0, TargetForm.POWER)
    direct = 0.7 ** 0.5 - eval_K_mu(a, 0.7)
    assert error_mu_pointwise(a, 0.7) == pytest.approx(direct, abs=1e-9)


def test_pointwise_error_point_masses():
    spec = PointMasses(((1.0, 1.0), (2.0, 0.5)))
    a = EntireApproximant(spec, 1.0, TargetForm.RAW)
    direct = f_mu(spec, 1.1) - eval_K_mu(a, 1.1)
    assert error_mu_pointwise(a, 1.1) == pytest.approx(direct, abs=1e-10)


def test_error_at_zero_branches(ref):
    with pytest.raises(DivergentAtZero):
        error_mu_pointwise(HAAR_LOG, 0.0)
    with pytest.raises(DivergentAtZero):
        error_mu_pointwise(
            EntireApproximant(PowerSigma(0.5), 1.0, TargetForm.POWER), 0.0)
    row = ref["power_error_at_zero"]
    a = EntireApproximant(PowerSigma(row["sigma"]), 1.0, TargetForm.POWER)
    assert error_mu_pointwise(a, 0.0) == pytest.approx(row["value"], abs=1e-9)


def test_l1_constants_against_frozen(ref):
    assert l1_error_mu_raw(HaarLog(), 1.0) == pytest.approx(
        ref["haar_l1_constant"], abs=1e-13)
    for s_txt, val in ref["power_l1_constants"].items():
        s = float(s_txt)
        assert power_l1_constant(s) == pytest.approx(val, abs=1e-12)
        assert l1_error_mu_raw(PowerSigma(s), 1.0) == pytest.approx(val, abs=1e-12)
        # presented normalization divides by |Gamma(1-sigma)|
        assert l1_error_mu(PowerSigma(s), 1.0) == pytest.approx(
            val / abs(math.gamma(1.0 - s)), rel=1e-12)


def test_l1_error_delta_scaling_against_quadrature():
    # closed form scales like delta^{-sigma}; quadrature recomputes it
    # from pointwise values on the dilated node grid
    spec = PowerSigma(0.5)
    delta = 2.0
    closed = l1_error_mu_raw(spec, delta)
    assert closed == pytest.approx(power_l1_constant(0.5) / math.sqrt(2.0),
                                   rel=1e-13)
    assert l1_error_mu_quadrature(spec, delta) == pytest.approx(closed, abs=1e-4)


def test_l1_error_haar_delta_scaling():
    assert l1_error_mu_raw(HaarLog(), 4.0) == pytest.approx(
        l1_error_mu_raw(HaarLog(), 1.0) / 4.0, rel=1e-14)


def test_point_mass_l1_is_weighted_sum():
    from xapprox import l1_error_exp
    spec = PointMasses(((1.0, 2.0), (3.0, 0.5)))
    expect = 2.0 * l1_error_exp(1.0) + 0.5 * l1_error_exp(3.0)
    assert l1_error_mu_raw(spec, 1.0) == pytest.approx(expect, rel=1e-14)


def test_error_transform_frozen_samples(ref):
    for row in ref["error_ft_samples"]:
        if row["kind"] == "haar":
            spec = HaarLog()
        else:
            spec = PowerSigma(row["sigma"])
        val = error_fourier_transform(spec, 1.0, row["t"])
        assert val == pytest.approx(row["value"], abs=1e-9)


def test_error_transform_continuity():
    spec = HaarLog()
    # across the support edge t = delta/2 (K_hat vanishes there)
    left = error_fourier_transform(spec, 1.0, 0.5 - 1e-9)
    right = error_fourier_transform(spec, 1.0, 0.5 + 1e-9)
    assert left == pytest.approx(right, abs=1e-6)
    # and down to the combined t = 0 integrand
    near = error_fourier_transform(spec, 1.0, 1e-8)
    at0 = error_fourier_transform(spec, 1.0, 0.0)
    assert near == pytest.approx(at0, abs=1e-6)


def test_error_transform_outside_support_is_target_transform():
    # |t| > delta/2: only the measure side contributes
    spec = PointMasses(((2.0, 1.0),))
    t = 0.8
    expect = 2.0 * 2.0 / (4.0 + 4.0 * math.pi**2 * t * t)
    assert error_fourier_transform(spec, 1.0, t) == pytest.approx(expect, abs=1e-10)
