"""The stable elementary helpers: exact zeros, symmetry, branch agreement."""

import math

import numpy as np
import pytest

from xapprox._stable import (
    cospi,
    coth,
    csch,
    one_minus_sech,
    one_minus_x_csch,
    sech,
    sinc,
    sinc_complex,
    sinpi,
    x_coth_x_minus_one,
)


def test_sinpi_exact_zeros_at_integers():
    for n in [-3, -1, 0, 1, 2, 7, 1001, -2**40]:
        assert sinpi(float(n)) == 0.0


def test_cospi_exact_zeros_at_half_integers():
    for n in [-5, -1, 0, 3, 12, 99]:
        assert cospi(n + 0.5) == 0.0
        assert cospi(-(n + 0.5)) == 0.0


def test_sinc_exact_zeros_at_nonzero_integers():
    assert sinc(0.0) == 1.0
    x = np.array([-4.0, -1.0, 1.0, 2.0, 17.0])
    assert np.all(sinc(x) == 0.0)


def test_sinpi_agrees_with_naive_away_from_zeros():
    rng = np.random.default_rng(7)
    x = rng.uniform(-30, 30, 500)
    assert np.allclose(sinpi(x), np.sin(np.pi * x), rtol=0, atol=3e-14)
    assert np.allclose(cospi(x), np.cos(np.pi * x), rtol=0, atol=3e-14)


def test_symmetry_is_bitwise():
    rng = np.random.default_rng(11)
    x = rng.uniform(-9, 9, 200)
    assert np.all(sinpi(-x) == -sinpi(x))
    assert np.all(cospi(-x) == cospi(x))
    assert np.all(sinc(-x) == sinc(x))


def test_sinc_complex_matches_real_axis_and_series():
    x = np.array([0.3, 1.7, -2.2])
    assert np.allclose(sinc_complex(x + 0j).real, sinc(x), rtol=1e-14)
    z = 1e-10 + 1e-10j
    assert abs(sinc_complex(z) - 1.0) < 1e-18
    assert sinc_complex(0j) == 1.0 + 0j


@pytest.mark.parametrize("x", [1e-12, 0.05, 0.0999, 0.1001, 0.7, 3.0, 40.0, 690.0])
def test_hyperbolics_match_reference(x):
    # 690 is near the top of math.cosh/sinh's range; past it the naive
    # references overflow while sech/csch/coth keep going (separate test)
    assert sech(x) == pytest.approx(1.0 / math.cosh(x), rel=1e-14, abs=1e-300)
    assert csch(x) == pytest.approx(1.0 / math.sinh(x), rel=1e-14)
    assert coth(x) == pytest.approx(1.0 / math.tanh(x), rel=1e-14)


def test_hyperbolics_extreme_arguments():
    # no overflow warnings, clean underflow
    assert sech(5000.0) == 0.0
    assert csch(5000.0) == 0.0
    assert coth(5000.0) == 1.0
    assert csch(-3.0) == -csch(3.0)
    assert coth(-3.0) == -coth(3.0)


@pytest.mark.parametrize("x", [1e-9, 1e-4, 0.0999, 0.1001, 0.5, 3.0, 50.0])
def test_one_minus_sech_small_and_large(x):
    # reference: series where 1 - 1/cosh(x) would cancel, direct above that
    if x <= 1e-2:
        ref = x * x / 2.0 - 5 * x**4 / 24.0 + 61 * x**6 / 720.0
    else:
        ref = 1.0 - 1.0 / math.cosh(x)
    assert one_minus_sech(x) == pytest.approx(ref, rel=1e-12, abs=1e-300)


def test_one_minus_x_csch_branch_continuity():
    # series / direct switch at 0.1; evaluate the series side right below
    # the seam against the direct formula at the same point (the x**8
    # truncation peaks there at ~1e-12 relative)
    x = 0.1 - 1e-12
    assert one_minus_x_csch(x) == pytest.approx(1.0 - x * csch(x), rel=5e-12)
    assert one_minus_x_csch(1e-8) == pytest.approx(1e-16 / 6.0, rel=1e-10)
    assert one_minus_x_csch(0.0) == 0.0
    assert one_minus_x_csch(2.0) == pytest.approx(1.0 - 2.0 / math.sinh(2.0), rel=1e-14)


def test_x_coth_x_minus_one_branch_continuity():
    x = 0.1 - 1e-12
    assert x_coth_x_minus_one(x) == pytest.approx(x * coth(x) - 1.0, rel=5e-12)
    assert x_coth_x_minus_one(1e-8) == pytest.approx(1e-16 / 3.0, rel=1e-10)
    assert x_coth_x_minus_one(3.0) == pytest.approx(3.0 / math.tanh(3.0) - 1.0, rel=1e-14)


def test_scalar_in_scalar_out():
    assert isinstance(sinpi(0.3), float)
    assert isinstance(sech(np.float64(1.0)), float)
    out = sinpi(np.array([0.1, 0.2]))
    assert isinstance(out, np.ndarray) and out.shape == (2,)
