import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schlicht import functionals as fn
from schlicht import univalent as uv


def test_area_sum_koebe_equality():
    g = uv.to_sigma(uv.koebe(32))
    assert abs(fn.area_sum(g, 30) - 1.0) < 1e-12


def test_area_sum_identity_zero():
    g = uv.to_sigma(uv.identity_map(16))
    assert fn.area_sum(g, 14) == 0.0


def test_area_sum_dilation_bounded():
    g = uv.to_sigma(uv.dilation(uv.koebe(64), 0.9))
    val = fn.area_sum(g, 62)
    assert 0.0 <= val <= 1.0 + 1e-9


def test_coefficient_report_koebe_equality():
    rep = fn.coefficient_report(uv.koebe(16), 16)
    assert rep.all_pass
    sharp = [c for c in rep.cases if c.id.endswith("sharp")]
    assert all(abs(c.lhs - c.rhs) < 1e-12 for c in sharp)


def test_coefficient_report_identity():
    rep = fn.coefficient_report(uv.identity_map(12), 12)
    assert rep.all_pass
    assert all(c.lhs == 0.0 for c in rep.cases)


def test_log_coefficients_identity():
    lc = fn.log_coefficients(uv.identity_map(12))
    assert max(abs(g) for g in lc.gamma) == 0.0


def test_coefficient_report_dilation_strict():
    rep = fn.coefficient_report(uv.dilation(uv.koebe(16), 0.5), 16)
    sharp = [c for c in rep.cases if c.id.endswith("sharp")]
    assert all(c.lhs < c.rhs for c in sharp)


def test_integral_mean_identity():
    f = uv.identity_map(8)
    for p in (1.0, 2.0, 3.5):
        assert abs(fn.integral_mean(f, p, 0.7) - 0.7) < 1e-12


def test_integral_mean_koebe_poisson_oracle():
    # exact mean of |k| on |z| = r is r/(1 - r^2) (Poisson kernel mass)
    f = uv.koebe(256)
    for r in (0.3, 0.5):
        got = fn.integral_mean(f, 1.0, r, Q=2048)
        assert abs(got - r / (1 - r * r)) < 1e-8
        assert got <= r / (1 - r)


def test_integral_mean_parseval():
    f = uv.koebe(64)
    r = 0.3
    got = fn.integral_mean(f, 2.0, r, Q=1024)
    expect = math.sqrt(sum(n * n * r ** (2 * n) for n in range(1, 65)))
    assert abs(got - expect) < 1e-8


def test_pointwise_bounds_sharp_koebe():
    f = uv.koebe(160)
    rep = fn.pointwise_bounds_check(f, [0.3, 0.5, 0.7])
    assert rep.all_pass
    # distortion and growth are equalities on the positive axis
    for c in rep.cases:
        if "hi" in c.id:
            assert abs(c.lhs - c.rhs) < 1e-9 * c.rhs


def test_pointwise_bounds_identity_inside():
    rep = fn.pointwise_bounds_check(uv.identity_map(16), [0.2, 0.5j, -0.7])
    assert rep.all_pass


def test_robertson_sums_koebe():
    s = fn.robertson_sums(uv.koebe(64), 30)
    assert np.max(np.abs(s - np.arange(1, 31))) == 0.0


def test_robertson_sums_identity():
    s = fn.robertson_sums(uv.identity_map(32), 10)
    assert np.max(np.abs(s - 1.0)) == 0.0


def test_robertson_sums_dilation_strict():
    s = fn.robertson_sums(uv.dilation(uv.koebe(64), 0.8), 10)
    assert all(s[n - 1] < n for n in range(2, 11))


def test_log_coefficients_koebe():
    lc = fn.log_coefficients(uv.koebe(32))
    expect = np.array([1.0 / k for k in range(1, 32)])
    assert np.max(np.abs(np.array(lc.gamma) - expect)) < 1e-12


def test_log_coefficients_rotation():
    th = 0.8
    lc = fn.log_coefficients(uv.rotation(uv.koebe(24), th))
    expect = np.array([np.exp(1j * k * th) / k for k in range(1, 24)])
    assert np.max(np.abs(np.array(lc.gamma) - expect)) < 1e-12


def test_milin_functional_koebe_zero():
    f = uv.koebe(64)
    for n in (1, 7, 30):
        assert abs(fn.milin_functional(f, n)) < 1e-10


def test_milin_functional_identity():
    assert abs(fn.milin_functional(uv.identity_map(8), 1) + 1.0) < 1e-14


def test_milin_functional_dilation_negative():
    assert fn.milin_functional(uv.dilation(uv.koebe(32), 0.9), 10) < 0


def test_milin_weighted_relation():
    rng = np.random.default_rng(5)
    for _ in range(10):
        f = uv.random_class_s(rng, 48)
        for n in (3, 12):
            m = fn.milin_functional(f, n)
            w = fn.milin_weighted_form(f, n)
            assert abs(w + 4.0 * m) < 1e-10 * max(1.0, abs(w))


def test_lebedev_milin_zero_alpha():
    lhs, rhs = fn.lebedev_milin_check([0.0], 1)
    assert lhs == 1.0
    assert abs(rhs - 2.0 * math.exp(-0.5)) < 1e-14


def test_lebedev_milin_equality_case():
    # alpha_k = gamma^k / k with |gamma| = 1 gives beta_k = gamma^k
    lhs, rhs = fn.lebedev_milin_check([1.0, 0.5], 2)
    assert abs(lhs - 3.0) < 1e-10
    assert abs(rhs - 3.0) < 1e-10


@settings(max_examples=80, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False), min_size=1, max_size=8))
def test_lebedev_milin_random(alpha):
    lhs, rhs = fn.lebedev_milin_check(alpha, len(alpha))
    assert lhs <= rhs + 1e-10 * max(rhs, 1.0)


def test_lebedev_milin_needs_enough_terms():
    with pytest.raises(ValueError):
        fn.lebedev_milin_check([1.0], 3)
