import math

import numpy as np
import pytest
from scipy import integrate, special

from leafwave import leafcore
from leafwave.exceptions import LeafDomainError

PI2 = leafcore.period_constant(2)


def jacobi_leaf2(t):
    # lemniscatic leaf functions through Jacobi functions with m = 1/2
    sn, cn, dn, _ = special.ellipj(math.sqrt(2.0) * np.asarray(t, dtype=float), 0.5)
    return sn / (math.sqrt(2.0) * dn), cn


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8])
def test_period_constant_matches_beta_function(n):
    expected = special.beta(1.0 / (2 * n), 0.5) / n
    assert leafcore.period_constant(n) == pytest.approx(expected, abs=2e-15)


def test_period_constant_n1_is_pi():
    assert leafcore.period_constant(1) == pytest.approx(math.pi, abs=1e-15)


@pytest.mark.parametrize("bad", [0, -1, 2.0, True, "2"])
def test_invalid_leaf_index(bad):
    with pytest.raises(LeafDomainError):
        leafcore.sleaf(bad, 0.3)


def test_arcsleaf_examples():
    assert leafcore.arcsleaf(2, 0.0) == 0.0
    assert leafcore.arcsleaf(2, 1.0) == pytest.approx(PI2 / 2, abs=1e-15)
    x = math.sqrt(math.sqrt(2.0) - 1.0)
    assert leafcore.arcsleaf(2, x) == pytest.approx(PI2 / 4, abs=1e-14)
    assert leafcore.arcsleaf(2, -0.5) == -leafcore.arcsleaf(2, 0.5)


def test_arccleaf_examples():
    assert leafcore.arccleaf(2, 1.0) == 0.0
    assert leafcore.arccleaf(2, 0.0) == pytest.approx(PI2 / 2, abs=1e-15)
    assert leafcore.arccleaf(2, 0.31073) == pytest.approx(1.0, abs=2e-5)
    assert leafcore.arccleaf(2, -1.0) == pytest.approx(PI2, abs=1e-15)


@pytest.mark.parametrize("x", [1.0000001, -2.0, math.nan, math.inf])
def test_inverse_domain(x):
    with pytest.raises(LeafDomainError):
        leafcore.arcsleaf(2, x)
    with pytest.raises(LeafDomainError):
        leafcore.arccleaf(2, x)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_arcsleaf_against_mpmath(n):
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 30
    for x in (0.05, 0.4, 0.8, 0.97, 0.999999):
        ref = mpmath.quad(lambda u: 1 / mpmath.sqrt(1 - u ** (2 * n)), [0, x])
        assert abs(leafcore.arcsleaf(n, x) - float(ref)) < 1e-15


def test_leaf1_is_circular():
    t = np.linspace(-20, 20, 4001)
    assert np.max(np.abs(leafcore.sleaf(1, t) - np.sin(t))) < 5e-15
    assert np.max(np.abs(leafcore.cleaf(1, t) - np.cos(t))) < 5e-15
    assert np.max(np.abs(leafcore.sleaf_derivative(1, t) - np.cos(t))) < 5e-15
    assert np.max(np.abs(leafcore.cleaf_derivative(1, t) + np.sin(t))) < 5e-15


def test_leaf2_against_jacobi():
    t = np.linspace(-12, 12, 2401)
    s_ref, c_ref = jacobi_leaf2(t)
    assert np.max(np.abs(leafcore.sleaf(2, t) - s_ref)) < 1e-13
    assert np.max(np.abs(leafcore.cleaf(2, t) - c_ref)) < 1e-13


def test_sleaf_examples():
    assert leafcore.sleaf(2, 0.0) == 0.0
    assert leafcore.sleaf(2, 1.0) == pytest.approx(0.90768, abs=2e-5)
    # sleaf is odd and sleaf_2(4) = -0.99553
    assert leafcore.sleaf(2, -4.0) == pytest.approx(0.99553, abs=2e-5)
    assert abs(leafcore.sleaf(2, PI2)) < 1e-15


def test_cleaf_examples():
    assert leafcore.cleaf(2, 0.0) == 1.0
    assert leafcore.cleaf(2, 2.0) == pytest.approx(-0.67373, abs=2e-5)
    assert leafcore.cleaf(2, PI2) == pytest.approx(-1.0, abs=1e-15)


def test_derivative_examples():
    assert leafcore.sleaf_derivative(2, 0.0) == 1.0
    assert abs(leafcore.sleaf_derivative(2, PI2 / 2)) < 1e-7
    s1 = leafcore.sleaf(2, 1.0)
    assert leafcore.sleaf_derivative(2, 1.0) == pytest.approx(math.sqrt(1 - s1 ** 4), abs=1e-15)
    assert leafcore.sleaf_derivative(2, 1.0) == pytest.approx(0.56676, abs=2e-5)
    assert leafcore.cleaf_derivative(2, 0.0) == 0.0
    assert leafcore.cleaf_derivative(2, 1.0) == pytest.approx(-0.99533, abs=2e-5)
    assert leafcore.cleaf_derivative(2, PI2 + 1.0) == pytest.approx(0.99533, abs=2e-5)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_derivatives_match_central_difference(n):
    t = np.linspace(-7.3, 7.1, 301)
    h = 1e-6
    fd_s = (leafcore.sleaf(n, t + h) - leafcore.sleaf(n, t - h)) / (2 * h)
    fd_c = (leafcore.cleaf(n, t + h) - leafcore.cleaf(n, t - h)) / (2 * h)
    assert np.max(np.abs(fd_s - leafcore.sleaf_derivative(n, t))) < 1e-8
    assert np.max(np.abs(fd_c - leafcore.cleaf_derivative(n, t))) < 1e-8


def test_shift_relations():
    t = np.linspace(-9, 9, 501)
    assert np.max(np.abs(leafcore.cleaf(2, t) - leafcore.sleaf(2, t + PI2 / 2))) < 1e-14
    assert np.max(np.abs(leafcore.sleaf(2, PI2 - t) - leafcore.sleaf(2, t))) < 1e-14
    assert np.max(np.abs(leafcore.cleaf(2, PI2 - t) + leafcore.cleaf(2, t))) < 1e-14


def test_quadrant():
    q = leafcore.quadrant(2, 1.0)
    assert q.index == 0 and q.reduced_t == 1.0
    q = leafcore.quadrant(2, -1.0)
    assert q.index == 3
    assert q.reduced_t == pytest.approx(PI2 / 2 - 1.0, abs=1e-14)
    arr = leafcore.quadrant(2, [0.1, 1.5, 3.0, 4.5])
    assert list(arr.index) == [0, 1, 2, 3]


def test_integral_examples():
    assert leafcore.integral_sleaf2(0.0) == 0.0
    assert leafcore.integral_sleaf2(1.0) == pytest.approx(0.48411, abs=2e-5)
    assert leafcore.integral_sleaf2(PI2) == pytest.approx(math.pi / 2, abs=1e-12)
    assert leafcore.integral_cleaf2(0.0) == 0.0
    assert leafcore.integral_cleaf2(1.0) == pytest.approx(0.73704, abs=2e-5)
    assert leafcore.integral_cleaf2(PI2 / 2) == pytest.approx(math.pi / 4, abs=1e-12)


@pytest.mark.parametrize("t", [-9.3, -4.0, -1.2, 0.7, 2.5, 3.9, 6.1, 8.0, 10.0])
def test_integrals_match_adaptive_quadrature(t):
    f_s = lambda u: leafcore.sleaf(2, u)
    f_c = lambda u: leafcore.cleaf(2, u)
    ref_s, _ = integrate.quad(f_s, 0.0, t, epsabs=1e-13, epsrel=1e-13, limit=200)
    ref_c, _ = integrate.quad(f_c, 0.0, t, epsabs=1e-13, epsrel=1e-13, limit=200)
    assert abs(leafcore.integral_sleaf2(t) - ref_s) < 1e-11
    assert abs(leafcore.integral_cleaf2(t) - ref_c) < 1e-11


def test_integral_symmetries():
    t = np.linspace(-10, 10, 801)
    F = leafcore.integral_sleaf2(t)
    G = leafcore.integral_cleaf2(t)
    assert np.max(np.abs(F - leafcore.integral_sleaf2(-t))) < 1e-14
    assert np.max(np.abs(G + leafcore.integral_cleaf2(-t))) < 1e-14
    assert np.max(np.abs(leafcore.integral_sleaf2(t + PI2) - (math.pi / 2 - F))) < 1e-13
    assert np.max(np.abs(leafcore.integral_cleaf2(t + PI2) + G)) < 1e-13
    assert np.max(np.abs(leafcore.integral_sleaf2(t + 2 * PI2) - F)) < 1e-13
    assert F.min() >= 0.0 and F.max() <= math.pi / 2
    assert G.min() >= -math.pi / 4 and G.max() <= math.pi / 4


def test_integrals_are_continuous():
    t = np.linspace(-10, 10, 20001)
    step = t[1] - t[0]
    assert np.max(np.abs(np.diff(leafcore.integral_sleaf2(t)))) < 1.01 * step
    assert np.max(np.abs(np.diff(leafcore.integral_cleaf2(t)))) < 1.01 * step


def test_identity_residual_examples():
    assert leafcore.leaf_identity_residual(0.0) == 0.0
    assert abs(leafcore.leaf_identity_residual(1.0)) < 1e-15
    assert abs(leafcore.leaf_identity_residual(PI2 / 4)) < 1e-15
    s = leafcore.sleaf(2, PI2 / 4)
    assert s == pytest.approx(math.sqrt(math.sqrt(2) - 1), abs=1e-15)
    assert leafcore.cleaf(2, PI2 / 4) == pytest.approx(s, abs=1e-15)


def test_scalar_and_array_outputs():
    assert isinstance(leafcore.sleaf(2, 1.0), float)
    assert isinstance(leafcore.integral_cleaf2(np.float64(1.0)), float)
    out = leafcore.cleaf(2, np.zeros((2, 3)))
    assert out.shape == (2, 3) and np.all(out == 1.0)
    assert leafcore.sleaf(2, []).shape == (0,)


def test_nonfinite_time_rejected():
    with pytest.raises(LeafDomainError):
        leafcore.sleaf(2, math.nan)
    with pytest.raises(LeafDomainError):
        leafcore.integral_sleaf2(math.inf)


def test_cache_is_thread_safe():
    from concurrent.futures import ThreadPoolExecutor

    leafcore._FAMILIES.pop(7, None)
    with ThreadPoolExecutor(8) as pool:
        values = list(pool.map(lambda _: leafcore.period_constant(7), range(16)))
    assert len(set(values)) == 1
