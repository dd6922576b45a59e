import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from melontft.series import eval_partial_sum, eval_series, perturbative_order
from melontft.specialfn import (
    Coupling,
    Point3,
    g2_exact,
    g_shift,
    lambert_w0,
    lambert_wm1,
    sde_residual_algebraic,
    wright_omega,
)


def bisect_w0(y, lo=-1.0, hi=800.0):
    """Independent principal-branch oracle: bisection on w*exp(w) = y."""
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid * math.exp(mid) < y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def bisect_wm1(y, lo=-800.0, hi=-1.0):
    """Secondary branch oracle; w*exp(w) is decreasing on (-inf, -1]."""
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid * math.exp(mid) > y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class TestDomainTypes:
    def test_point_validation(self):
        p = Point3(1, 2, 0.5)
        assert p.norm2 == pytest.approx(5.25)
        with pytest.raises(ValueError):
            Point3(-0.1, 0, 0)
        with pytest.raises(ValueError):
            Point3(0, math.inf, 0)

    def test_coupling_validation(self):
        assert Coupling(2 / math.pi).z == pytest.approx(1.0, rel=1e-15)
        assert Coupling.from_z(1.0).z == pytest.approx(1.0, rel=1e-15)
        for bad in (0.0, -1.0, math.nan, math.inf):
            with pytest.raises(ValueError):
                Coupling(bad)


class TestLambert:
    def test_w0_values(self):
        assert lambert_w0(0.0) == 0.0
        assert lambert_w0(math.e) == pytest.approx(1.0, rel=1e-15)
        # oracle: bisection on w*exp(w) = 1
        assert lambert_w0(1.0) == pytest.approx(0.567143290409783873, rel=1e-14)
        assert lambert_w0(1.0) == pytest.approx(bisect_w0(1.0), rel=1e-13)

    def test_w0_branch_point(self):
        assert lambert_w0(-math.exp(-1.0)) == pytest.approx(-1.0, abs=1e-7)

    def test_w0_domain(self):
        with pytest.raises(ValueError):
            lambert_w0(-0.3679)
        with pytest.raises(ValueError):
            lambert_w0(math.nan)

    def test_w0_round_trip_grid(self):
        ws = [-0.99 / math.e + i * (0.99 / math.e - 0.01) / 19 for i in range(20)]
        ws += [10.0 ** (-2 + 10 * i / 50) for i in range(51)]
        for w in ws:
            if w <= 700.0:
                got = lambert_w0(w * math.exp(w))
            else:
                got = wright_omega(w + math.log(w))
            assert abs(got - w) <= 1e-13 * (1.0 + abs(w)), w

    def test_wm1_values(self):
        assert lambert_wm1(-math.exp(-1.0)) == pytest.approx(-1.0, abs=1e-7)
        # oracles: bisection on w*exp(w) = y for w <= -1
        assert lambert_wm1(-0.1) == pytest.approx(-3.5771520639572972184, rel=1e-13)
        assert lambert_wm1(-0.2) == pytest.approx(-2.5426413577735264243, rel=1e-13)
        assert lambert_wm1(-0.1) == pytest.approx(bisect_wm1(-0.1), rel=1e-12)
        assert lambert_wm1(-0.2) == pytest.approx(bisect_wm1(-0.2), rel=1e-12)

    def test_wm1_residuals(self):
        for y in (-0.36, -0.3, -0.2, -0.1, -0.05, -1e-3, -1e-6, -1e-12):
            w = lambert_wm1(y)
            assert w <= -1.0
            assert abs(w * math.exp(w) - y) <= 1e-13 * abs(y), y

    def test_wm1_domain(self):
        for bad in (-0.38, 0.0, 0.5, math.nan):
            with pytest.raises(ValueError):
                lambert_wm1(bad)


class TestWrightOmega:
    def test_fixed_points(self):
        assert wright_omega(1.0) == 1.0
        assert wright_omega(0.0) == pytest.approx(0.567143290409783873, rel=1e-14)

    def test_overflow_range(self):
        # e^1300 overflows binary64; the log-space path must still converge
        om = wright_omega(1300.0)
        assert abs(om + math.log(om) - 1300.0) < 1e-11

    def test_residual_grid(self):
        for t in (-10.0, -5.0, -1.0, -0.1, 0.5, 2.0, 20.0, 709.0, 5e3, 1e5, 1e6):
            om = wright_omega(t)
            assert om > 0.0
            assert abs(om + math.log(om) - t) <= 1e-12 * (1.0 + abs(t)), t

    @given(st.floats(min_value=-30.0, max_value=1e6, allow_nan=False))
    @settings(max_examples=80)
    def test_residual_random(self, t):
        om = wright_omega(t)
        assert abs(om + math.log(om) - t) <= 1e-12 * (1.0 + abs(t))

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            wright_omega(math.inf)


class TestShiftAndSolution:
    def test_shift_vanishes_at_origin(self):
        for lam in (0.01, 0.5, 3.0, 10.0):
            assert abs(g_shift(0.0, Coupling(lam))) <= 1e-15

    def test_shift_value_z1(self):
        # g(1, z=1) = W(e^2) - 2, W(e^2) = 1.5571455989976114169 (bisection)
        c = Coupling.from_z(1.0)
        assert g_shift(1.0, c) == pytest.approx(-0.4428544010023886, rel=1e-13)
        assert g_shift(1.0, c) == pytest.approx(bisect_w0(math.e**2) - 2.0, rel=1e-12)

    def test_shift_small_coupling_limit(self):
        # g -> -lambda*(pi/2)*log(1+x1^2) + O(lambda^2) -> 0
        for x1 in (0.5, 1.0, 2.0):
            lam = 1e-6
            g = g_shift(x1, Coupling(lam))
            lead = -lam * (math.pi / 2) * math.log(1 + x1 * x1)
            assert g == pytest.approx(lead, rel=1e-5)

    def test_shift_domain(self):
        with pytest.raises(ValueError):
            g_shift(-1.0, Coupling(1.0))

    def test_g2_free_at_x1_zero(self):
        for lam in (0.01, 0.5, 3.0):
            p = Point3(0, 0.7, 1.3)
            free = 1.0 / (1.0 + p.norm2)
            assert g2_exact(p, Coupling(lam)) == pytest.approx(free, rel=1e-15)

    def test_g2_value(self):
        # 1/(2 + W(e^2)) frozen from a 50-digit evaluation
        got = g2_exact(Point3(1, 1, 1), Coupling.from_z(1.0))
        assert got == pytest.approx(0.28112428130065740633, rel=1e-14)

    def test_g2_approaches_free_propagator(self):
        x = Point3(1, 2, 0.5)
        free = 1.0 / (1.0 + x.norm2)
        diffs = [abs(g2_exact(x, Coupling(lam)) - free) for lam in (1e-2, 1e-4, 1e-6)]
        assert diffs[0] > diffs[1] > diffs[2]
        assert diffs[2] < 1e-6

    def test_first_order_slope(self):
        x = Point3(1, 1, 1)
        lam = 1e-6
        slope = (g2_exact(x, Coupling(lam)) - 0.25) / lam
        g1 = eval_series(perturbative_order(1), x)
        assert abs(slope - g1) / abs(g1) < 1e-5

    def test_partial_sums_consistent(self):
        x = Point3(1, 1, 1)
        lam = 0.1
        exact = g2_exact(x, Coupling(lam))
        e4 = abs(eval_partial_sum(4, x, lam) - exact)
        e8 = abs(eval_partial_sum(8, x, lam) - exact)
        assert e8 < e4
        assert e8 < 1e-6


class TestAlgebraicResidual:
    def test_trivial_at_origin(self):
        assert abs(sde_residual_algebraic(0.0, Coupling(0.3))) <= 1e-14

    def test_grid(self):
        for lam in (0.01, 0.1, 1.0, 10.0):
            c = Coupling(lam)
            for x1 in (0.0, 0.5, 1.0, 2.0, 5.0):
                assert abs(sde_residual_algebraic(x1, c)) < 1e-12, (lam, x1)

    @given(
        st.floats(min_value=-3.0, max_value=1.0),
        st.floats(min_value=0.0, max_value=8.0),
    )
    @settings(max_examples=60)
    def test_residual_random(self, log10_lam, x1):
        c = Coupling(10.0**log10_lam)
        assert abs(sde_residual_algebraic(x1, c)) < 1e-11
