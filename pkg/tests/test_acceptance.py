"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; plain ``pytest`` reports the same outcomes per test.
"""

import math
import time
from fractions import Fraction

import pytest

import melontft as m


def _report(num, name, detail=""):
    print(f"ACCEPTANCE {num:02d} [{name}]: PASS {detail}".rstrip())


def test_c01_order_reproduction():
    t0 = time.perf_counter()
    for n in range(1, 13):
        assert m.perturbative_order(n) == m.ansatz_order(n), f"order {n} differs"
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0
    _report(1, "orders 1..9 and extension to 12 reproduce the closed form", f"({elapsed:.2f}s)")


def test_c02_triple_coefficient_agreement():
    t0 = time.perf_counter()
    closed = m.CoeffTable.from_closed_form(12)
    recur = m.CoeffTable.from_recurrences(12)
    assert closed.entries == recur.entries
    for n in range(2, 13):
        row = m.extract_coefficients(m.perturbative_order(n))
        assert row == closed.row(n), f"extraction differs at order {n}"
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0
    _report(2, "recursion = closed form = recurrences for all (n,k,m), n <= 12", f"({elapsed:.2f}s)")


def test_c03_printed_low_orders():
    g1 = {(t.coeff, t.logpow, t.x1pow, t.fullpow) for t in m.perturbative_order(1).terms}
    g2 = {(t.coeff, t.logpow, t.x1pow, t.fullpow) for t in m.perturbative_order(2).terms}
    assert g1 == {(Fraction(1), 1, 0, 2)}
    assert g2 == {(Fraction(1), 2, 0, 3), (Fraction(-1), 1, 1, 2)}
    _report(3, "printed first and second orders match exactly")


def test_c04_fixed_point_algebraic():
    t0 = time.perf_counter()
    worst = 0.0
    for lam in (0.01, 0.1, 1.0, 10.0):
        c = m.Coupling(lam)
        for x1 in (0.0, 0.5, 1.0, 2.0, 5.0):
            worst = max(worst, abs(m.sde_residual_algebraic(x1, c)))
    elapsed = time.perf_counter() - t0
    assert worst < 1e-12
    assert elapsed < 1.0
    _report(4, "algebraic fixed-point residual < 1e-12 on the coupling grid", f"(worst {worst:.2e})")


def test_c05_fixed_point_numeric():
    t0 = time.perf_counter()
    worst_sde = worst_ident = 0.0
    points = (m.Point3(0.5, 0.5, 0.5), m.Point3(1, 0.5, 2), m.Point3(2, 1, 1))
    for lam in (0.1, 0.5, 1.0):
        c = m.Coupling(lam)
        for pt in points:
            worst_sde = max(worst_sde, abs(m.sde_residual_numeric(pt, c, 1e-8)))
            worst_ident = max(
                worst_ident, abs(m.integrated_identity_residual(pt.x1, c, 1e-8))
            )
    elapsed = time.perf_counter() - t0
    assert worst_sde < 1e-6
    assert worst_ident < 1e-6
    assert elapsed < 120.0
    _report(
        5,
        "numeric SDE and integrated-identity residuals < 1e-6",
        f"(worst {worst_sde:.2e} / {worst_ident:.2e}, {elapsed:.1f}s)",
    )


def test_c06_closed_form_integrals():
    worst = 0.0
    for x1 in (0.0, 0.5, 1.0, 2.0):
        a = 1 + x1 * x1
        res = m.integrate_quarter_plane(
            lambda q2, q3: 1 / (a + q2 * q2 + q3 * q3) - 1 / (1 + q2 * q2 + q3 * q3), 1e-8
        )
        assert res.converged
        worst = max(worst, abs(res.value + math.pi / 4 * math.log(a)))
        for n in (2, 3, 4):
            res = m.integrate_quarter_plane(
                lambda q2, q3: (a + q2 * q2 + q3 * q3) ** float(-n), 1e-8
            )
            assert res.converged
            worst = max(worst, abs(res.value - math.pi * a ** (1 - n) / (4 * (n - 1))))
    assert worst < 1e-8
    _report(6, "both closed-form transverse integrals reproduced", f"(worst {worst:.2e})")


def test_c07_free_propagator_limit():
    x = m.Point3(1, 1, 1)
    lam = 1e-6
    free = 1.0 / (1.0 + x.norm2)
    slope = (m.g2_exact(x, m.Coupling(lam)) - free) / lam
    g1 = (math.pi / 2) * math.log(1 + x.x1**2) / (1 + x.norm2) ** 2
    rel = abs(slope - g1) / abs(g1)
    assert rel < 1e-5
    _report(7, "free propagator recovered with first-order slope", f"(rel {rel:.2e})")


def test_c08_series_convergence():
    x = m.Point3(1, 1, 1)
    lam = 0.5
    exact = m.g2_exact(x, m.Coupling(lam))
    errors = {n: abs(m.eval_partial_sum(n, x, lam) - exact) for n in range(4, 13)}
    # successive contributions alternate in sign, so single-step errors
    # wobble; convergence is asserted across the stated window
    assert all(errors[n] < errors[4] for n in range(5, 13))
    assert errors[12] < errors[8] < errors[4]
    assert errors[12] < 1e-4
    _report(
        8,
        "partial sums converge to the exact solution at lambda = 0.5",
        f"(err N=4 {errors[4]:.2e} -> N=12 {errors[12]:.2e})",
    )


def test_c09_special_function_suite():
    ws = [-0.99 / math.e + i * (0.99 / math.e - 0.01) / 19 for i in range(20)]
    ws += [10.0 ** (-2 + 10 * i / 50) for i in range(51)]
    worst_w = 0.0
    for w in ws:
        if w <= 700.0:
            got = m.lambert_w0(w * math.exp(w))
        else:
            # w*e^w overflows binary64; identical code path via log space
            got = m.wright_omega(w + math.log(w))
        worst_w = max(worst_w, abs(got - w) / (1.0 + abs(w)))
    assert worst_w < 1e-13

    worst_m1 = 0.0
    for y in (-1 / math.e + 1e-12, -0.36, -0.2, -0.1, -1e-3, -1e-8):
        w = m.lambert_wm1(y)
        worst_m1 = max(worst_m1, abs(w * math.exp(w) - y) / abs(y))
    assert worst_m1 < 1e-13

    worst_om = 0.0
    for t in (-10.0, -1.0, 0.0, 1.0, 10.0, 709.0, 800.0, 1300.0, 1e4, 1e5, 1e6):
        om = m.wright_omega(t)
        worst_om = max(worst_om, abs(om + math.log(om) - t) / (1.0 + abs(t)))
    assert worst_om < 1e-12
    _report(
        9,
        "Lambert round trips and omega residuals at stated accuracy",
        f"(worst {worst_w:.2e} / {worst_m1:.2e} / {worst_om:.2e})",
    )


def test_c10_identity_suite(capsys):
    for n in range(1, 21):
        for k in range(1, n + 1):
            assert m.check_identity_harmonic(n, k).passed, (n, k)
    for n in range(4, 21):
        for k in range(1, n - 2):
            assert m.check_identity_stirling_621(n, k).passed, (n, k)
    res = m.check_identity_stirling_621(5, 2)
    assert res.printed_lhs == Fraction(6, 24)
    assert res.printed_rhs == Fraction(7, 24)
    assert not res.printed_matches
    den = math.lcm(res.printed_lhs.denominator, res.printed_rhs.denominator)
    sides = tuple(f"{int(v * den)}/{den}" for v in (res.printed_rhs, res.printed_lhs))
    print(
        "ACCEPTANCE 10 note: printed-form discrepancy at (n,k)=(5,2): "
        f"{sides[0]} vs {sides[1]} (informational)"
    )
    _report(10, "harmonic and corrected Stirling identities exact to n = 20")


def test_c11_higher_point_functions():
    lam = 2 / math.pi
    c = m.Coupling(lam)
    a = m.Point3(1, 2, 3)
    b = m.Point3(2, 1, 1)
    cc = m.Point3(0.5, 3, 0.25)

    p = m.Point3(1.3, 0.2, 0.9)
    assert m.connected_2k(m.PointTuple((p,)), c) == m.g2_exact(p, c)

    # frozen from 50-digit substitution of the printed recursion instances
    v2 = m.connected_2k(m.PointTuple((a, b)), c)
    assert v2 == pytest.approx(-0.00018422630730781838614, rel=1e-12)
    v3 = m.connected_2k(m.PointTuple((a, b, cc)), c)
    assert v3 == pytest.approx(1.4725529753944957453e-06, rel=1e-12)

    assert m.disconnected_4pt(a, b, c) == 0.0
    assert m.disconnected_4pt_residual(a, b, c) == 0.0
    _report(11, "higher-point recursion and disconnected nullity verified")
