"""Aggregated verification suites behind the ``verify`` CLI command.

Each suite returns a list of named checks; informational lines (like the
printed-form status of identities known to disagree with their own
derivation) carry ``passed=None`` and never fail a suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

from . import combinatorics as comb
from . import greens, quadrature, series, specialfn
from .errors import NotConvergedError

__all__ = ["Check", "suite_coeffs", "suite_identities", "suite_lambert", "suite_sde", "run_suites"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: Optional[bool]  # None marks an informational line
    detail: str = ""

    def line(self) -> str:
        tag = "INFO" if self.passed is None else ("PASS" if self.passed else "FAIL")
        return f"[{tag}] {self.name}" + (f": {self.detail}" if self.detail else "")


def suite_coeffs(max_order: int = 9) -> List[Check]:
    """Recursion vs closed form vs recurrences, exactly, order by order."""
    checks: List[Check] = []
    for n in range(1, max_order + 1):
        same = series.perturbative_order(n) == series.ansatz_order(n)
        checks.append(
            Check(
                f"order {n}: recursion equals closed form",
                same,
                "exact term multisets" if same else "term mismatch",
            )
        )
    if max_order >= 2:
        closed = comb.CoeffTable.from_closed_form(max_order)
        recur = comb.CoeffTable.from_recurrences(max_order)
        for n in range(2, max_order + 1):
            row = series.extract_coefficients(series.perturbative_order(n))
            ok = row == closed.row(n) == recur.row(n)
            checks.append(
                Check(
                    f"order {n}: extracted = closed = recurrence coefficients",
                    ok,
                    f"{len(row)} entries",
                )
            )
    return checks


def suite_identities(max_n: int = 20) -> List[Check]:
    checks: List[Check] = []

    bad = [
        (n, k)
        for n in range(1, max_n + 1)
        for k in range(1, n + 1)
        if not comb.check_identity_harmonic(n, k).passed
    ]
    checks.append(
        Check(
            f"harmonic identity, all 1 <= k <= n <= {max_n}",
            not bad,
            "exact" if not bad else f"fails at {bad[:3]}",
        )
    )

    corrected_bad = []
    printed_bad = []
    for n in range(4, max_n + 1):
        for k in range(1, n - 2):
            res = comb.check_identity_stirling_621(n, k)
            if not res.passed:
                corrected_bad.append((n, k))
            if not res.printed_matches:
                printed_bad.append((n, k, res.printed_lhs, res.printed_rhs))
    checks.append(
        Check(
            f"Stirling sum identity (corrected form), 4 <= n <= {max_n}",
            not corrected_bad,
            "exact" if not corrected_bad else f"fails at {corrected_bad[:3]}",
        )
    )
    if printed_bad:
        n, k, lhs, rhs = printed_bad[0]
        checks.append(
            Check(
                "Stirling sum identity as printed",
                None,
                f"disagrees at {len(printed_bad)} indices; first (n,k)=({n},{k}): "
                f"{comb.rational_str(lhs)} vs {comb.rational_str(rhs)}",
            )
        )

    big_bad = []
    printed_big = 0
    total_big = 0
    top = min(max_n, 12)
    for n in range(5, top + 1):
        for k in range(2, n - 2):
            for m in range(2, k + 1):
                res = comb.check_identity_big_stirling(n, k, m)
                total_big += 1
                if not res.passed:
                    big_bad.append((n, k, m))
                if res.printed_matches:
                    printed_big += 1
    checks.append(
        Check(
            f"generic recurrence on coefficient values, n <= {top}",
            not big_bad,
            "exact" if not big_bad else f"fails at {big_bad[:3]}",
        )
    )
    checks.append(
        Check(
            "big Stirling identity as printed",
            None,
            f"matches at {printed_big}/{total_big} generic indices",
        )
    )
    return checks


def suite_lambert() -> List[Check]:
    checks: List[Check] = []

    worst = 0.0
    grid = [-0.99 / math.e + i * (0.99 / math.e - 0.01) / 19 for i in range(20)]
    grid += [10.0 ** (-2 + 10 * i / 50) for i in range(51)]
    for w in grid:
        if w <= 700.0:
            got = specialfn.lambert_w0(w * math.exp(w))
        else:
            # w*e^w overflows binary64; same code path, argument in log space
            got = specialfn.wright_omega(w + math.log(w))
        worst = max(worst, abs(got - w) / (1.0 + abs(w)))
    checks.append(
        Check("principal branch round trip on [-0.99/e, 1e8]", worst <= 1e-13, f"worst {worst:.2e}")
    )

    worst = 0.0
    for y in [-1.0 / math.e + 1e-12, -0.36, -0.3, -0.2, -0.1, -0.05, -1e-3, -1e-6]:
        w = specialfn.lambert_wm1(y)
        worst = max(worst, abs(w * math.exp(w) - y) / abs(y))
    checks.append(
        Check("secondary branch defining residual on [-1/e, 0)", worst <= 1e-13, f"worst {worst:.2e}")
    )

    worst = 0.0
    tgrid = [-10.0, -2.0, -0.5, 0.0, 1.0, 2.0, 10.0, 100.0, 709.0, 1300.0, 1e4, 1e6]
    for t in tgrid:
        om = specialfn.wright_omega(t)
        worst = max(worst, abs(om + math.log(om) - t) / (1.0 + abs(t)))
    checks.append(
        Check(
            "omega defining residual up to t = 1e6 (incl. exp overflow range)",
            worst <= 1e-12,
            f"worst {worst:.2e}",
        )
    )
    return checks


def suite_sde(
    lam: Optional[float] = None,
    x: Optional[specialfn.Point3] = None,
    tol: float = 1.0e-8,
    numeric: bool = False,
) -> List[Check]:
    checks: List[Check] = []
    lams = [lam] if lam is not None else [0.01, 0.1, 1.0, 10.0]
    x1s = [x.x1] if x is not None else [0.0, 0.5, 1.0, 2.0, 5.0]
    worst = 0.0
    for lv in lams:
        c = specialfn.Coupling(lv)
        for x1 in x1s:
            worst = max(worst, abs(specialfn.sde_residual_algebraic(x1, c)))
    checks.append(
        Check("algebraic fixed-point residual < 1e-12 on grid", worst < 1e-12, f"worst {worst:.2e}")
    )

    if numeric:
        lam_n = lam if lam is not None else 0.5
        x_n = x if x is not None else specialfn.Point3(1.0, 0.5, 0.5)
        c = specialfn.Coupling(lam_n)
        sde_name = f"numeric SDE residual at lambda={lam_n}, x=({x_n.x1},{x_n.x2},{x_n.x3})"
        ident_name = f"integrated-identity residual at lambda={lam_n}, x1={x_n.x1}"
        try:
            r1 = quadrature.sde_residual_numeric(x_n, c, abs_tol=tol)
            checks.append(
                Check(sde_name, abs(r1) < 1e-6, f"residual {r1:.2e} at abs_tol {tol:g}, converged")
            )
        except NotConvergedError as exc:
            checks.append(Check(sde_name, False, f"not converged: {exc}"))
        try:
            r2 = quadrature.integrated_identity_residual(x_n.x1, c, abs_tol=tol)
            checks.append(Check(ident_name, abs(r2) < 1e-6, f"residual {r2:.2e}, converged"))
        except NotConvergedError as exc:
            checks.append(Check(ident_name, False, f"not converged: {exc}"))
    return checks


def suite_greens() -> List[Check]:
    checks: List[Check] = []
    c = specialfn.Coupling(0.4)
    p = specialfn.Point3(1.0, 0.5, 2.0)
    single = greens.connected_2k(greens.PointTuple((p,)), c)
    checks.append(
        Check("2-point recursion base equals exact solution", single == specialfn.g2_exact(p, c))
    )
    pts = greens.PointTuple((specialfn.Point3(1.0, 2.0, 3.0), specialfn.Point3(2.0, 1.0, 1.0)))
    ratios = []
    for lv in (1e-4, 1e-5):
        val = greens.connected_2k(pts, specialfn.Coupling(lv))
        ratios.append(val / lv)
    rel = abs(ratios[0] - ratios[1]) / abs(ratios[1])
    checks.append(
        Check("4-point value scales linearly in the coupling", rel < 5e-3, f"slope drift {rel:.2e}")
    )
    resid = greens.disconnected_4pt_residual(p, specialfn.Point3(2.0, 1.0, 3.0), c)
    checks.append(Check("disconnected 4-point self-check", resid == 0.0, f"residual {resid!r}"))
    return checks


def run_suites(
    names: List[str],
    max_order: int = 9,
    max_n: int = 20,
    lam: Optional[float] = None,
    x: Optional[specialfn.Point3] = None,
    tol: float = 1.0e-8,
    numeric: bool = False,
) -> List[Check]:
    checks: List[Check] = []
    for name in names:
        if name == "coeffs":
            checks += suite_coeffs(max_order)
        elif name == "identities":
            checks += suite_identities(max_n)
        elif name == "lambert":
            checks += suite_lambert()
        elif name == "sde":
            checks += suite_sde(lam=lam, x=x, tol=tol, numeric=numeric)
        elif name == "greens":
            checks += suite_greens()
        else:
            raise ValueError(f"unknown suite {name!r}")
    return checks
