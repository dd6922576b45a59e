"""Non-perturbative evaluation of the 2-point function.

The resummed solution is 1/(1+|x|^2+g) with the shift

    g(x1, z) = z*W((1/z) * exp((1+x1^2)/z)) - 1 - x1^2,   z = (pi/2)*lambda.

All W evaluations go through the Wright omega function in log space,
omega(t) + log(omega(t)) = t with t = (1+x1^2)/z - log(z): for small
couplings the direct W argument overflows binary64 while t stays modest.
Real positive couplings keep the argument positive, so only the principal
branch enters the solution; W_{-1} is provided for completeness/testing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EvaluationDomainError

__all__ = [
    "Point3",
    "Coupling",
    "lambert_w0",
    "lambert_wm1",
    "wright_omega",
    "g_shift",
    "g2_exact",
    "sde_residual_algebraic",
]

# nearest-double branch point -1/e of the real Lambert branches
_BRANCH_POINT = -math.exp(-1.0)


@dataclass(frozen=True)
class Point3:
    """External momentum (x1, x2, x3), componentwise nonnegative and finite."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        for name in ("x1", "x2", "x3"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0:
                raise ValueError(f"momentum component {name}={v!r} must be finite and >= 0")

    @property
    def norm2(self) -> float:
        return self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3


@dataclass(frozen=True)
class Coupling:
    """Positive coupling lambda; z = (pi/2)*lambda drives the W argument."""

    lam: float

    def __post_init__(self):
        if not math.isfinite(self.lam) or self.lam <= 0:
            raise ValueError(f"coupling must be finite and > 0, got {self.lam!r}")

    @property
    def z(self) -> float:
        return 0.5 * math.pi * self.lam

    @classmethod
    def from_z(cls, z: float) -> "Coupling":
        return cls(2.0 * z / math.pi)


def wright_omega(t: float) -> float:
    """Solve w + log(w) = t for the unique positive w.

    Newton iteration; for t > 2 directly in w from the asymptotic seed
    t - log(t) (monotone from below, no exponentials formed, so large t
    such as 1e6 are fine), otherwise in u = log(w) where the equation
    u + e^u = t is convex and Newton converges globally.
    """
    if not math.isfinite(t):
        raise ValueError(f"wright_omega needs finite t, got {t!r}")
    if t > 2.0:
        w = t - math.log(t)
        for _ in range(100):
            step = (w + math.log(w) - t) * w / (w + 1.0)
            w -= step
            if abs(step) <= 1e-16 * w:
                break
        return w
    u = t - 1.0 if t > -1.0 else t
    for _ in range(100):
        eu = math.exp(u)
        step = (u + eu - t) / (1.0 + eu)
        u -= step
        if abs(step) <= 1e-16 * (1.0 + abs(u)):
            break
    return math.exp(u)


def _halley_we_w(w: float, y: float) -> float:
    # Halley refinement for w*e^w = y; valid on either real branch given a
    # seed on that branch and away from the branch point.
    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - y
        w1 = w + 1.0
        step = f / (ew * w1 - (w + 2.0) * f / (2.0 * w1))
        w -= step
        if abs(step) <= 1e-16 * (1.0 + abs(w)):
            break
    return w


def lambert_w0(y: float) -> float:
    """Principal Lambert branch: w >= -1 with w*e^w = y, for y >= -1/e."""
    if not (y >= _BRANCH_POINT):  # also rejects NaN
        raise ValueError(f"lambert_w0 needs y >= -1/e, got {y!r}")
    if y == 0.0:
        return 0.0
    if y > 0.0:
        return wright_omega(math.log(y))
    p = math.sqrt(max(0.0, 2.0 * (math.e * y + 1.0)))
    if p < 1e-4:
        # branch-point series; truncation error O(p^4) ~ 1e-16 here
        return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)))
    if y < -0.3:
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)))
    else:
        w = y * (1.0 - y)  # two-term Taylor seed around 0
    return _halley_we_w(w, y)


def lambert_wm1(y: float) -> float:
    """Secondary real branch: w <= -1 with w*e^w = y, for -1/e <= y < 0."""
    if not (_BRANCH_POINT <= y < 0.0):
        raise ValueError(f"lambert_wm1 needs -1/e <= y < 0, got {y!r}")
    p = math.sqrt(max(0.0, 2.0 * (math.e * y + 1.0)))
    if p < 1e-4:
        # branch-point series with p -> -p relative to the principal branch
        return -1.0 - p * (1.0 + p * (1.0 / 3.0 + p * (11.0 / 72.0)))
    if y < -0.25:
        w = -1.0 - p * (1.0 + p * (1.0 / 3.0 + p * (11.0 / 72.0)))
    else:
        l1 = math.log(-y)
        l2 = math.log(-l1)
        w = l1 - l2 + l2 / l1
    w = _halley_we_w(w, y)
    if w > -1.0 or abs(w * math.exp(w) - y) > 1e-10 * abs(y):
        # w*e^w is decreasing on (-inf, -1]: bisection bracket + polish
        lo, hi = min(2.0 * math.log(-y) - 2.0, -2.0), -1.0
        while lo * math.exp(lo) <= y:
            lo *= 2.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid * math.exp(mid) > y:
                lo = mid
            else:
                hi = mid
        w = _halley_we_w(0.5 * (lo + hi), y)
    return w


def g_shift(x1: float, coupling: Coupling) -> float:
    """Denominator shift g(x1, z) of the exact 2-point function.

    Vanishes identically at x1 = 0 (the Taylor-subtraction point) and as
    lambda -> 0 at fixed x1.
    """
    if not math.isfinite(x1) or x1 < 0:
        raise ValueError(f"x1 must be finite and >= 0, got {x1!r}")
    z = coupling.z
    a = 1.0 + x1 * x1
    t = a / z - math.log(z)
    return z * wright_omega(t) - a


def g2_exact(x: Point3, coupling: Coupling) -> float:
    """Exact 2-point function 1/(1+|x|^2+g(x1,z))."""
    g = g_shift(x.x1, coupling)
    denom = 1.0 + x.norm2 + g
    if denom <= 0.0:
        raise EvaluationDomainError(
            f"nonpositive denominator {denom!r} at x={x}, lambda={coupling.lam}"
        )
    return 1.0 / denom


def sde_residual_algebraic(x1: float, coupling: Coupling) -> float:
    """Fixed-point residual g + z*log(1+x1^2+g) in product form.

    Vanishes identically in exact arithmetic; the product form stays
    well-defined at x1 = 0 where the equivalent ratio form is 0/0.
    """
    g = g_shift(x1, coupling)
    return g + coupling.z * math.log(1.0 + x1 * x1 + g)
