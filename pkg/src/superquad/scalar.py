"""Scalar inequality chains: Jensen, Mercer, Hermite-Hadamard-Mercer and relatives.

Every operation returns a signed margin (or a chain of terms with signed
consecutive margins); nonnegative margins certify the claimed direction.
Verdicts apply the tolerance -1e-9 * (1 + max |term|).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateInstanceError, DomainError
from .funcs import FunctionSpec, Interval, mercer_correction, power_correction_closed

MARGIN_TOL = 1e-9


def integrate(g, a: float, b: float, tol: float = 1e-10, max_depth: int = 40) -> float:
    """Adaptive Simpson quadrature of g over [a, b] to absolute accuracy tol."""
    if a > b:
        raise DomainError("integration bounds must satisfy a <= b")
    if a == b:
        return 0.0

    def _eval(x):
        v = g(x)
        if not np.isfinite(v):
            raise ArithmeticError(f"integrand not finite at {x}")
        return v

    def _simpson(lo, mid, hi, flo, fmid, fhi):
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def _recurse(lo, hi, flo, fmid, fhi, whole, eps, depth):
        mid = 0.5 * (lo + hi)
        lm = _eval(0.5 * (lo + mid))
        rm = _eval(0.5 * (mid + hi))
        left = _simpson(lo, 0.5 * (lo + mid), mid, flo, lm, fmid)
        right = _simpson(mid, 0.5 * (mid + hi), hi, fmid, rm, fhi)
        err = left + right - whole
        if depth <= 0 or abs(err) <= 15.0 * eps:
            return left + right + err / 15.0
        return (_recurse(lo, mid, flo, lm, fmid, left, eps / 2.0, depth - 1)
                + _recurse(mid, hi, fmid, rm, fhi, right, eps / 2.0, depth - 1))

    mid = 0.5 * (a + b)
    fa, fm, fb = _eval(a), _eval(mid), _eval(b)
    whole = _simpson(a, mid, b, fa, fm, fb)
    return _recurse(a, b, fa, fm, fb, whole, tol, max_depth)


@dataclass(frozen=True)
class WeightedSample:
    """Points in an interval with convex weights summing to one."""

    points: tuple
    weights: tuple

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        wts = np.asarray(self.weights, dtype=float)
        if pts.shape != wts.shape or pts.ndim != 1 or pts.size == 0:
            raise ValueError("points and weights must be equal-length nonempty sequences")
        if np.any(wts < -1e-15):
            raise ValueError("weights must be nonnegative")
        if abs(wts.sum() - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1 within 1e-12")
        object.__setattr__(self, "points", tuple(float(p) for p in pts))
        object.__setattr__(self, "weights", tuple(float(w) for w in wts))

    def check_inside(self, iv: Interval):
        slack = 1e-12 * (1.0 + abs(iv.hi))
        for p in self.points:
            if p < iv.lo - slack or p > iv.hi + slack:
                raise DomainError(f"sample point {p} outside [{iv.lo}, {iv.hi}]")


@dataclass
class ChainResult:
    """Successive expressions of an inequality chain with its claimed direction."""

    terms: tuple
    direction: str  # 'ascending' or 'descending'
    tol: float = field(default=None)

    def __post_init__(self):
        if self.direction not in ("ascending", "descending"):
            raise ValueError("direction must be 'ascending' or 'descending'")
        self.terms = tuple(float(t) for t in self.terms)
        if self.tol is None:
            self.tol = MARGIN_TOL * (1.0 + max(abs(t) for t in self.terms))

    @property
    def margins(self) -> tuple:
        """Consecutive differences terms[i+1] - terms[i]."""
        return tuple(b - a for a, b in zip(self.terms, self.terms[1:]))

    @property
    def directed_margin(self) -> float:
        """Smallest margin in the claimed direction; negative means violation."""
        sign = 1.0 if self.direction == "ascending" else -1.0
        return min(sign * m for m in self.margins)

    @property
    def holds(self) -> bool:
        return self.directed_margin >= -self.tol


def _mix(a, b, lam):
    return lam * a + (1.0 - lam) * b


def jensen_gap(f: FunctionSpec, x: float, y: float, lam: float) -> float:
    """Gap of the Jensen inequality with superquadratic correction terms.

    Returns lam*f(x) + (1-lam)*f(y) - lam*f((1-lam)|x-y|) - (1-lam)*f(lam|x-y|)
    minus f(lam*x + (1-lam)*y); nonnegative for superquadratic f.
    """
    if x < 0 or y < 0:
        raise DomainError("x and y must be nonnegative")
    if not 0.0 <= lam <= 1.0:
        raise DomainError("lam must lie in [0, 1]")
    s = abs(x - y)
    rhs = _mix(f(x), f(y), lam) - lam * f((1.0 - lam) * s) - (1.0 - lam) * f(lam * s)
    return rhs - f(_mix(x, y, lam))


def mercer_gap(f: FunctionSpec, iv: Interval, sample: WeightedSample) -> float:
    """Gap of the weighted Mercer inequality for a convex power function."""
    if f.kind != "power" or f.exponent < 1.0:
        raise DomainError("the plain Mercer bound needs a convex member, pow:<p> with p >= 1")
    sample.check_inside(iv)
    pts = np.asarray(sample.points)
    wts = np.asarray(sample.weights)
    mean = float(wts @ pts)
    rhs = f(iv.lo) + f(iv.hi) - float(wts @ f(pts))
    return rhs - f(iv.lo + iv.hi - mean)


def two_point_mercer_gap(f: FunctionSpec, iv: Interval, x: float, y: float,
                         lam: float) -> float:
    """Gap of the two-point Mercer bound with correction terms at weight lam.

    Compares f(lo + hi - mix) + 2 * mixed correction against
    f(lo) + f(hi) - mixed f - mixed Jensen correction.
    """
    slack = 1e-12 * (1.0 + abs(iv.hi))
    for t in (x, y):
        if t < iv.lo - slack or t > iv.hi + slack:
            raise DomainError(f"point {t} outside [{iv.lo}, {iv.hi}]")
    if not 0.0 <= lam <= 1.0:
        raise DomainError("lam must lie in [0, 1]")
    s = abs(x - y)
    lhs = f(iv.lo + iv.hi - _mix(x, y, lam)) + 2.0 * _mix(
        mercer_correction(f, iv, x), mercer_correction(f, iv, y), lam)
    rhs = (f(iv.lo) + f(iv.hi) - _mix(f(x), f(y), lam)
           - _mix(f((1.0 - lam) * s), f(lam * s), lam))
    return rhs - lhs


def _require_distinct(x: float, y: float):
    if abs(x - y) <= 1e-12 * (1.0 + abs(x) + abs(y)):
        raise DegenerateInstanceError("x and y must be distinct, the 1/(y-x) mean is undefined")


def hh_mercer_chain1(f: FunctionSpec, iv: Interval, x: float, y: float) -> ChainResult:
    """First Hermite-Hadamard-Mercer chain (reflected integral mean in the middle).

    Terms: midpoint expression with its half-range integral, the mean of
    f(lo + hi - u) over [x, y], and the endpoint expression with the
    corrections and the (1-u)-weighted integral.  Ascending for
    superquadratic f.
    """
    _require_distinct(x, y)
    slack = 1e-12 * (1.0 + abs(iv.hi))
    for t in (x, y):
        if t < iv.lo - slack or t > iv.hi + slack:
            raise DomainError(f"point {t} outside [{iv.lo}, {iv.hi}]")
    s = abs(x - y)
    a, b = min(x, y), max(x, y)
    t1 = f(iv.lo + iv.hi - 0.5 * (x + y)) + 2.0 * integrate(lambda u: f(u * s), 0.0, 0.5)
    t2 = integrate(lambda u: f(iv.lo + iv.hi - u), a, b) / (b - a)
    t3 = (f(iv.lo) + f(iv.hi) - 0.5 * (f(x) + f(y))
          - (mercer_correction(f, iv, x) + mercer_correction(f, iv, y))
          - 2.0 * integrate(lambda u: (1.0 - u) * f(u * s), 0.0, 1.0))
    return ChainResult((t1, t2, t3), "ascending")


def hh_mercer_chain2(f: FunctionSpec, iv: Interval, x: float, y: float) -> ChainResult:
    """Second Hermite-Hadamard-Mercer chain (direct integral means on the right).

    Terms: the same midpoint expression, f(lo) + f(hi) minus the mean of
    f + 2*correction over [x, y], and the variant with f at the midpoint.
    Ascending for superquadratic f.
    """
    _require_distinct(x, y)
    slack = 1e-12 * (1.0 + abs(iv.hi))
    for t in (x, y):
        if t < iv.lo - slack or t > iv.hi + slack:
            raise DomainError(f"point {t} outside [{iv.lo}, {iv.hi}]")
    s = abs(x - y)
    a, b = min(x, y), max(x, y)
    half_int = integrate(lambda u: f(u * s), 0.0, 0.5)
    corr_mean = integrate(lambda u: mercer_correction(f, iv, u), a, b) / (b - a)
    t1 = f(iv.lo + iv.hi - 0.5 * (x + y)) + 2.0 * half_int
    t2 = (f(iv.lo) + f(iv.hi)
          - integrate(lambda u: f(u) + 2.0 * mercer_correction(f, iv, u), a, b) / (b - a))
    t3 = f(iv.lo) + f(iv.hi) - f(0.5 * (x + y)) - 2.0 * corr_mean - 2.0 * half_int
    return ChainResult((t1, t2, t3), "ascending")


def hh_chain(f: FunctionSpec, x: float, y: float) -> ChainResult:
    """Hermite-Hadamard chain for superquadratic f on [x, y] (0 <= x < y).

    Terms: f at the midpoint plus the half-range integral, the integral mean
    of f, and the endpoint average minus 2*f(0) and the weighted integral.
    """
    if x < 0 or y <= x:
        raise DomainError("need 0 <= x < y")
    s = y - x
    t1 = f(0.5 * (x + y)) + 2.0 * integrate(lambda u: f(u * s), 0.0, 0.5)
    t2 = integrate(f, x, y) / s
    t3 = (0.5 * (f(x) + f(y)) - 2.0 * f(0.0)
          - 2.0 * integrate(lambda u: (1.0 - u) * f(u * s), 0.0, 1.0))
    return ChainResult((t1, t2, t3), "ascending")


def power_chain(p: float, iv: Interval, x: float, y: float) -> ChainResult:
    """Closed-form power chain; ascending for p >= 2, descending for p in [1, 2].

    At p = 2 all three terms coincide, which is the square identity used as
    an exactness oracle.
    """
    if p < 1:
        raise DomainError("power chain needs p >= 1")
    _require_distinct(x, y)
    slack = 1e-12 * (1.0 + abs(iv.hi))
    for t in (x, y):
        if t < iv.lo - slack or t > iv.hi + slack:
            raise DomainError(f"point {t} outside [{iv.lo}, {iv.hi}]")
    s = abs(x - y)
    total = iv.lo + iv.hi
    t1 = (total - 0.5 * (x + y)) ** p + s ** p / (2.0 ** p * (p + 1.0))
    t2 = ((total - x) ** (p + 1.0) - (total - y) ** (p + 1.0)) / ((p + 1.0) * (y - x))
    t3 = (iv.lo ** p + iv.hi ** p - 0.5 * (x ** p + y ** p)
          - (power_correction_closed(p, iv, x) + power_correction_closed(p, iv, y))
          - 2.0 * s ** p / ((p + 1.0) * (p + 2.0)))
    direction = "ascending" if p >= 2.0 else "descending"
    return ChainResult((t1, t2, t3), direction)


def superadditive_gap(f: FunctionSpec, x: float, y: float) -> float:
    """Gap of f(x) + f(y) <= f(x+y) - 2*(y*f(x) + x*f(y))/(x+y)."""
    if x < 0 or y < 0:
        raise DomainError("x and y must be nonnegative")
    if x + y <= 0:
        raise DegenerateInstanceError("x + y must be positive")
    rhs = f(x + y) - 2.0 * (y * f(x) + x * f(y)) / (x + y)
    return rhs - (f(x) + f(y))


def four_point_gap(f: FunctionSpec, y1: float, x1: float, x2: float, y2: float) -> float:
    """Gap of the interlaced four-point bound for equal sums.

    Needs 0 <= y1 <= x1 <= x2 <= y2 with y1 < y2 and x1 + x2 = y1 + y2;
    returns f(y1) + f(y2) minus the two weighted correction terms minus
    f(x1) + f(x2).
    """
    slack = 1e-12 * (1.0 + abs(y2))
    if not (-slack <= y1 <= x1 + slack and x1 <= x2 + slack and x2 <= y2 + slack):
        raise DomainError("need ordering 0 <= y1 <= x1 <= x2 <= y2")
    if y2 - y1 <= slack:
        raise DegenerateInstanceError("y1 and y2 must be distinct")
    if abs((x1 + x2) - (y1 + y2)) > slack:
        raise DomainError("need the sum constraint x1 + x2 = y1 + y2")
    span = y2 - y1
    w_outer = (y2 - x1) / span
    w_inner = (x1 - y1) / span
    rhs = (f(y1) + f(y2)
           - 2.0 * w_outer * f(max(x1 - y1, 0.0))
           - 2.0 * w_inner * f(max(x2 - y1, 0.0)))
    return rhs - (f(x1) + f(x2))
