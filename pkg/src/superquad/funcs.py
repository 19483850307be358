"""Power-function catalog, the Mercer correction term and a superquadraticity certifier.

The catalog contains f(t) = t**p and f(t) = -t**q on [0, inf) for positive
exponents.  A function f is superquadratic when for every x >= 0 some slope
constant c exists with f(y) >= f(x) + c*(y - x) + f(|y - x|) for all y >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

_KINDS = ("power", "neg_power")


@dataclass(frozen=True)
class FunctionSpec:
    """A catalog member: t**exponent ('power') or -t**exponent ('neg_power')."""

    kind: str
    exponent: float

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown function kind {self.kind!r}")
        if not (self.exponent > 0 and math.isfinite(self.exponent)):
            raise ValueError("exponent must be a positive finite real")

    @property
    def claimed_superquadratic(self) -> bool:
        """Whether the classification rule marks this member superquadratic.

        Positive powers qualify for p >= 2, negated powers for q in [1, 2].
        """
        if self.kind == "power":
            return self.exponent >= 2.0
        return 1.0 <= self.exponent <= 2.0

    @property
    def text(self) -> str:
        prefix = "pow" if self.kind == "power" else "negpow"
        return f"{prefix}:{self.exponent:g}"

    def __call__(self, t):
        """Evaluate at a scalar or ndarray of nonnegative abscissae."""
        if isinstance(t, np.ndarray):
            if np.any(t < 0):
                raise DomainError("catalog functions are defined on [0, inf) only")
            v = np.power(t, self.exponent)
            return v if self.kind == "power" else -v
        if t < 0:
            raise DomainError("catalog functions are defined on [0, inf) only")
        v = math.pow(t, self.exponent)
        return v if self.kind == "power" else -v


def parse_function(text: str) -> FunctionSpec:
    """Parse the CLI grammar ``pow:<p>`` / ``negpow:<q>``."""
    head, sep, tail = text.strip().partition(":")
    if not sep:
        raise ValueError(f"bad function spec {text!r}, expected pow:<p> or negpow:<q>")
    try:
        e = float(tail)
    except ValueError:
        raise ValueError(f"bad exponent in function spec {text!r}") from None
    if head == "pow":
        return FunctionSpec("power", e)
    if head == "negpow":
        return FunctionSpec("neg_power", e)
    raise ValueError(f"bad function spec {text!r}, expected pow:<p> or negpow:<q>")


@dataclass(frozen=True)
class Interval:
    """A bound pair 0 <= lo < hi hosting the spectra/arguments of the claims."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (0 <= self.lo < self.hi) or not math.isfinite(self.hi):
            raise ValueError(f"need 0 <= lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


def _check_in_interval(iv: Interval, t, slack: float):
    bad = (np.min(t) < iv.lo - slack) or (np.max(t) > iv.hi + slack)
    if bad:
        raise DomainError(f"argument {t} outside [{iv.lo}, {iv.hi}]")


def mercer_correction(f: FunctionSpec, iv: Interval, t):
    """Correction term (t-lo)/(hi-lo)*f(hi-t) + (hi-t)/(hi-lo)*f(t-lo).

    This is the refinement that superquadraticity adds to the plain convex
    Mercer bound.  Symmetric under t -> lo + hi - t.  Arguments must lie in
    [lo, hi]; values within 1e-12 of the endpoints are clamped.
    """
    t = np.asarray(t, dtype=float) if isinstance(t, (list, tuple, np.ndarray)) else float(t)
    slack = 1e-12 * (1.0 + abs(iv.hi))
    _check_in_interval(iv, t, slack)
    t = np.clip(t, iv.lo, iv.hi)
    w = iv.width
    val = (t - iv.lo) / w * f(iv.hi - t) + (iv.hi - t) / w * f(t - iv.lo)
    return val


def power_correction_closed(p: float, iv: Interval, x) -> float:
    """Closed form of the correction term for f(t) = t**p, p >= 1.

    Equals (hi-x)*(x-lo)/(hi-lo) * ((hi-x)**(p-1) + (x-lo)**(p-1)).
    """
    if p < 1:
        raise DomainError("closed-form correction needs p >= 1")
    x = np.asarray(x, dtype=float) if isinstance(x, (list, tuple, np.ndarray)) else float(x)
    slack = 1e-12 * (1.0 + abs(iv.hi))
    _check_in_interval(iv, x, slack)
    x = np.clip(x, iv.lo, iv.hi)
    a = iv.hi - x
    b = x - iv.lo
    return a * b / iv.width * (np.power(a, p - 1.0) + np.power(b, p - 1.0))


@dataclass
class SuperquadraticityCertificate:
    """Slope-constant windows on a grid, and the resulting verdict.

    For each grid point x the admissible slope constants form the window
    [lower, upper] computed from the defining inequality against all other
    grid points.  The function passes when every window is nonempty within
    tolerance.  ``witness`` is (x, y_low, y_high) for the first empty window;
    the pair of abscissae produces contradictory slope requirements.
    """

    grid: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    tol: float
    holds: bool
    witness: tuple | None = None

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    @property
    def slack(self) -> float:
        """Smallest window width over the grid (negative when some window is empty)."""
        return float(np.min(self.upper - self.lower))

    def constants(self) -> np.ndarray:
        """A concrete admissible constant per grid point (window midpoint).

        Windows unbounded on one side fall back to the finite edge.
        """
        lo = np.where(np.isfinite(self.lower), self.lower, self.upper)
        hi = np.where(np.isfinite(self.upper), self.upper, self.lower)
        mid = (lo + hi) / 2.0
        return np.where(np.isfinite(mid), mid, 0.0)


def certify_superquadratic(f: FunctionSpec, span: float = 10.0,
                           grid_size: int = 200,
                           tol: float | None = None) -> SuperquadraticityCertificate:
    """Grid test of the superquadraticity definition on [0, span].

    For every grid point x, constraints on the slope constant come from all
    other grid points y via (f(y) - f(x) - f(|y - x|)) / (y - x): points
    above x cap the constant, points below floor it.  The existence test
    avoids derivative formulas so it also works for non-smooth candidates.
    """
    if grid_size < 3:
        raise ValueError("grid_size must be at least 3")
    if span <= 0:
        raise ValueError("span must be positive")
    grid = np.linspace(0.0, span, grid_size)
    if tol is None:
        tol = 1e-9 * (1.0 + abs(f(span)))

    fg = f(grid)
    # quotient[i, j] = (f(y_j) - f(x_i) - f(|y_j - x_i|)) / (y_j - x_i)
    delta = grid[None, :] - grid[:, None]
    fdiff = f(np.abs(delta))
    with np.errstate(divide="ignore", invalid="ignore"):
        quot = (fg[None, :] - fg[:, None] - fdiff) / delta
    above = delta > 0
    below = delta < 0
    upper = np.where(above, quot, np.inf).min(axis=1)
    lower = np.where(below, quot, -np.inf).max(axis=1)

    holds = bool(np.all(lower <= upper + tol)) and f(0.0) <= tol
    witness = None
    if f(0.0) > tol:
        witness = (0.0, 0.0, 0.0)
    elif not holds:
        i = int(np.argmax(lower - upper))
        j_low = int(np.argmax(np.where(below[i], quot[i], -np.inf)))
        j_high = int(np.argmin(np.where(above[i], quot[i], np.inf)))
        witness = (float(grid[i]), float(grid[j_low]), float(grid[j_high]))
    return SuperquadraticityCertificate(grid=grid, lower=lower, upper=upper,
                                        tol=tol, holds=holds, witness=witness)
