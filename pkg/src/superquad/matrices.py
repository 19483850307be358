"""Dense real symmetric matrices: eigendecomposition, functional calculus, Loewner order."""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np

from .errors import DomainError
from .funcs import FunctionSpec, Interval, mercer_correction


class SpectralDecomposition(NamedTuple):
    eigenvalues: np.ndarray  # ascending
    vectors: np.ndarray      # orthogonal, columns are eigenvectors


def sym_matrix(entries) -> np.ndarray:
    """Validate and symmetrize a square real matrix.

    Entries must be finite and symmetric within 1e-12 * (1 + |a_ij|); the
    returned array is the exact symmetric average.
    """
    a = np.asarray(entries, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    gap = np.abs(a - a.T)
    if np.any(gap > 1e-12 * (1.0 + np.abs(a))):
        raise ValueError("matrix is not symmetric within tolerance")
    return (a + a.T) / 2.0


def max_abs(x: np.ndarray) -> float:
    return float(np.max(np.abs(x))) if np.asarray(x).size else 0.0


def eig_sym(a: np.ndarray) -> SpectralDecomposition:
    """Orthogonal eigendecomposition with ascending eigenvalues (LAPACK backed)."""
    w, q = np.linalg.eigh(a)
    return SpectralDecomposition(w, q)


def jacobi_eig_sym(a: np.ndarray, tol: float = 1e-12,
                   max_sweeps: int = 100) -> SpectralDecomposition:
    """Cyclic Jacobi eigendecomposition, kept as a self-contained cross-check.

    Converges when the off-diagonal Frobenius mass drops below
    tol * ||a||_F; raises ArithmeticError past the sweep budget.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return SpectralDecomposition(a.reshape(1).copy(), v)
    norm_a = max(np.linalg.norm(a), np.finfo(float).tiny)
    for _ in range(max_sweeps):
        off = math.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= tol * norm_a:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                rows = a[[p, q], :]
                a[[p, q], :] = rot.T @ rows
                cols = a[:, [p, q]]
                a[:, [p, q]] = cols @ rot
                a[p, q] = a[q, p] = 0.0
                v[:, [p, q]] = v[:, [p, q]] @ rot
    else:
        raise ArithmeticError("Jacobi iteration did not converge within the sweep budget")
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return SpectralDecomposition(w[order], v[:, order])


def _rebuild(w: np.ndarray, q: np.ndarray) -> np.ndarray:
    b = (q * w) @ q.T
    return (b + b.T) / 2.0


def matrix_function(a: np.ndarray, vec_fn: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Apply a function to a symmetric matrix through its eigenvalues."""
    w, q = np.linalg.eigh(a)
    return _rebuild(vec_fn(w), q)


def apply_function(f: FunctionSpec, a: np.ndarray, clamp_tol: float = 1e-10) -> np.ndarray:
    """Functional calculus f(a) for a with nonnegative spectrum.

    Eigenvalues within clamp_tol below zero are clamped to zero; anything
    lower is a domain error.
    """
    w, q = np.linalg.eigh(a)
    if w[0] < -clamp_tol * (1.0 + max_abs(a)):
        raise DomainError(f"spectrum reaches {w[0]}, below the domain [0, inf)")
    return _rebuild(f(np.maximum(w, 0.0)), q)


def apply_correction(f: FunctionSpec, iv: Interval, a: np.ndarray,
                     clamp_tol: float = 1e-10) -> np.ndarray:
    """Mercer correction term applied eigenvalue-wise; spectrum must sit in the interval."""
    w, q = np.linalg.eigh(a)
    scale = 1.0 + abs(iv.hi)
    if w[0] < iv.lo - clamp_tol * scale or w[-1] > iv.hi + clamp_tol * scale:
        raise DomainError(
            f"spectrum [{w[0]}, {w[-1]}] escapes [{iv.lo}, {iv.hi}]")
    w = np.clip(w, iv.lo, iv.hi)
    return _rebuild(np.asarray(mercer_correction(f, iv, w)), q)


def loewner_leq(a: np.ndarray, b: np.ndarray, tol: float = 0.0):
    """Whether a <= b in the Loewner order, with the margin min eig(b - a)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch {a.shape} vs {b.shape}")
    margin = float(np.linalg.eigvalsh(b - a)[0])
    return margin >= -tol, margin


_NORMS = ("operator", "trace", "frobenius")


def unitarily_invariant_norm(x: np.ndarray, kind: str = "operator") -> float:
    """Operator, trace or Frobenius norm of a symmetric matrix."""
    if kind not in _NORMS:
        raise ValueError(f"unknown norm {kind!r}, pick one of {_NORMS}")
    if kind == "frobenius":
        return float(np.linalg.norm(x, "fro"))
    w = np.abs(np.linalg.eigvalsh(x))
    return float(np.max(w)) if kind == "operator" else float(np.sum(w))
