"""Seeded random generation primitives; (seed, stream) pairs give independent streams."""

from __future__ import annotations

import numpy as np


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Deterministic generator for a seed plus a stream path.

    Identical (seed, stream) arguments reproduce identical draws bit for bit.
    """
    return np.random.default_rng(np.random.SeedSequence(entropy=int(seed),
                                                        spawn_key=tuple(int(s) for s in stream)))


def random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random orthogonal matrix from a QR factorization with sign fix."""
    if n < 1:
        raise ValueError("n must be at least 1")
    g = rng.normal(size=(n, n))
    q, r = np.linalg.qr(g)
    d = np.sign(np.diag(r))
    d[d == 0] = 1.0
    return q * d


def sample_with_spectrum(n: int, lo: float, hi: float,
                         rng: np.random.Generator) -> np.ndarray:
    """Random symmetric matrix with eigenvalues uniform in [lo, hi]."""
    if lo > hi:
        raise ValueError("need lo <= hi")
    if lo == hi:
        return lo * np.eye(n)
    q = random_orthogonal(n, rng)
    lam = rng.uniform(lo, hi, size=n)
    a = (q * lam) @ q.T
    return (a + a.T) / 2.0
