"""Shared oracles for the test suite.

These deliberately re-derive quantities along different code paths than
the library: profiles are built from the exponential form of the
Hermitian part and norms are computed with inline formulas, so a dense
theta grid here is an independent check on the library's optimizer.
"""

from __future__ import annotations

import math

import numpy as np


def random_complex(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    return scale * (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / math.sqrt(2)


def random_hermitian(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    G = random_complex(rng, n, scale)
    return (G + G.conj().T) / 2


def norm_of_svals(s: np.ndarray, p: float) -> np.ndarray:
    """Schatten p-norm from singular values along the last axis."""
    s = np.asarray(s, dtype=np.float64)
    if math.isinf(p):
        return s.max(axis=-1)
    return (s**p).sum(axis=-1) ** (1.0 / p)


def profile_abs_eigs(X: np.ndarray, samples: int) -> np.ndarray:
    """|eigenvalues| of Re(e^{i*theta} X) on a uniform theta grid over [0, pi)."""
    thetas = np.pi * np.arange(samples) / samples
    ph = np.exp(1j * thetas)
    H = 0.5 * (ph[:, None, None] * X + np.conj(ph)[:, None, None] * X.conj().T)
    return np.abs(np.linalg.eigvalsh(H))


def oracle_omega(X: np.ndarray, p: float, samples: int = 100000) -> float:
    """Dense-grid value of sup_theta N(Re(e^{i*theta} X))."""
    lam = profile_abs_eigs(np.asarray(X, dtype=np.complex128), samples)
    return float(norm_of_svals(lam, p).max())


def oracle_resolution_slack(X: np.ndarray, p: float, samples: int) -> float:
    """Worst-case shortfall of the dense-grid oracle: L * (grid step) / 2."""
    X = np.asarray(X, dtype=np.complex128)
    A = (X + X.conj().T) / 2
    B = (X - X.conj().T) / 2j
    L = float(norm_of_svals(np.abs(np.linalg.eigvalsh(A)), p) + norm_of_svals(np.abs(np.linalg.eigvalsh(B)), p))
    return L * (math.pi / samples) / 2
