"""Seeded random matrix factories for the structured inputs the checks need.

Randomness comes from the counter-based Philox bit generator keyed by a
64-bit seed, with Gaussians produced by the polar Box-Muller transform
from explicit uniforms.  Identical configurations therefore reproduce
identical matrices across runs, and derived streams (seed mixed with a
tag via a splitmix64 finalizer) keep independent draws decoupled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, herm_eig

__all__ = [
    "GenConfig",
    "mix_seed",
    "random_ginibre",
    "random_pd",
    "random_sectorial",
    "random_accretive_dissipative",
    "random_unitary",
]

_MASK64 = 0xFFFFFFFFFFFFFFFF
# splitmix64 constants (Steele, Lea, Flood 2014), also used to fold tags.
_GOLDEN64 = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

# Stream tags for derived seeds inside composite factories.
_STREAM_PD = 0x5D
_STREAM_SECT_BASE = 0xA1
_STREAM_SECT_TILT = 0xA2
_STREAM_AD_RE = 0xC1
_STREAM_AD_IM = 0xC2
_STREAM_UNITARY = 0xE7


def mix_seed(seed: int, *tags: int) -> int:
    """Derive a decorrelated 64-bit seed from a base seed and integer tags."""
    x = seed & _MASK64
    for t in tags:
        x = (x + _GOLDEN64 * ((t & _MASK64) + 1)) & _MASK64
        x ^= x >> 30
        x = (x * _MIX1) & _MASK64
        x ^= x >> 27
        x = (x * _MIX2) & _MASK64
        x ^= x >> 31
    return x


@dataclass(frozen=True)
class GenConfig:
    """Factory configuration: dimension, 64-bit seed, overall scale."""

    n: int
    seed: int
    scale: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not (self.scale > 0):
            raise ValueError(f"scale must be positive, got {self.scale}")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed & _MASK64))


def _complex_std_normals(rng: np.random.Generator, count: int) -> np.ndarray:
    # Polar Box-Muller: sqrt(-log u1) * exp(2*pi*i*u2) is standard complex
    # Gaussian (E|z|^2 = 1); u1 shifted into (0, 1] so the log is finite.
    u1 = 1.0 - rng.random(count)
    u2 = rng.random(count)
    return np.sqrt(-np.log(u1)) * np.exp(2j * np.pi * u2)


def random_ginibre(cfg: GenConfig) -> np.ndarray:
    """Matrix of i.i.d. standard complex Gaussian entries, times cfg.scale."""
    rng = _rng(cfg.seed)
    z = _complex_std_normals(rng, cfg.n * cfg.n)
    return cfg.scale * z.reshape(cfg.n, cfg.n)


def random_pd(cfg: GenConfig) -> np.ndarray:
    """Hermitian positive definite matrix G G* + 1e-6 * scale * I."""
    G = random_ginibre(GenConfig(cfg.n, mix_seed(cfg.seed, _STREAM_PD), cfg.scale))
    P = G @ G.conj().T + 1e-6 * cfg.scale * np.eye(cfg.n)
    P = (P + P.conj().T) / 2
    lam_min = float(np.linalg.eigvalsh(P)[0])
    if lam_min <= 0:
        raise RuntimeError(f"positive definite construction failed: lambda_min = {lam_min}")
    return P


def _spectral_sqrt(P: np.ndarray) -> np.ndarray:
    res = herm_eig(P)
    w = np.maximum(res.eigenvalues, 0.0)
    V = res.eigenvectors
    return (V * np.sqrt(w)) @ V.conj().T


def random_sectorial(cfg: GenConfig, alpha: float) -> np.ndarray:
    """Accretive matrix whose numerical range has angular half-width alpha.

    Built as S (I + iT) S with S the square root of a random positive
    definite matrix and T Hermitian rescaled so max|eig(T)| = tan(alpha).
    Quadratic forms then satisfy <Xx,x> = ||y||^2 + i <Ty,y> with y = Sx,
    so the extreme argument over the numerical range is exactly
    arctan(max|eig(T)|) = alpha.
    """
    if not (0.0 <= alpha < math.pi / 2):
        raise ValueError(f"alpha must lie in [0, pi/2), got {alpha}")
    A = random_pd(GenConfig(cfg.n, mix_seed(cfg.seed, _STREAM_SECT_BASE), cfg.scale))
    if alpha == 0.0:
        return A
    G = random_ginibre(GenConfig(cfg.n, mix_seed(cfg.seed, _STREAM_SECT_TILT), 1.0))
    T = (G + G.conj().T) / 2
    peak = float(np.max(np.abs(np.linalg.eigvalsh(T))))
    if peak == 0.0:
        T = np.eye(cfg.n)
        peak = 1.0
    T = T * (math.tan(alpha) / peak)
    S = _spectral_sqrt(A)
    return S @ (np.eye(cfg.n) + 1j * T) @ S


def random_accretive_dissipative(cfg: GenConfig) -> np.ndarray:
    """Matrix A + iB with independent positive definite A and B."""
    A = random_pd(GenConfig(cfg.n, mix_seed(cfg.seed, _STREAM_AD_RE), cfg.scale))
    B = random_pd(GenConfig(cfg.n, mix_seed(cfg.seed, _STREAM_AD_IM), cfg.scale))
    return A + 1j * B


def random_unitary(cfg: GenConfig) -> np.ndarray:
    """Haar-like unitary from QR of a Ginibre draw with phase-fixed R."""
    G = random_ginibre(GenConfig(cfg.n, mix_seed(cfg.seed, _STREAM_UNITARY), 1.0))
    Q, R = np.linalg.qr(G)
    d = np.diag(R)
    phases = np.where(np.abs(d) > 0, d / np.where(np.abs(d) > 0, np.abs(d), 1.0), 1.0)
    return as_matrix(Q * phases[np.newaxis, :])
