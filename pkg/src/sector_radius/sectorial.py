"""Accretivity, sectoriality indices, and sector membership witnesses.

A matrix with numerical range in the open right half-plane (accretive)
has a sectoriality index: the largest |arg w| over its numerical range.
More generally a matrix belongs to the rotated sector class when some
unit-modulus z makes zX accretive; the minimal achievable index and the
witnessing rotation are what ``rotation_to_sector`` computes.

Indices are read off support points of the numerical range.  Seen from
the origin (which lies outside the range whenever a rotation exists),
the argument along the boundary has exactly one maximum arc and one
minimum arc, so a coarse sweep plus golden-section refinement finds the
extreme arguments reliably.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import DomainError, as_matrix, block2x2, cartesian_decompose, frobenius
from .radius import _support_points

__all__ = [
    "NotSectorialError",
    "SectorInfo",
    "sector_index",
    "rotation_to_sector",
    "tan_block",
    "sec_block",
]

# Strict accretivity margin on lambda_min(Re X), relative to ||X||_F.
ACCRETIVE_RTOL = 1e-12

# Indices this close to pi/2 are rejected: sec/tan factors blow up.
_BOUNDARY_MARGIN = 1e-10


class NotSectorialError(DomainError):
    """No rotation makes the numerical range fit in a proper sector."""


@dataclass(frozen=True)
class SectorInfo:
    """Sector data: accretivity, index, and the witnessing rotation.

    ``rotation_z`` has unit modulus and ``index_alpha`` is the angular
    half-width of a sector containing W(rotation_z * X).  For results of
    ``sector_index`` the rotation is 1 and the index is the plain
    sectoriality index of X itself.
    """

    accretive: bool
    index_alpha: float
    rotation_z: complex
    lambda_min_re: float


def _refine_arg_extremes(X: np.ndarray, samples: int) -> tuple[float, float]:
    """(min, max) argument over support points, refined by golden section."""
    thetas = 2.0 * math.pi * np.arange(samples) / samples
    args = np.angle(_support_points(X, thetas))
    step = 2.0 * math.pi / samples

    def signed(ths: np.ndarray) -> np.ndarray:
        # Lane 0 maximizes +arg, lane 1 maximizes -arg.
        vals = np.angle(_support_points(X, ths))
        return vals * np.array([1.0, -1.0])

    k_hi = int(np.argmax(args))
    k_lo = int(np.argmin(args))
    centers = np.array([thetas[k_hi], thetas[k_lo]])
    lo = centers - step
    hi = centers + step
    a = lo.copy()
    b = hi.copy()
    gr = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = b - gr * (b - a)
    x2 = a + gr * (b - a)
    f1 = signed(x1)
    f2 = signed(x2)
    best = np.maximum(np.array([args[k_hi], -args[k_lo]]), np.maximum(f1, f2))
    for _ in range(64):
        if (b - a).max() <= 1e-9:
            break
        right = f2 >= f1
        a = np.where(right, x1, a)
        b = np.where(right, b, x2)
        x_new = np.where(right, a + gr * (b - a), b - gr * (b - a))
        f_new = signed(x_new)
        x1, x2 = np.where(right, x2, x_new), np.where(right, x_new, x1)
        f1, f2 = np.where(right, f2, f_new), np.where(right, f_new, f1)
        best = np.maximum(best, f_new)
    return -float(best[1]), float(best[0])


def sector_index(X, boundary_samples: int = 256) -> SectorInfo:
    """Sectoriality index of an accretive matrix.

    The index is the largest |arg w| over sampled support points of the
    numerical range, refined by local search; every sampled point of
    W(X) lies in the sector of half-width index_alpha + 1e-9.  Raises
    DomainError when Re X is not positive definite.
    """
    X = as_matrix(X)
    A, _ = cartesian_decompose(X)
    lam_min = float(np.linalg.eigvalsh(A)[0])
    if lam_min <= ACCRETIVE_RTOL * frobenius(X):
        raise DomainError(
            f"matrix is not accretive: lambda_min(Re X) = {lam_min:.6e} "
            f"is not positive (threshold {ACCRETIVE_RTOL:g} * ||X||_F)"
        )
    a_min, a_max = _refine_arg_extremes(X, boundary_samples)
    index = max(a_max, -a_min, 0.0)
    if index >= math.pi / 2 - _BOUNDARY_MARGIN:
        raise NotSectorialError(
            f"sector index {index:.12f} is within {_BOUNDARY_MARGIN:g} of pi/2"
        )
    return SectorInfo(True, index, complex(1.0, 0.0), lam_min)


def rotation_to_sector(X, phi_samples: int = 4096, boundary_samples: int = 128) -> SectorInfo:
    """Unit-modulus z minimizing the sectoriality index of zX.

    Scans phi over [0, 2*pi) for rotations making e^{i*phi} X accretive,
    then shrinks the index exactly: rotating X shifts every argument of
    its numerical range by phi, so on the accretive arc the index of
    e^{i*phi} X is the maximum of two linear functions of phi and its
    minimum is half the angular width of the range, attained at the
    bisecting rotation.  Raises NotSectorialError when no rotation is
    accretive or the minimal index is within 1e-10 of pi/2.
    """
    X = as_matrix(X)
    if not isinstance(phi_samples, (int, np.integer)) or phi_samples < 8:
        raise ValueError(f"phi_samples must be an integer >= 8, got {phi_samples}")
    A, B = cartesian_decompose(X)
    threshold = ACCRETIVE_RTOL * frobenius(X)
    phis = 2.0 * math.pi * np.arange(phi_samples) / phi_samples
    c = np.cos(phis)
    s = np.sin(phis)
    H = c[:, None, None] * A - s[:, None, None] * B
    lam_min = np.linalg.eigvalsh(H)[:, 0]
    k_best = int(np.argmax(lam_min))
    if not (lam_min[k_best] > threshold):
        raise NotSectorialError(
            "not sectorial: no rotation z with Re(zX) positive definite "
            f"(best lambda_min over {phi_samples} rotations: {lam_min[k_best]:.6e})"
        )
    phi0 = float(phis[k_best])
    Y0 = np.exp(1j * phi0) * X
    a_min, a_max = _refine_arg_extremes(Y0, boundary_samples)
    index = max(0.0, (a_max - a_min) / 2.0)
    if index >= math.pi / 2 - _BOUNDARY_MARGIN:
        raise NotSectorialError(
            f"sector index {index:.12f} is within {_BOUNDARY_MARGIN:g} of pi/2"
        )
    phi_star = (phi0 - (a_max + a_min) / 2.0) % (2.0 * math.pi)
    z = complex(np.exp(1j * phi_star))
    Az = np.cos(phi_star) * A - np.sin(phi_star) * B
    lam_min_re = float(np.linalg.eigvalsh(Az)[0])
    accretive = bool(lam_min[0] > threshold)
    return SectorInfo(accretive, index, z, lam_min_re)


def _check_alpha(alpha: float) -> float:
    if not (0.0 <= alpha < math.pi / 2):
        raise ValueError(f"alpha must lie in [0, pi/2), got {alpha}")
    return float(alpha)


def tan_block(X, alpha: float) -> np.ndarray:
    """Block [[tan(a) Re X, Im X], [Im X, tan(a) Re X]].

    Positive semidefinite exactly when the numerical range of X lies in
    the sector of half-width a; callers test PSD with ``is_psd``.
    """
    alpha = _check_alpha(alpha)
    X = as_matrix(X)
    re, im = cartesian_decompose(X)
    t = math.tan(alpha) * re
    return block2x2(t, im, im, t)


def sec_block(X, alpha: float) -> np.ndarray:
    """Block [[sec(a) Re X, X], [X*, sec(a) Re X]].

    Positive semidefinite exactly when the numerical range of X lies in
    the sector of half-width a.
    """
    alpha = _check_alpha(alpha)
    X = as_matrix(X)
    re, _ = cartesian_decompose(X)
    d = (1.0 / math.cos(alpha)) * re
    return block2x2(d, X, X.conj().T, d)
