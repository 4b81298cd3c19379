"""Named, certified checks for the numerical radius inequality suite.

Every inequality the library verifies has a stable identifier.  A check
evaluates both sides as enclosing intervals: radius estimates contribute
[value, value + cert_error], norms and diagonal maxima enter as points
with a small relative pad, and sec/tan factors are evaluated at the
computed sector index inflated by a configurable margin so that sampling
slack in the index can never manufacture a false failure.  The verdict
is certified only when the intervals separate.

IDs whose statement involves the classical numerical radius always run
with the operator norm regardless of the requested norm; the remaining
IDs are parametric in any member of the shipped norm family.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from functools import reduce

import numpy as np

from .generator import GenConfig, mix_seed, random_accretive_dissipative, random_ginibre, random_pd, random_sectorial
from .linalg import DimensionError, as_matrix, cartesian_decompose, frobenius, hadamard
from .norms import FROBENIUS, OPERATOR, TRACE, NormSpec, evaluate_norm, schatten
from .radius import omega_n
from .report import CheckResult, IdSummary, Interval, SuiteReport
from .sectorial import NotSectorialError, SectorInfo, rotation_to_sector, sec_block, sector_index, tan_block

__all__ = [
    "InequalityId",
    "CheckContext",
    "DEFAULT_CONTEXT",
    "DEFAULT_DIMS",
    "DEFAULT_NORMS",
    "check_inequality",
    "run_suite",
    "tightness_scan",
    "explain",
    "all_ids",
]


class InequalityId(str, Enum):
    A_lower = "A_lower"
    A_upper = "A_upper"
    B_prod4 = "B_prod4"
    C_had2 = "C_had2"
    I_diag_psd = "I_diag_psd"
    II_prod_sec = "II_prod_sec"
    III_had_sec = "III_had_sec"
    VI_had_diag_min = "VI_had_diag_min"
    L1_norm_sec = "L1_norm_sec"
    L2_block_tan = "L2_block_tan"
    L3_block_sec = "L3_block_sec"
    P1_re_mono = "P1_re_mono"
    P2_im_tan = "P2_im_tan"
    P3_sec = "P3_sec"
    SA_omega_le_N = "SA_omega_le_N"
    T1_prod_sec_N = "T1_prod_sec_N"
    C_B2_sec2 = "C_B2_sec2"
    C_AD_prod2 = "C_AD_prod2"
    C_mprod = "C_mprod"
    C_secm = "C_secm"
    C_AD_m = "C_AD_m"
    H2_hermitian_had = "H2_hermitian_had"
    H3_had_sec_N = "H3_had_sec_N"
    C_C2_had = "C_C2_had"
    T_had_m = "T_had_m"
    C_AD_had_m = "C_AD_had_m"
    L6_had_diag_norm = "L6_had_diag_norm"
    L7_had_diag_omega = "L7_had_diag_omega"
    T_diag_x = "T_diag_x"
    T_diag_y = "T_diag_y"
    C_diag_min = "C_diag_min"
    C_AD_diag_min2 = "C_AD_diag_min2"
    T_onetan_min = "T_onetan_min"
    C_onetan = "C_onetan"


@dataclass(frozen=True)
class CheckContext:
    """Shared numerical settings for a batch of checks.

    ``alpha_inflation`` is added to every computed sector index before a
    sec or tan factor is taken, covering the index's own (one-sided)
    sampling error.  ``cert_floor`` relaxes only the certified gap of
    inner radius computations, never their soundness.
    """

    grid: int = 256
    refine_tol: float = 1e-10
    cert_floor: float = 0.0
    alpha_inflation: float = 1e-8
    phi_samples: int = 512
    boundary_samples: int = 128
    psd_tol: float = 1e-9
    m_fold: int = 3


DEFAULT_CONTEXT = CheckContext()
DEFAULT_DIMS = (2, 3, 4, 5, 6)
DEFAULT_NORMS = (OPERATOR, TRACE, FROBENIUS, schatten(3))

_NORM_PAD = 1e-12
_DIAG_PAD = 1e-15


class Inapplicable(Exception):
    """A matrix-property precondition of the check does not hold."""


# --- interval building blocks -------------------------------------------


def _omega_iv(spec: NormSpec, X: np.ndarray, ctx: CheckContext) -> Interval:
    est = omega_n(spec, X, grid=ctx.grid, refine_tol=ctx.refine_tol, cert_floor=ctx.cert_floor)
    return Interval(est.value, est.value + est.cert_error)


def _norm_iv(spec: NormSpec, X: np.ndarray) -> Interval:
    return Interval.point(evaluate_norm(spec, X), rel=_NORM_PAD)


def _class_info(X: np.ndarray, ctx: CheckContext) -> SectorInfo:
    try:
        return rotation_to_sector(X, ctx.phi_samples, boundary_samples=ctx.boundary_samples)
    except NotSectorialError as exc:
        raise Inapplicable(f"input is not sectorial: {exc}") from None


def _accretive_info(X: np.ndarray, ctx: CheckContext) -> SectorInfo:
    try:
        return sector_index(X, boundary_samples=ctx.boundary_samples)
    except (NotSectorialError, ValueError) as exc:
        raise Inapplicable(f"input is not accretive sectorial: {exc}") from None


def _inflated(alpha: float, ctx: CheckContext) -> float:
    a = alpha + ctx.alpha_inflation
    if a >= math.pi / 2:
        raise Inapplicable(f"inflated sector index {a:.12f} reaches pi/2")
    return a


def _sec_iv(alpha: float, ctx: CheckContext) -> Interval:
    return Interval.point(1.0 / math.cos(_inflated(alpha, ctx)), rel=_NORM_PAD)


def _tan_iv(alpha: float, ctx: CheckContext) -> Interval:
    return Interval.point(math.tan(_inflated(alpha, ctx)), rel=_NORM_PAD)


def _one_plus_tan_iv(alpha: float, ctx: CheckContext) -> Interval:
    return Interval.point(1.0 + math.tan(_inflated(alpha, ctx)), rel=_NORM_PAD)


def _power_iv(base: Interval, m: int) -> Interval:
    return reduce(lambda a, b: a * b, [base] * m)


def _is_hermitian(X: np.ndarray) -> bool:
    return float(np.linalg.norm(X - X.conj().T)) <= 1e-12 * frobenius(X)


def _require_accretive_dissipative(X: np.ndarray, which: str) -> None:
    re, im = cartesian_decompose(X)
    thr = 1e-12 * frobenius(X)
    lam_re = float(np.linalg.eigvalsh(re)[0])
    lam_im = float(np.linalg.eigvalsh(im)[0])
    if lam_re <= thr or lam_im <= thr:
        raise Inapplicable(
            f"{which} is not accretive-dissipative: lambda_min(Re) = {lam_re:.3e}, "
            f"lambda_min(Im) = {lam_im:.3e}"
        )


def _require_pd(X: np.ndarray, which: str) -> None:
    if not _is_hermitian(X):
        raise Inapplicable(f"{which} is not Hermitian")
    lam = float(np.linalg.eigvalsh((X + X.conj().T) / 2)[0])
    if lam <= 1e-12 * frobenius(X):
        raise Inapplicable(f"{which} is not positive definite: lambda_min = {lam:.3e}")


def _diag_abs_max_iv(X: np.ndarray) -> Interval:
    return Interval.point(float(np.max(np.abs(np.diag(X)))), rel=_DIAG_PAD)


def _diag_re_max_iv(X: np.ndarray) -> Interval:
    return Interval.point(float(np.max(np.diag(X).real)), rel=_DIAG_PAD)


def _psd_comparison(block: np.ndarray, ctx: CheckContext) -> tuple[Interval, Interval, str]:
    lam_min = float(np.linalg.eigvalsh(block)[0])
    scale = max(1.0, frobenius(block))
    lhs = Interval.point(-lam_min, abs_=1e-12 * scale)
    rhs = Interval.point(ctx.psd_tol * scale)
    return lhs, rhs, "PSD test: lhs is -lambda_min(block), rhs the tolerance"


# --- per-identifier checks ----------------------------------------------


def _chk_a_lower(mats, spec, ctx):
    (X,) = mats
    return _norm_iv(spec, X).scale(0.5), _omega_iv(spec, X, ctx), ""


def _chk_a_upper(mats, spec, ctx):
    (X,) = mats
    return _omega_iv(spec, X, ctx), _norm_iv(spec, X), ""


def _chk_b_prod4(mats, spec, ctx):
    X, Y = mats
    lhs = _omega_iv(spec, X @ Y, ctx)
    rhs = (_omega_iv(spec, X, ctx) * _omega_iv(spec, Y, ctx)).scale(4.0)
    return lhs, rhs, ""


def _chk_c_had2(mats, spec, ctx):
    X, Y = mats
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    rhs = (_omega_iv(spec, X, ctx) * _omega_iv(spec, Y, ctx)).scale(2.0)
    return lhs, rhs, ""


def _chk_i_diag_psd(mats, spec, ctx):
    A, X = mats
    note = ""
    psd_ok = False
    if _is_hermitian(A):
        lam = float(np.linalg.eigvalsh((A + A.conj().T) / 2)[0])
        psd_ok = lam >= -1e-10 * max(1.0, frobenius(A))
    if not psd_ok:
        note = "hypothesis violated: first factor is not PSD, bound not guaranteed"
    lhs = _omega_iv(spec, hadamard(A, X), ctx)
    rhs = _diag_re_max_iv(A) * _omega_iv(spec, X, ctx)
    return lhs, rhs, note


def _sectorial_pair_rhs(mats, spec, ctx):
    X, Y = mats
    sx = _class_info(X, ctx)
    sy = _class_info(Y, ctx)
    return _sec_iv(sx.index_alpha, ctx) * _sec_iv(sy.index_alpha, ctx)


def _chk_ii_prod_sec(mats, spec, ctx):
    X, Y = mats
    factor = _sectorial_pair_rhs(mats, spec, ctx)
    lhs = _omega_iv(spec, X @ Y, ctx)
    rhs = factor * _omega_iv(spec, X, ctx) * _omega_iv(spec, Y, ctx)
    return lhs, rhs, ""


def _chk_iii_had_sec(mats, spec, ctx):
    X, Y = mats
    factor = _sectorial_pair_rhs(mats, spec, ctx)
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    rhs = factor * _omega_iv(spec, X, ctx) * _omega_iv(spec, Y, ctx)
    return lhs, rhs, ""


def _chk_vi_had_diag_min(mats, spec, ctx):
    X, Y = mats
    factor = _sectorial_pair_rhs(mats, spec, ctx)
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    via_x = _diag_abs_max_iv(X) * _omega_iv(spec, Y, ctx)
    via_y = _diag_abs_max_iv(Y) * _omega_iv(spec, X, ctx)
    rhs = factor * Interval.min_of(via_x, via_y)
    return lhs, rhs, ""


def _chk_l1_norm_sec(mats, spec, ctx):
    (X,) = mats
    info = _class_info(X, ctx)
    zX = info.rotation_z * X
    re, _ = cartesian_decompose(zX)
    lhs = _norm_iv(spec, zX)
    rhs = _sec_iv(info.index_alpha, ctx) * _norm_iv(spec, re)
    return lhs, rhs, ""


def _chk_l2_block_tan(mats, spec, ctx):
    (X,) = mats
    info = _class_info(X, ctx)
    block = tan_block(info.rotation_z * X, _inflated(info.index_alpha, ctx))
    return _psd_comparison(block, ctx)


def _chk_l3_block_sec(mats, spec, ctx):
    (X,) = mats
    info = _class_info(X, ctx)
    block = sec_block(info.rotation_z * X, _inflated(info.index_alpha, ctx))
    return _psd_comparison(block, ctx)


def _chk_p1_re_mono(mats, spec, ctx):
    (X,) = mats
    re, _ = cartesian_decompose(X)
    return _omega_iv(spec, re, ctx), _omega_iv(spec, X, ctx), ""


def _chk_p2_im_tan(mats, spec, ctx):
    (X,) = mats
    info = _class_info(X, ctx)
    re, im = cartesian_decompose(info.rotation_z * X)
    lhs = _omega_iv(spec, im, ctx)
    rhs = _tan_iv(info.index_alpha, ctx) * _omega_iv(spec, re, ctx)
    return lhs, rhs, ""


def _chk_p3_sec(mats, spec, ctx):
    (X,) = mats
    info = _class_info(X, ctx)
    zX = info.rotation_z * X
    re, _ = cartesian_decompose(zX)
    lhs = _omega_iv(spec, zX, ctx)
    rhs = _sec_iv(info.index_alpha, ctx) * _omega_iv(spec, re, ctx)
    return lhs, rhs, ""


def _chk_sa_omega_le_n(mats, spec, ctx):
    (X,) = mats
    return _omega_iv(spec, X, ctx), _norm_iv(spec, X), ""


def _chk_t1_prod_sec_n(mats, spec, ctx):
    return _chk_ii_prod_sec(mats, spec, ctx)


def _chk_c_b2_sec2(mats, spec, ctx):
    X, Y = mats
    sx = _class_info(X, ctx)
    sy = _class_info(Y, ctx)
    sec = _sec_iv(max(sx.index_alpha, sy.index_alpha), ctx)
    lhs = _omega_iv(spec, X @ Y, ctx)
    rhs = sec * sec * _omega_iv(spec, X, ctx) * _omega_iv(spec, Y, ctx)
    return lhs, rhs, ""


def _chk_c_ad_prod2(mats, spec, ctx):
    X, Y = mats
    _require_accretive_dissipative(X, "first input")
    _require_accretive_dissipative(Y, "second input")
    lhs = _omega_iv(spec, X @ Y, ctx)
    rhs = (_omega_iv(spec, X, ctx) * _omega_iv(spec, Y, ctx)).scale(2.0)
    return lhs, rhs, ""


def _chk_c_mprod(mats, spec, ctx):
    infos = [_class_info(M, ctx) for M in mats]
    factor = reduce(lambda a, b: a * b, (_sec_iv(i.index_alpha, ctx) for i in infos))
    lhs = _omega_iv(spec, reduce(np.matmul, mats), ctx)
    rhs = reduce(lambda a, b: a * b, (_omega_iv(spec, M, ctx) for M in mats), factor)
    return lhs, rhs, ""


def _chk_c_secm(mats, spec, ctx):
    infos = [_class_info(M, ctx) for M in mats]
    sec = _sec_iv(max(i.index_alpha for i in infos), ctx)
    lhs = _omega_iv(spec, reduce(np.matmul, mats), ctx)
    rhs = reduce(lambda a, b: a * b, (_omega_iv(spec, M, ctx) for M in mats), _power_iv(sec, len(mats)))
    return lhs, rhs, ""


def _chk_c_ad_m(mats, spec, ctx):
    for k, M in enumerate(mats):
        _require_accretive_dissipative(M, f"input {k}")
    factor = Interval.point(2.0 ** (len(mats) / 2.0), rel=_NORM_PAD)
    lhs = _omega_iv(spec, reduce(np.matmul, mats), ctx)
    rhs = reduce(lambda a, b: a * b, (_omega_iv(spec, M, ctx) for M in mats), factor)
    return lhs, rhs, ""


def _chk_h2_hermitian_had(mats, spec, ctx):
    X, Y = mats
    if not (_is_hermitian(X) or _is_hermitian(Y)):
        raise Inapplicable("neither input is Hermitian")
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    rhs = _omega_iv(spec, X, ctx) * _omega_iv(spec, Y, ctx)
    return lhs, rhs, ""


def _chk_h3_had_sec_n(mats, spec, ctx):
    return _chk_iii_had_sec(mats, spec, ctx)


def _chk_c_c2_had(mats, spec, ctx):
    X, Y = mats
    sx = _class_info(X, ctx)
    sy = _class_info(Y, ctx)
    sec = _sec_iv(max(sx.index_alpha, sy.index_alpha), ctx)
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    rhs = sec * sec * _omega_iv(spec, X, ctx) * _omega_iv(spec, Y, ctx)
    return lhs, rhs, ""


def _chk_t_had_m(mats, spec, ctx):
    infos = [_class_info(M, ctx) for M in mats]
    factor = reduce(lambda a, b: a * b, (_sec_iv(i.index_alpha, ctx) for i in infos))
    lhs = _omega_iv(spec, reduce(hadamard, mats), ctx)
    rhs = reduce(lambda a, b: a * b, (_omega_iv(spec, M, ctx) for M in mats), factor)
    return lhs, rhs, ""


def _chk_c_ad_had_m(mats, spec, ctx):
    for k, M in enumerate(mats):
        _require_accretive_dissipative(M, f"input {k}")
    factor = Interval.point(2.0 ** (len(mats) / 2.0), rel=_NORM_PAD)
    lhs = _omega_iv(spec, reduce(hadamard, mats), ctx)
    rhs = reduce(lambda a, b: a * b, (_omega_iv(spec, M, ctx) for M in mats), factor)
    return lhs, rhs, ""


def _chk_l6_had_diag_norm(mats, spec, ctx):
    X, Y = mats
    _require_pd(Y, "second input")
    lhs = _norm_iv(spec, hadamard(X, Y))
    rhs = _diag_re_max_iv(Y) * _norm_iv(spec, X)
    return lhs, rhs, ""


def _chk_l7_had_diag_omega(mats, spec, ctx):
    X, Y = mats
    _require_pd(Y, "second input")
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    rhs = _diag_re_max_iv(Y) * _omega_iv(spec, X, ctx)
    return lhs, rhs, ""


def _chk_t_diag_x(mats, spec, ctx):
    X, Y = mats
    factor = _sectorial_pair_rhs(mats, spec, ctx)
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    rhs = factor * _diag_abs_max_iv(X) * _omega_iv(spec, Y, ctx)
    return lhs, rhs, ""


def _chk_t_diag_y(mats, spec, ctx):
    X, Y = mats
    factor = _sectorial_pair_rhs(mats, spec, ctx)
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    rhs = factor * _diag_abs_max_iv(Y) * _omega_iv(spec, X, ctx)
    return lhs, rhs, ""


def _chk_c_diag_min(mats, spec, ctx):
    X, Y = mats
    factor = _sectorial_pair_rhs(mats, spec, ctx)
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    via_x = _diag_abs_max_iv(X) * _omega_iv(spec, Y, ctx)
    via_y = _diag_abs_max_iv(Y) * _omega_iv(spec, X, ctx)
    rhs = factor * Interval.min_of(via_x, via_y)
    return lhs, rhs, ""


def _chk_c_ad_diag_min2(mats, spec, ctx):
    X, Y = mats
    _require_accretive_dissipative(X, "first input")
    _require_accretive_dissipative(Y, "second input")
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    via_x = _diag_abs_max_iv(X) * _omega_iv(spec, Y, ctx)
    via_y = _diag_abs_max_iv(Y) * _omega_iv(spec, X, ctx)
    rhs = Interval.min_of(via_x, via_y).scale(2.0)
    return lhs, rhs, ""


def _chk_t_onetan_min(mats, spec, ctx):
    X, Y = mats
    ax = _accretive_info(X, ctx)
    ay = _accretive_info(Y, ctx)
    re_x, _ = cartesian_decompose(X)
    re_y, _ = cartesian_decompose(Y)
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    via_x = _one_plus_tan_iv(ax.index_alpha, ctx) * _omega_iv(spec, re_x, ctx) * _omega_iv(spec, Y, ctx)
    via_y = _one_plus_tan_iv(ay.index_alpha, ctx) * _omega_iv(spec, X, ctx) * _omega_iv(spec, re_y, ctx)
    return lhs, Interval.min_of(via_x, via_y), ""


def _chk_c_onetan(mats, spec, ctx):
    X, Y = mats
    ax = _accretive_info(X, ctx)
    ay = _accretive_info(Y, ctx)
    factor = _one_plus_tan_iv(max(ax.index_alpha, ay.index_alpha), ctx)
    lhs = _omega_iv(spec, hadamard(X, Y), ctx)
    rhs = factor * _omega_iv(spec, X, ctx) * _omega_iv(spec, Y, ctx)
    return lhs, rhs, ""


# --- registry -------------------------------------------------------------


@dataclass(frozen=True)
class IdInfo:
    id: InequalityId
    arity: int  # 0 means m-fold (any arity >= 2; suites use CheckContext.m_fold)
    profile: str
    classical: bool
    comparable: bool
    statement: str
    hypotheses: str
    fn: object


def _info(id, arity, profile, classical, comparable, statement, hypotheses, fn):
    return IdInfo(id, arity, profile, classical, comparable, statement, hypotheses, fn)


_I = InequalityId
REGISTRY: dict[InequalityId, IdInfo] = {
    info.id: info
    for info in (
        _info(_I.A_lower, 1, "any", True, True,
              "0.5 * ||X|| <= w(X)",
              "any square X; operator norm", _chk_a_lower),
        _info(_I.A_upper, 1, "any", True, True,
              "w(X) <= ||X||",
              "any square X; operator norm", _chk_a_upper),
        _info(_I.B_prod4, 2, "any2", True, True,
              "w(X Y) <= 4 w(X) w(Y)",
              "any square X, Y; the constant 4 is sharp", _chk_b_prod4),
        _info(_I.C_had2, 2, "any2", True, True,
              "w(X o Y) <= 2 w(X) w(Y)",
              "any square X, Y; the constant 2 is sharp", _chk_c_had2),
        _info(_I.I_diag_psd, 2, "pd_any", True, True,
              "w(A o X) <= (max_j a_jj) w(X)",
              "A positive semidefinite (enforced by suite generation; the check "
              "still evaluates on other inputs and can certify failure)", _chk_i_diag_psd),
        _info(_I.II_prod_sec, 2, "sectorial2", True, True,
              "w(X Y) <= sec(a1) sec(a2) w(X) w(Y)",
              "X, Y in rotated sector classes with indices a1, a2", _chk_ii_prod_sec),
        _info(_I.III_had_sec, 2, "sectorial2", True, True,
              "w(X o Y) <= sec(a1) sec(a2) w(X) w(Y)",
              "X, Y in rotated sector classes with indices a1, a2", _chk_iii_had_sec),
        _info(_I.VI_had_diag_min, 2, "sectorial2", True, True,
              "w(X o Y) <= sec(a1) sec(a2) min(max_j |x_jj| w(Y), max_j |y_jj| w(X))",
              "X, Y in rotated sector classes with indices a1, a2", _chk_vi_had_diag_min),
        _info(_I.L1_norm_sec, 1, "sectorial", False, True,
              "N(zX) <= sec(a) N(Re(zX))",
              "z the witnessing rotation, a the class index of X", _chk_l1_norm_sec),
        _info(_I.L2_block_tan, 1, "sectorial", False, False,
              "[[tan(a) Re(zX), Im(zX)], [Im(zX), tan(a) Re(zX)]] >= 0",
              "z the witnessing rotation, a the class index of X", _chk_l2_block_tan),
        _info(_I.L3_block_sec, 1, "sectorial", False, False,
              "[[sec(a) Re(zX), zX], [(zX)*, sec(a) Re(zX)]] >= 0",
              "z the witnessing rotation, a the class index of X", _chk_l3_block_sec),
        _info(_I.P1_re_mono, 1, "any", False, True,
              "w_N(Re X) <= w_N(X)",
              "any square X", _chk_p1_re_mono),
        _info(_I.P2_im_tan, 1, "sectorial", False, True,
              "w_N(Im(zX)) <= tan(a) w_N(Re(zX))",
              "z the witnessing rotation, a the class index of X", _chk_p2_im_tan),
        _info(_I.P3_sec, 1, "sectorial", False, True,
              "w_N(zX) <= sec(a) w_N(Re(zX))",
              "z the witnessing rotation, a the class index of X", _chk_p3_sec),
        _info(_I.SA_omega_le_N, 1, "any", False, True,
              "w_N(X) <= N(X)",
              "any square X", _chk_sa_omega_le_n),
        _info(_I.T1_prod_sec_N, 2, "sectorial2", False, True,
              "w_N(X Y) <= sec(a1) sec(a2) w_N(X) w_N(Y)",
              "X, Y in rotated sector classes with indices a1, a2", _chk_t1_prod_sec_n),
        _info(_I.C_B2_sec2, 2, "sectorial2_same", False, True,
              "w_N(X Y) <= sec(a)^2 w_N(X) w_N(Y)",
              "X, Y in a common rotated sector class of index a", _chk_c_b2_sec2),
        _info(_I.C_AD_prod2, 2, "accdis2", False, True,
              "w_N(X Y) <= 2 w_N(X) w_N(Y)",
              "X, Y accretive-dissipative", _chk_c_ad_prod2),
        _info(_I.C_mprod, 0, "sectorial_m", False, True,
              "w_N(X_1 ... X_m) <= (prod_j sec(a_j)) prod_j w_N(X_j)",
              "each X_j in a rotated sector class with index a_j", _chk_c_mprod),
        _info(_I.C_secm, 0, "sectorial_m_same", False, True,
              "w_N(X_1 ... X_m) <= sec(a)^m prod_j w_N(X_j)",
              "all X_j in a common rotated sector class of index a", _chk_c_secm),
        _info(_I.C_AD_m, 0, "accdis_m", False, True,
              "w_N(X_1 ... X_m) <= 2^(m/2) prod_j w_N(X_j)",
              "each X_j accretive-dissipative", _chk_c_ad_m),
        _info(_I.H2_hermitian_had, 2, "herm_any", False, True,
              "w_N(X o Y) <= w_N(X) w_N(Y)",
              "at least one of X, Y Hermitian", _chk_h2_hermitian_had),
        _info(_I.H3_had_sec_N, 2, "sectorial2", False, True,
              "w_N(X o Y) <= sec(a1) sec(a2) w_N(X) w_N(Y)",
              "X, Y in rotated sector classes with indices a1, a2", _chk_h3_had_sec_n),
        _info(_I.C_C2_had, 2, "sectorial2_same", False, True,
              "w_N(X o Y) <= sec(a)^2 w_N(X) w_N(Y)",
              "X, Y in a common rotated sector class of index a", _chk_c_c2_had),
        _info(_I.T_had_m, 0, "sectorial_m", False, True,
              "w_N(X_1 o ... o X_m) <= (prod_j sec(a_j)) prod_j w_N(X_j)",
              "each X_j in a rotated sector class with index a_j", _chk_t_had_m),
        _info(_I.C_AD_had_m, 0, "accdis_m", False, True,
              "w_N(X_1 o ... o X_m) <= 2^(m/2) prod_j w_N(X_j)",
              "each X_j accretive-dissipative", _chk_c_ad_had_m),
        _info(_I.L6_had_diag_norm, 2, "any_pd", False, True,
              "N(X o Y) <= (max_i y_ii) N(X)",
              "Y positive definite", _chk_l6_had_diag_norm),
        _info(_I.L7_had_diag_omega, 2, "any_pd", False, True,
              "w_N(X o Y) <= (max_i y_ii) w_N(X)",
              "Y positive definite", _chk_l7_had_diag_omega),
        _info(_I.T_diag_x, 2, "sectorial2", False, True,
              "w_N(X o Y) <= sec(a1) sec(a2) (max_j |x_jj|) w_N(Y)",
              "X, Y in rotated sector classes with indices a1, a2", _chk_t_diag_x),
        _info(_I.T_diag_y, 2, "sectorial2", False, True,
              "w_N(X o Y) <= sec(a1) sec(a2) (max_j |y_jj|) w_N(X)",
              "X, Y in rotated sector classes with indices a1, a2", _chk_t_diag_y),
        _info(_I.C_diag_min, 2, "sectorial2", False, True,
              "w_N(X o Y) <= sec(a1) sec(a2) min(max_j |x_jj| w_N(Y), max_j |y_jj| w_N(X))",
              "X, Y in rotated sector classes with indices a1, a2", _chk_c_diag_min),
        _info(_I.C_AD_diag_min2, 2, "accdis2", False, True,
              "w_N(X o Y) <= 2 min(max_j |x_jj| w_N(Y), max_j |y_jj| w_N(X))",
              "X, Y accretive-dissipative", _chk_c_ad_diag_min2),
        _info(_I.T_onetan_min, 2, "accretive2", False, True,
              "w_N(X o Y) <= min((1 + tan a1) w_N(Re X) w_N(Y), (1 + tan a2) w_N(X) w_N(Re Y))",
              "X, Y accretive with sector indices a1, a2 (ranges inside the "
              "sectors themselves, no rotation)", _chk_t_onetan_min),
        _info(_I.C_onetan, 2, "accretive2_same", False, True,
              "w_N(X o Y) <= (1 + tan a) w_N(X) w_N(Y), a = max(a1, a2)",
              "X, Y accretive with sector indices a1, a2", _chk_c_onetan),
    )
}


def all_ids() -> list[InequalityId]:
    return list(REGISTRY.keys())


def check_inequality(
    id: InequalityId | str,
    inputs,
    norm: NormSpec = OPERATOR,
    *,
    context: CheckContext = DEFAULT_CONTEXT,
    seed: int | None = None,
) -> CheckResult:
    """Evaluate one inequality on explicit inputs with certified intervals.

    Inputs whose matrix properties violate the identifier's hypotheses
    (except for I_diag_psd, which evaluates regardless so that necessity
    of its hypothesis can be demonstrated) yield verdict "inapplicable".
    Wrong arity or mismatched dimensions raise instead: those are caller
    errors, not data properties.
    """
    ineq = InequalityId(id)
    info = REGISTRY[ineq]
    mats = [as_matrix(m, f"input {k}") for k, m in enumerate(inputs)]
    if info.arity == 0:
        if len(mats) < 2:
            raise ValueError(f"{ineq.value} needs at least 2 inputs, got {len(mats)}")
    elif len(mats) != info.arity:
        raise ValueError(f"{ineq.value} needs exactly {info.arity} input(s), got {len(mats)}")
    n = mats[0].shape[0]
    for k, M in enumerate(mats[1:], start=1):
        if M.shape[0] != n:
            raise DimensionError(f"input {k} has dimension {M.shape[0]}, expected {n}")
    spec_eff = OPERATOR if info.classical else norm
    try:
        lhs, rhs, note = info.fn(mats, spec_eff, context)
    except Inapplicable as exc:
        return CheckResult.inapplicable(ineq.value, str(exc), seed=seed, norm=spec_eff.label, dim=n)
    return CheckResult.from_comparison(
        ineq.value, lhs, rhs, seed=seed, norm=spec_eff.label, dim=n, note=note
    )


# --- input generation ------------------------------------------------------

_ALPHA_MAX = 1.4


def _uniform(seed: int, tag: int, lo: float, hi: float) -> float:
    rng = np.random.Generator(np.random.Philox(key=mix_seed(seed, tag)))
    return lo + (hi - lo) * float(rng.random())


def _gin(n: int, seed: int, tag: int) -> np.ndarray:
    return random_ginibre(GenConfig(n, mix_seed(seed, tag)))


def _rotated_sectorial(n: int, seed: int, tag: int, alpha: float) -> np.ndarray:
    X = random_sectorial(GenConfig(n, mix_seed(seed, tag)), alpha)
    phi = _uniform(seed, tag + 40, 0.0, 2.0 * math.pi)
    return np.exp(1j * phi) * X


def generate_inputs(profile: str, n: int, seed: int, m_fold: int = 3) -> list[np.ndarray]:
    """Deterministic conforming inputs for one trial of a given profile."""
    if profile == "any":
        return [_gin(n, seed, 1)]
    if profile == "any2":
        return [_gin(n, seed, 1), _gin(n, seed, 2)]
    if profile == "pd_any":
        return [random_pd(GenConfig(n, mix_seed(seed, 1))), _gin(n, seed, 2)]
    if profile == "any_pd":
        return [_gin(n, seed, 1), random_pd(GenConfig(n, mix_seed(seed, 2)))]
    if profile == "herm_any":
        G = _gin(n, seed, 2)
        return [_gin(n, seed, 1), (G + G.conj().T) / 2]
    if profile == "sectorial":
        return [_rotated_sectorial(n, seed, 1, _uniform(seed, 31, 0.0, _ALPHA_MAX))]
    if profile == "sectorial2":
        return [
            _rotated_sectorial(n, seed, 1, _uniform(seed, 31, 0.0, _ALPHA_MAX)),
            _rotated_sectorial(n, seed, 2, _uniform(seed, 32, 0.0, _ALPHA_MAX)),
        ]
    if profile == "sectorial2_same":
        alpha = _uniform(seed, 31, 0.0, _ALPHA_MAX)
        return [_rotated_sectorial(n, seed, 1, alpha), _rotated_sectorial(n, seed, 2, alpha)]
    if profile == "sectorial_m":
        return [
            _rotated_sectorial(n, seed, 1 + j, _uniform(seed, 31 + j, 0.0, _ALPHA_MAX))
            for j in range(m_fold)
        ]
    if profile == "sectorial_m_same":
        alpha = _uniform(seed, 31, 0.0, _ALPHA_MAX)
        return [_rotated_sectorial(n, seed, 1 + j, alpha) for j in range(m_fold)]
    if profile == "accretive2":
        return [
            random_sectorial(GenConfig(n, mix_seed(seed, 1)), _uniform(seed, 31, 0.0, _ALPHA_MAX)),
            random_sectorial(GenConfig(n, mix_seed(seed, 2)), _uniform(seed, 32, 0.0, _ALPHA_MAX)),
        ]
    if profile == "accretive2_same":
        alpha = _uniform(seed, 31, 0.0, _ALPHA_MAX)
        return [
            random_sectorial(GenConfig(n, mix_seed(seed, 1)), alpha),
            random_sectorial(GenConfig(n, mix_seed(seed, 2)), alpha),
        ]
    if profile == "accdis2":
        return [
            random_accretive_dissipative(GenConfig(n, mix_seed(seed, 1))),
            random_accretive_dissipative(GenConfig(n, mix_seed(seed, 2))),
        ]
    if profile == "accdis_m":
        return [
            random_accretive_dissipative(GenConfig(n, mix_seed(seed, 1 + j)))
            for j in range(m_fold)
        ]
    raise ValueError(f"unknown input profile {profile!r}")


# --- suite runner -----------------------------------------------------------


def _normalize_ids(ids) -> list[InequalityId]:
    if ids == "all" or ids is None:
        return all_ids()
    wanted = [InequalityId(i) for i in ids]
    if not wanted:
        raise ValueError("empty id set")
    # Preserve registry order, drop duplicates.
    wanted_set = set(wanted)
    return [i for i in all_ids() if i in wanted_set]


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("SECTOR_RADIUS_THREADS", "").strip()
    return max(1, int(env)) if env else 1


def run_suite(
    ids,
    trials: int,
    dims,
    norms,
    seed: int,
    *,
    context: CheckContext = DEFAULT_CONTEXT,
    threads: int | None = None,
) -> SuiteReport:
    """Randomized certified verification over every requested identifier.

    Per identifier, ``trials`` independent inputs are generated; trial t
    uses dimension dims[t mod len(dims)] and norm norms[(t div len(dims))
    mod len(norms)], so every dimension/norm combination is exercised.
    The report is a deterministic function of the arguments (wall time
    aside).
    """
    id_list = _normalize_ids(ids)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    dims = [int(d) for d in dims]
    if not dims or any(d < 1 for d in dims):
        raise ValueError(f"dims must be positive integers, got {dims}")
    norm_list = list(norms)
    if not norm_list:
        raise ValueError("empty norm set")
    nthreads = _thread_count(threads)

    tasks = []
    for idx, ineq in enumerate(id_list):
        profile = REGISTRY[ineq].profile
        for t in range(trials):
            dim = dims[t % len(dims)]
            norm = norm_list[(t // len(dims)) % len(norm_list)]
            tseed = mix_seed(seed, 1000 + idx, t)
            tasks.append((ineq, profile, dim, norm, tseed))

    def run_one(task):
        ineq, profile, dim, norm, tseed = task
        mats = generate_inputs(profile, dim, tseed, context.m_fold)
        return check_inequality(ineq, mats, norm, context=context, seed=tseed)

    start = time.perf_counter()
    if nthreads > 1:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            results = list(pool.map(run_one, tasks))
    else:
        results = [run_one(t) for t in tasks]
    wall = time.perf_counter() - start

    per_id = {i.value: IdSummary() for i in id_list}
    for r in results:
        per_id[r.id].add(r)
    config = {
        "ids": [i.value for i in id_list],
        "trials": trials,
        "dims": dims,
        "norms": [n.label for n in norm_list],
        "seed": seed,
        "grid": context.grid,
        "refine_tol": context.refine_tol,
        "cert_floor": context.cert_floor,
        "alpha_inflation": context.alpha_inflation,
        "m_fold": context.m_fold,
        "threads": nthreads,
        "mode": "verify",
    }
    return SuiteReport(config=config, per_id=per_id, wall_time_s=wall, results=results)


# --- tightness --------------------------------------------------------------

_VOLTERRA = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=np.complex128)

_FIXTURES: dict[InequalityId, list[tuple]] = {
    InequalityId.A_lower: [(_VOLTERRA,)],
    InequalityId.A_upper: [(np.diag([1.0, 1.0j]).astype(np.complex128),)],
    InequalityId.B_prod4: [(_VOLTERRA, _VOLTERRA.T.copy())],
    InequalityId.H2_hermitian_had: [
        (np.diag([1.0, 0.0]).astype(np.complex128), np.diag([1.0, 0.0]).astype(np.complex128))
    ],
}


def tightness_scan(
    id: InequalityId | str,
    trials: int,
    seed: int,
    *,
    context: CheckContext = DEFAULT_CONTEXT,
) -> SuiteReport:
    """Maximum lhs/rhs ratio over random inputs plus extremal fixtures."""
    ineq = InequalityId(id)
    info = REGISTRY[ineq]
    if not info.comparable:
        raise ValueError(f"{ineq.value} is a positivity check, not a two-sided comparison")
    if trials < 0:
        raise ValueError(f"trials must be >= 0, got {trials}")
    dims = (2, 3, 4)
    results = []
    for t in range(trials):
        dim = dims[t % len(dims)]
        norm = DEFAULT_NORMS[(t // len(dims)) % len(DEFAULT_NORMS)]
        tseed = mix_seed(seed, 77, t)
        mats = generate_inputs(info.profile, dim, tseed, context.m_fold)
        results.append(check_inequality(ineq, mats, norm, context=context, seed=tseed))
    for fixture in _FIXTURES.get(ineq, []):
        for norm in DEFAULT_NORMS:
            r = check_inequality(ineq, list(fixture), norm, context=context, seed=None)
            results.append(replace(r, note=(r.note + "; " if r.note else "") + "fixture"))
    per_id = {ineq.value: IdSummary()}
    for r in results:
        per_id[ineq.value].add(r)
    config = {
        "ids": [ineq.value],
        "trials": trials,
        "dims": list(dims),
        "norms": [n.label for n in DEFAULT_NORMS],
        "seed": seed,
        "mode": "tightness",
    }
    return SuiteReport(config=config, per_id=per_id, wall_time_s=0.0, results=results)


def explain(id: InequalityId | str) -> str:
    """Human-readable statement and hypotheses for one identifier."""
    ineq = InequalityId(id)
    info = REGISTRY[ineq]
    norm_mode = "classical numerical radius (operator norm)" if info.classical else "any shipped norm N"
    arity = "m >= 2 inputs" if info.arity == 0 else f"{info.arity} input(s)"
    return (
        f"{ineq.value}\n"
        f"  statement : {info.statement}\n"
        f"  hypotheses: {info.hypotheses}\n"
        f"  norm      : {norm_mode}\n"
        f"  inputs    : {arity} (suite profile: {info.profile})\n"
    )
