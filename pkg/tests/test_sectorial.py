import math

import numpy as np
import pytest

from sector_radius.generator import GenConfig, random_pd, random_sectorial
from sector_radius.linalg import DomainError, is_psd
from sector_radius.norms import FROBENIUS, OPERATOR, TRACE, evaluate_norm, schatten
from sector_radius.radius import omega_n
from sector_radius.sectorial import (
    NotSectorialError,
    rotation_to_sector,
    sec_block,
    sector_index,
    tan_block,
)

ALL_NORMS = (OPERATOR, TRACE, FROBENIUS, schatten(3))


def dense_boundary_arg_extreme(X, samples=100000):
    """Brute-force |arg| maximum over dense support-point sampling."""
    from sector_radius.radius import _support_points

    thetas = 2 * np.pi * np.arange(samples) / samples
    return float(np.max(np.abs(np.angle(_support_points(X, thetas)))))


class TestSectorIndex:
    def test_positive_definite_is_zero(self):
        P = random_pd(GenConfig(4, 3))
        assert sector_index(P).index_alpha <= 1e-9

    def test_segment_pi_over_6(self):
        X = np.diag([1.0, np.exp(1j * np.pi / 6)])
        info = sector_index(X)
        oracle = dense_boundary_arg_extreme(X, 20000)
        assert info.index_alpha == pytest.approx(np.pi / 6, abs=1e-9)
        assert info.index_alpha == pytest.approx(oracle, abs=1e-8)

    def test_accretive_dissipative_pi_over_4(self):
        info = sector_index(np.diag([1 + 1j, 1 - 1j]))
        assert info.index_alpha == pytest.approx(np.pi / 4, abs=1e-9)

    def test_rotation_witness_is_identity(self):
        P = random_pd(GenConfig(3, 5))
        info = sector_index(P)
        assert info.rotation_z == 1.0 + 0.0j
        assert info.accretive
        assert info.lambda_min_re > 0

    def test_positive_scaling_invariance(self):
        X = random_sectorial(GenConfig(4, 11), 0.8)
        a = sector_index(X).index_alpha
        for c in (0.1, 3.0, 250.0):
            assert sector_index(c * X).index_alpha == pytest.approx(a, abs=1e-9)

    def test_sampled_points_inside_reported_sector(self):
        X = random_sectorial(GenConfig(5, 21), 1.1)
        info = sector_index(X)
        oracle = dense_boundary_arg_extreme(X, 5000)
        assert oracle <= info.index_alpha + 1e-9

    def test_not_accretive_error_names_lambda_min(self):
        with pytest.raises(DomainError, match="lambda_min"):
            sector_index(np.diag([1.0, -1.0]))

    def test_near_boundary_rejected(self):
        X = np.diag([1.0, np.exp(1j * (np.pi / 2 - 1e-11))])
        with pytest.raises(NotSectorialError):
            sector_index(X)


class TestRotationToSector:
    def test_rotated_positive_definite(self):
        P = random_pd(GenConfig(3, 8))
        info = rotation_to_sector(1j * P)
        assert abs(info.rotation_z - (-1j)) <= 1e-6
        assert info.index_alpha <= 1e-9
        assert not info.accretive

    def test_plain_positive_definite(self):
        P = random_pd(GenConfig(3, 9))
        info = rotation_to_sector(P)
        assert abs(info.rotation_z - 1.0) <= 1e-6
        assert info.index_alpha <= 1e-9
        assert info.accretive

    def test_rotated_segment(self):
        X = np.diag([np.exp(1j * np.pi / 3), np.exp(2j * np.pi / 3)])
        info = rotation_to_sector(X, 100000 // 10)
        assert info.index_alpha == pytest.approx(np.pi / 6, abs=1e-9)
        assert abs(info.rotation_z - np.exp(-1j * np.pi / 2)) <= 1e-6

    def test_unit_modulus_witness(self):
        X = np.exp(0.7j) * random_sectorial(GenConfig(4, 10), 0.9)
        info = rotation_to_sector(X)
        assert abs(abs(info.rotation_z) - 1.0) <= 1e-14

    def test_class_index_rotation_invariant(self):
        X = random_sectorial(GenConfig(3, 12), 1.2)
        base = rotation_to_sector(X, 512).index_alpha
        for phi in (0.5, 2.0, 4.4):
            got = rotation_to_sector(np.exp(1j * phi) * X, 512).index_alpha
            assert got == pytest.approx(base, abs=1e-9)

    def test_class_index_below_accretive_index(self):
        X = random_sectorial(GenConfig(4, 13), 1.0)
        assert rotation_to_sector(X, 512).index_alpha <= sector_index(X).index_alpha + 1e-9

    def test_witnessed_rotation_is_accretive_with_reported_index(self):
        X = np.exp(1.9j) * random_sectorial(GenConfig(4, 14), 0.7)
        info = rotation_to_sector(X, 512)
        zX = info.rotation_z * X
        back = sector_index(zX)
        assert back.index_alpha <= info.index_alpha + 1e-8

    def test_not_sectorial_raises(self):
        with pytest.raises(NotSectorialError):
            rotation_to_sector(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))
        with pytest.raises(NotSectorialError):
            rotation_to_sector(np.diag([1.0, -1.0]).astype(complex))

    def test_phi_samples_validation(self):
        with pytest.raises(ValueError):
            rotation_to_sector(np.eye(2), phi_samples=4)


class TestSectorBlocks:
    def test_tan_block_psd_inside_sector(self):
        X = random_sectorial(GenConfig(4, 15), 0.6)
        info = sector_index(X)
        assert is_psd(tan_block(X, info.index_alpha + 1e-8), tol=1e-9)

    def test_sec_block_psd_inside_sector(self):
        X = random_sectorial(GenConfig(4, 16), 1.0)
        info = sector_index(X)
        assert is_psd(sec_block(X, info.index_alpha + 1e-8), tol=1e-9)

    def test_hermitian_pd_alpha_zero(self):
        P = random_pd(GenConfig(3, 17))
        assert np.allclose(tan_block(P, 0.0)[:3, 3:], 0.0, atol=1e-14)
        assert is_psd(tan_block(P, 0.0), tol=1e-12)
        assert is_psd(sec_block(P, 0.0), tol=1e-12)

    def test_blocks_fail_below_index(self):
        X = np.diag([1 + 1j, 1 - 1j])
        alpha = np.pi / 4 - 0.01
        assert np.linalg.eigvalsh(tan_block(X, alpha)).min() < -1e-4
        assert np.linalg.eigvalsh(sec_block(X, alpha)).min() < -1e-4

    def test_alpha_validation(self):
        with pytest.raises(ValueError):
            tan_block(np.eye(2), -0.1)
        with pytest.raises(ValueError):
            sec_block(np.eye(2), np.pi / 2)

    def test_blocks_at_witnessed_class_index(self):
        X = np.exp(0.4j) * random_sectorial(GenConfig(3, 18), 0.9)
        info = rotation_to_sector(X, 512)
        zX = info.rotation_z * X
        assert is_psd(tan_block(zX, info.index_alpha + 1e-8), tol=1e-9)
        assert is_psd(sec_block(zX, info.index_alpha + 1e-8), tol=1e-9)


class TestRadiusSectorProperties:
    def test_imaginary_part_tan_bound(self):
        X = random_sectorial(GenConfig(4, 19), 0.8)
        a = sector_index(X).index_alpha + 1e-8
        re = (X + X.conj().T) / 2
        im = (X - X.conj().T) / 2j
        for spec in ALL_NORMS:
            ei, er = omega_n(spec, im), omega_n(spec, re)
            assert ei.value <= math.tan(a) * (er.value + er.cert_error) + ei.cert_error + 1e-10

    def test_sec_bound_on_radius(self):
        X = random_sectorial(GenConfig(4, 20), 1.1)
        a = sector_index(X).index_alpha + 1e-8
        re = (X + X.conj().T) / 2
        for spec in ALL_NORMS:
            ex, er = omega_n(spec, X), omega_n(spec, re)
            assert ex.value <= (1 / math.cos(a)) * (er.value + er.cert_error) + ex.cert_error + 1e-10

    def test_norm_sec_bound(self):
        X = random_sectorial(GenConfig(5, 22), 1.3)
        a = sector_index(X).index_alpha + 1e-8
        re = (X + X.conj().T) / 2
        for spec in ALL_NORMS:
            lhs = evaluate_norm(spec, X)
            rhs = (1 / math.cos(a)) * evaluate_norm(spec, re)
            assert lhs <= rhs * (1 + 1e-9)
