"""Riccati residuals, verification, the similarity transform and decoupling."""

import math

import numpy as np
import pytest

from krabi.errors import ShapeError, SolutionError
from krabi.fock import annihilation, power_k
from krabi.linalg import eig_hermitian
from krabi.model import ModelParams, build_blocks, build_full
from krabi.parity import bosonic_parity, generalized_parity, two_photon_parity
from krabi.riccati import (
    block_diagonalize,
    residual,
    similarity_transform,
    verify_involution_solution,
)

HAND = ModelParams(alpha=0.5, omega=1.0, g=1.0, k=1, dim=2)


def seeded_params(seed, k, dim):
    rng = np.random.default_rng(seed)
    g = rng.random() * np.exp(2j * np.pi * rng.random())
    return ModelParams(alpha=2 * (1 - rng.random()), omega=2 * (1 - rng.random()),
                       g=g, k=k, dim=dim)


class TestResidual:
    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
    @pytest.mark.parametrize("seed", [0, 1])
    def test_generalized_parity_solves(self, k, seed):
        params = seeded_params(seed, k, 8 * k)
        blocks = build_blocks(params)
        x = generalized_parity(k, params.dim)
        res = residual(blocks, x)
        scale = (np.linalg.norm(blocks.h_plus) + np.linalg.norm(blocks.h_minus)
                 + 2 * np.linalg.norm(blocks.coupling))
        assert np.linalg.norm(res) <= 1e-12 * scale

    def test_hand_case_intermediates(self):
        blocks = build_blocks(HAND)
        x = np.diag([1.0, -1.0]).astype(complex)
        assert np.array_equal(x @ blocks.h_plus, np.array([[0, 1], [-1, -1]], dtype=complex))
        assert np.array_equal(x @ blocks.h_plus, blocks.h_minus @ x)
        assert np.linalg.norm(residual(blocks, x)) == 0.0

    def test_bosonic_parity_failure_structure_even_k(self):
        # For even k the bosonic parity commutes with a^k, so the residual
        # collapses to (h_plus - h_minus) P = 2*(conj(g) a^k + g a^dag^k) P.
        params = ModelParams(alpha=0.7, omega=1.0, g=0.3 + 0.4j, k=2, dim=12)
        blocks = build_blocks(params)
        p_op = bosonic_parity(12)
        res = residual(blocks, p_op)
        a2 = power_k(annihilation(12), 2)
        w = np.conj(params.g) * a2 + params.g * a2.conj().T
        assert np.allclose(res, 2.0 * w @ p_op, rtol=0, atol=1e-13)
        assert abs(res[0, 2]) == pytest.approx(2 * abs(params.g) * math.sqrt(2), rel=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(ShapeError):
            residual(build_blocks(HAND), np.eye(3))


class TestVerification:
    def test_generalized_parity_passes(self):
        params = seeded_params(3, 3, 24)
        report = verify_involution_solution(build_blocks(params),
                                            generalized_parity(3, 24), params=params)
        assert report.passed
        assert report.is_involution and report.intertwines
        assert report.relative_residual <= 1e-12

    def test_bosonic_parity_odd_k_passes(self):
        params = ModelParams(alpha=1.0, omega=1.0, g=0.5, k=3, dim=18)
        report = verify_involution_solution(build_blocks(params), bosonic_parity(18))
        assert report.passed

    @pytest.mark.parametrize("k", [2, 4, 6])
    @pytest.mark.parametrize("g_mag", [0.1, 0.5])
    def test_bosonic_parity_even_k_fails(self, k, g_mag):
        params = ModelParams(alpha=1.0, omega=1.0, g=g_mag, k=k, dim=8 * k)
        report = verify_involution_solution(build_blocks(params), bosonic_parity(params.dim))
        assert not report.passed
        assert report.relative_residual >= 1e-3

    @pytest.mark.parametrize("k,expected", [(2, True), (6, True), (4, False), (8, False)])
    def test_two_photon_parity_modular_rule(self, k, expected):
        # Measured rule: the two-photon parity solves exactly for k % 4 == 2.
        params = ModelParams(alpha=1.0, omega=1.0, g=0.5, k=k, dim=6 * k)
        report = verify_involution_solution(build_blocks(params), two_photon_parity(params.dim))
        assert report.passed is expected
        if not expected:
            assert report.relative_residual >= 1e-3

    def test_intertwining_defect_independent_of_alpha(self):
        defects = []
        for alpha in (0.0, 0.7, 1.3):
            params = ModelParams(alpha=alpha, omega=1.0, g=0.4j, k=2, dim=16)
            report = verify_involution_solution(build_blocks(params),
                                                two_photon_parity(16))
            defects.append(report.intertwining_defect)
        assert defects[0] == defects[1] == defects[2]

    def test_spectra_match_filled_for_passing_candidate(self):
        params = seeded_params(4, 2, 16)
        report = verify_involution_solution(build_blocks(params), generalized_parity(2, 16),
                                            params=params, compare_spectra=True)
        assert report.spectra_match is not None
        assert report.spectra_match <= 1e-10

    def test_report_json_keys(self):
        params = seeded_params(5, 1, 8)
        report = verify_involution_solution(build_blocks(params), bosonic_parity(8),
                                            params=params)
        data = report.to_dict()
        assert list(data) == ["residual_norm", "relative_residual", "is_involution",
                              "intertwines", "spectra_match", "params", "tolerance"]
        assert list(data["params"]) == ["alpha", "omega", "g_re", "g_im", "k", "dim"]


class TestSimilarityTransform:
    def test_two_by_two_sign_matrix(self):
        s, s_inv = similarity_transform(np.diag([1.0, -1.0]).astype(complex))
        assert np.array_equal(s @ s_inv, np.eye(4, dtype=complex))

    def test_identity_candidate(self):
        eye = np.eye(2, dtype=complex)
        s, s_inv = similarity_transform(eye)
        assert np.array_equal(s, np.block([[eye, -eye], [eye, eye]]))
        assert np.array_equal(s_inv, 0.5 * np.block([[eye, eye], [-eye, eye]]))

    @pytest.mark.parametrize("k,dim", [(1, 8), (2, 16), (5, 25)])
    def test_generalized_parity_inverse(self, k, dim):
        s, s_inv = similarity_transform(generalized_parity(k, dim))
        assert np.linalg.norm(s @ s_inv - np.eye(2 * dim)) <= 1e-13

    def test_non_involution_rejected(self):
        with pytest.raises(SolutionError):
            similarity_transform(np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex))

    def test_non_hermitian_rejected(self):
        x = np.array([[1.0, 1.0], [0.0, -1.0]], dtype=complex)  # involution, not Hermitian
        assert np.array_equal(x @ x, np.eye(2, dtype=complex))
        with pytest.raises(SolutionError):
            similarity_transform(x)


class TestBlockDiagonalize:
    def test_rabi_blocks_closed_form(self):
        params = seeded_params(6, 2, 12)
        blocks = build_blocks(params)
        x = generalized_parity(2, 12)
        top, bottom = block_diagonalize(blocks, x)
        assert np.allclose(top, blocks.h_plus + params.alpha * x, rtol=0, atol=1e-14)
        assert np.allclose(bottom, blocks.h_minus - params.alpha * x, rtol=0, atol=1e-14)

    def test_dephasing_blocks_unchanged(self):
        params = ModelParams(alpha=0.0, omega=1.0, g=0.6, k=1, dim=10)
        blocks = build_blocks(params)
        top, bottom = block_diagonalize(blocks, generalized_parity(1, 10))
        assert np.array_equal(top, blocks.h_plus)
        assert np.array_equal(bottom, blocks.h_minus)

    @pytest.mark.parametrize("seed,k,dim", [(7, 1, 16), (8, 2, 16), (9, 3, 24)])
    def test_conjugation_kills_off_diagonal_blocks(self, seed, k, dim):
        params = seeded_params(seed, k, dim)
        blocks = build_blocks(params)
        x = generalized_parity(k, dim)
        top, bottom = block_diagonalize(blocks, x)
        s, s_inv = similarity_transform(x)
        full = blocks.full_matrix()
        conjugated = s_inv @ full @ s
        off_upper = conjugated[:dim, dim:]
        off_lower = conjugated[dim:, :dim]
        norm = np.linalg.norm(full)
        assert np.linalg.norm(off_upper) <= 1e-11 * norm
        assert np.linalg.norm(off_lower) <= 1e-11 * norm
        assert np.allclose(conjugated[:dim, :dim], top, rtol=0, atol=1e-11 * norm)
        assert np.allclose(conjugated[dim:, dim:], bottom, rtol=0, atol=1e-11 * norm)

    def test_hand_case_block_eigenvalues(self):
        blocks = build_blocks(HAND)
        top, bottom = block_diagonalize(blocks, generalized_parity(1, 2))
        assert np.allclose(eig_hermitian(top)[0], [-0.5, 1.5], rtol=0, atol=1e-12)
        expected = [(1 - math.sqrt(8)) / 2, (1 + math.sqrt(8)) / 2]
        assert np.allclose(eig_hermitian(bottom)[0], expected, rtol=0, atol=1e-12)
        merged = np.sort(np.concatenate([eig_hermitian(top)[0], eig_hermitian(bottom)[0]]))
        assert np.allclose(eig_hermitian(build_full(HAND))[0], merged, rtol=0, atol=1e-12)

    def test_unverified_candidate_rejected(self):
        params = ModelParams(alpha=1.0, omega=1.0, g=0.5, k=2, dim=12)
        with pytest.raises(SolutionError):
            block_diagonalize(build_blocks(params), bosonic_parity(12))
