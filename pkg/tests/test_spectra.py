"""Sector spectra, sweeps and block-frame evolution against full-matrix oracles."""

import math

import numpy as np
import pytest

from krabi.errors import ShapeError
from krabi.linalg import eig_hermitian
from krabi.model import ModelParams, build_full
from krabi.spectra import (
    EvolutionSpec,
    SweepSpec,
    evolve,
    sector_spectrum,
    sweep,
    sweep_csv,
    trajectory_csv,
)

HAND = ModelParams(alpha=0.5, omega=1.0, g=1.0, k=1, dim=2)


def full_propagated(params, state, t):
    """Oracle: evolve through the eigendecomposition of the full matrix."""
    w, v = eig_hermitian(build_full(params))
    return v @ (np.exp(-1j * w * t) * (v.conj().T @ state))


class TestSectorSpectrum:
    def test_hand_case(self):
        w_top, w_bottom = sector_spectrum(HAND, 2)
        assert np.allclose(w_top, [-0.5, 1.5], rtol=0, atol=1e-12)
        expected = [(1 - math.sqrt(8)) / 2, (1 + math.sqrt(8)) / 2]
        assert np.allclose(w_bottom, expected, rtol=0, atol=1e-12)

    def test_free_limit_doubly_degenerate(self):
        params = ModelParams(alpha=0.0, omega=1.3, g=0.0, k=1, dim=6)
        w_top, w_bottom = sector_spectrum(params, 6)
        ladder = 1.3 * np.arange(6)
        assert np.allclose(w_top, ladder, rtol=0, atol=1e-13)
        assert np.allclose(w_bottom, ladder, rtol=0, atol=1e-13)
        full = eig_hermitian(build_full(params))[0]
        assert np.allclose(full, np.sort(np.concatenate([ladder, ladder])),
                           rtol=0, atol=1e-13)

    @pytest.mark.parametrize("seed,k,dim", [(0, 1, 16), (1, 2, 16), (2, 3, 24)])
    def test_merge_reproduces_full_spectrum(self, seed, k, dim):
        rng = np.random.default_rng(seed)
        params = ModelParams(alpha=rng.random(), omega=0.5 + rng.random(),
                             g=rng.random() * np.exp(2j * np.pi * rng.random()),
                             k=k, dim=dim)
        w_top, w_bottom = sector_spectrum(params, dim)
        merged = np.sort(np.concatenate([w_top, w_bottom]))
        full = eig_hermitian(build_full(params))[0]
        assert np.max(np.abs(merged - full)) <= 1e-9

    def test_too_many_levels_rejected(self):
        with pytest.raises(ShapeError):
            sector_spectrum(HAND, 3)


class TestSweep:
    BASE = ModelParams(alpha=0.4, omega=1.0, g=0.0, k=1, dim=8)

    def test_degenerate_range_rows_identical(self):
        spec = SweepSpec(base=self.BASE, param="g", lo=0.0, hi=0.0, steps=2, levels=2)
        rows = sweep(spec)
        half = len(rows) // 2
        assert rows[:half] == [(r[0], r[1], r[2], r[3]) for r in rows[half:]]

    def test_free_limit_levels_are_omega_spaced(self):
        base = ModelParams(alpha=0.0, omega=1.0, g=0.0, k=1, dim=8)
        spec = SweepSpec(base=base, param="g", lo=0.0, hi=0.5, steps=2, levels=4)
        rows = [r for r in sweep(spec) if r[0] == 0.0 and r[1] == "+"]
        levels = [r[3] for r in rows]
        assert np.allclose(np.diff(levels), 1.0, rtol=0, atol=1e-12)

    def test_ground_state_decreases_and_matches_full_oracle(self):
        spec = SweepSpec(base=self.BASE, param="g", lo=0.0, hi=0.5, steps=6, levels=3)
        rows = sweep(spec)
        ground = []
        for value in np.linspace(0.0, 0.5, 6):
            point = [r[3] for r in rows if r[0] == value]
            ground.append(min(point))
            full = eig_hermitian(build_full(self.BASE.replace(g=value)))[0]
            merged = np.sort(point)
            assert np.allclose(merged[:2], full[:2], rtol=0, atol=1e-9)
        assert all(b < a + 1e-15 for a, b in zip(ground, ground[1:]))

    def test_alpha_and_omega_sweeps(self):
        for param, lo, hi in (("alpha", -0.5, 0.5), ("omega", 0.5, 1.5)):
            spec = SweepSpec(base=self.BASE, param=param, lo=lo, hi=hi, steps=3, levels=1)
            assert len(sweep(spec)) == 3 * 2

    def test_coupling_sweep_keeps_phase(self):
        base = self.BASE.replace(g=0.1j)
        spec = SweepSpec(base=base, param="g", lo=0.0, hi=0.4, steps=3, levels=1)
        at = spec.params_at(0.4)
        assert at.g == pytest.approx(0.4j, abs=1e-15)

    def test_csv_deterministic_and_thread_invariant(self):
        spec = SweepSpec(base=self.BASE, param="g", lo=0.0, hi=0.3, steps=4, levels=2)
        first = sweep_csv(sweep(spec))
        second = sweep_csv(sweep(spec))
        threaded = sweep_csv(sweep(spec, jobs=3))
        assert first == second == threaded
        assert first.splitlines()[0] == "param,block,level,eigenvalue"

    def test_invalid_specs_rejected(self):
        with pytest.raises(ValueError):
            SweepSpec(base=self.BASE, param="g", lo=1.0, hi=0.0, steps=2, levels=1)
        with pytest.raises(ValueError):
            SweepSpec(base=self.BASE, param="g", lo=0.0, hi=1.0, steps=1, levels=1)
        with pytest.raises(ValueError):
            SweepSpec(base=self.BASE, param="g", lo=0.0, hi=1.0, steps=2, levels=9)
        with pytest.raises(ValueError):
            SweepSpec(base=self.BASE, param="omega", lo=0.0, hi=1.0, steps=2, levels=1)
        with pytest.raises(ValueError):
            SweepSpec(base=self.BASE, param="phase", lo=0.0, hi=1.0, steps=2, levels=1)


class TestEvolve:
    def basis_state(self, size, index):
        state = np.zeros(size, dtype=complex)
        state[index] = 1.0
        return state

    def test_time_zero_returns_input_exactly(self):
        params = ModelParams(alpha=0.4, omega=1.0, g=0.3, k=1, dim=6)
        state = self.basis_state(12, 3)
        times, states = evolve(params, EvolutionSpec(initial_state=state, dt=0.1, steps=3))
        assert times[0] == 0.0
        assert np.array_equal(states[0], state)

    def test_dephasing_keeps_block_occupancy(self):
        params = ModelParams(alpha=0.0, omega=1.0, g=0.4, k=2, dim=8)
        state = self.basis_state(16, 0)
        _, states = evolve(params, EvolutionSpec(initial_state=state, dt=0.2, steps=20))
        lower = states[:, 8:]
        assert np.max(np.abs(lower)) <= 1e-12

    @pytest.mark.parametrize("seed,k,dim", [(0, 1, 8), (1, 2, 12), (2, 3, 12)])
    def test_matches_full_propagator(self, seed, k, dim):
        rng = np.random.default_rng(seed)
        params = ModelParams(alpha=rng.random(), omega=0.5 + rng.random(),
                             g=rng.random() * np.exp(2j * np.pi * rng.random()),
                             k=k, dim=dim)
        state = rng.standard_normal(2 * dim) + 1j * rng.standard_normal(2 * dim)
        state /= np.linalg.norm(state)
        spec = EvolutionSpec(initial_state=state, dt=0.5, steps=2)
        times, states = evolve(params, spec)
        for t, psi in zip(times[1:], states[1:]):
            oracle = full_propagated(params, state, t)
            assert np.linalg.norm(psi - oracle) <= 1e-8

    def test_norm_drift_over_hundred_steps(self):
        params = ModelParams(alpha=0.6, omega=1.0, g=0.2 + 0.1j, k=2, dim=16)
        rng = np.random.default_rng(5)
        state = rng.standard_normal(32) + 1j * rng.standard_normal(32)
        state /= np.linalg.norm(state)
        _, states = evolve(params, EvolutionSpec(initial_state=state, dt=0.05, steps=100))
        norms = np.linalg.norm(states, axis=1)
        assert np.max(np.abs(norms - 1.0)) <= 1e-8

    def test_unnormalized_state_rejected(self):
        with pytest.raises(ValueError):
            EvolutionSpec(initial_state=np.ones(4, dtype=complex), dt=0.1, steps=1)

    def test_wrong_length_rejected(self):
        params = ModelParams(alpha=0.4, omega=1.0, g=0.3, k=1, dim=6)
        state = self.basis_state(10, 0)
        with pytest.raises(ShapeError):
            evolve(params, EvolutionSpec(initial_state=state, dt=0.1, steps=1))

    def test_trajectory_csv_shape(self):
        params = ModelParams(alpha=0.4, omega=1.0, g=0.3, k=1, dim=2)
        state = self.basis_state(4, 0)
        times, states = evolve(params, EvolutionSpec(initial_state=state, dt=0.25, steps=2))
        text = trajectory_csv(times, states)
        lines = text.splitlines()
        assert lines[0] == "t,component_index,re,im"
        assert len(lines) == 1 + 3 * 4
