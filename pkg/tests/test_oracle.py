import numpy as np
import pytest

from whframe import GaborLattice, canonical_dual, classify, frame_bounds, gabor_atom, inner
from whframe.oracle import (
    analysis_array,
    oracle_adjoint_gram,
    oracle_frame_bounds,
    oracle_is_dual,
    oracle_tight_constant,
)
from helpers import random_frame, random_lattice, random_signal, random_tight_instance


class TestAnalysisArray:
    def test_shape_and_row_order(self):
        rng = np.random.default_rng(40)
        lat = GaborLattice(6, 2, 3)
        g = random_signal(rng, 6)
        f = random_signal(rng, 6)
        arr = analysis_array(lat, g)
        assert arr.shape == (lat.M * lat.N, 6)
        coeffs = arr @ f
        for m in range(lat.M):
            for n in range(lat.N):
                expected = inner(f, gabor_atom(lat, g, m, n))
                assert coeffs[m * lat.N + n] == pytest.approx(expected, abs=1e-12)

    def test_box_array_is_unitary(self, box):
        lat, g = box
        arr = analysis_array(lat, g)
        assert arr.shape == (4, 4)
        assert np.max(np.abs(np.conj(arr.T) @ arr - np.eye(4))) <= 1e-12


class TestOracleFrameBounds:
    def test_box(self, box):
        lat, g = box
        bounds = oracle_frame_bounds(lat, g)
        assert bounds.A == pytest.approx(1.0, abs=1e-12)
        assert bounds.B == pytest.approx(1.0, abs=1e-12)

    def test_impulse(self, impulse):
        lat, g = impulse
        bounds = oracle_frame_bounds(lat, g)
        assert bounds.A == pytest.approx(0.0, abs=1e-12)
        assert bounds.B == pytest.approx(2.0, abs=1e-12)

    def test_zero(self):
        lat = GaborLattice(4, 2, 2)
        bounds = oracle_frame_bounds(lat, np.zeros(4, dtype=complex))
        assert bounds.A == bounds.B == 0.0

    def test_underspanned_lattice_has_zero_lower_bound(self):
        lat = GaborLattice(4, 2, 4)  # 2 atoms in dimension 4
        g = random_signal(np.random.default_rng(41), 4)
        assert oracle_frame_bounds(lat, g).A == 0.0


class TestOracleIsDual:
    def test_canonical_dual(self):
        rng = np.random.default_rng(42)
        lat, g = random_frame(rng)
        assert oracle_is_dual(lat, g, canonical_dual(lat, g))

    def test_tight_self_dual(self, box):
        lat, g = box
        assert oracle_is_dual(lat, g, g)

    def test_zero_candidate(self, box):
        lat, g = box
        assert not oracle_is_dual(lat, g, np.zeros(4, dtype=complex))


class TestOracleTightConstant:
    def test_box(self, box):
        lat, g = box
        assert oracle_tight_constant(lat, g) == pytest.approx(1.0, abs=1e-12)

    def test_quadratic_scaling(self, box):
        lat, g = box
        assert oracle_tight_constant(lat, 2 * g) == pytest.approx(4.0, abs=1e-12)

    def test_absent_for_non_tight(self, impulse):
        lat, g = impulse
        assert oracle_tight_constant(lat, g) is None

    @pytest.mark.parametrize("seed", range(6))
    def test_agrees_with_classify(self, seed):
        rng = np.random.default_rng(seed)
        lat = random_lattice(rng)
        g = random_signal(rng, lat.L, normalize=True)
        c = oracle_tight_constant(lat, g)
        report = classify(lat, g)
        assert (c is None) == (report.tight_constant is None)
        if c is not None:
            assert report.tight_constant == pytest.approx(c, abs=1e-9)

    def test_agrees_with_classify_on_tight_windows(self):
        rng = np.random.default_rng(43)
        for _ in range(5):
            lat, g = random_tight_instance(rng)
            c = oracle_tight_constant(lat, g)
            assert c == pytest.approx(1.0, abs=1e-9)
            assert classify(lat, g).tight_constant == pytest.approx(c, abs=1e-9)


class TestOracleAdjointGram:
    def test_box_gram_is_identity(self, box):
        lat, g = box
        gram = oracle_adjoint_gram(lat, g)
        assert gram.shape == (4, 4)
        assert np.max(np.abs(gram - np.eye(4))) <= 1e-12

    def test_delta_gram_is_half_identity(self, delta):
        lat, g = delta
        gram = oracle_adjoint_gram(lat, g)
        assert gram.shape == (2, 2)
        assert np.max(np.abs(gram - 0.5 * np.eye(2))) <= 1e-12

    def test_zero_window(self):
        lat = GaborLattice(4, 2, 2)
        gram = oracle_adjoint_gram(lat, np.zeros(4, dtype=complex))
        assert np.all(gram == 0)


class TestOracleAgreesWithFastPaths:
    @pytest.mark.parametrize("seed", range(8))
    def test_bounds(self, seed):
        rng = np.random.default_rng(seed)
        lat = random_lattice(rng)
        g = random_signal(rng, lat.L, normalize=True)
        fast, slow = frame_bounds(lat, g), oracle_frame_bounds(lat, g)
        assert abs(fast.A - slow.A) <= 1e-9
        assert abs(fast.B - slow.B) <= 1e-9
