import numpy as np
import pytest

from holevo.errors import NotPositive, NotUnitTrace
from holevo.linalg import Rng, haar_state
from holevo.states import (DensityMatrix, Ensemble, PureState,
                           density_from_pure, density_violations, mix,
                           validate_density)

KET0 = PureState(np.array([1, 0], dtype=complex))
KET1 = PureState(np.array([0, 1], dtype=complex))
PLUS = PureState(np.array([1, 1], dtype=complex) / np.sqrt(2))


class TestDensityFromPure:
    def test_basis_state(self):
        np.testing.assert_array_equal(density_from_pure(KET0).mat,
                                      np.diag([1.0, 0.0]).astype(complex))

    def test_plus_state(self):
        np.testing.assert_allclose(density_from_pure(PLUS).mat,
                                   np.full((2, 2), 0.5), atol=1e-15)

    def test_idempotent_projector(self):
        for seed in range(10):
            rho = density_from_pure(PureState(haar_state(3, Rng(seed)))).mat
            assert np.abs(rho @ rho - rho).max() < 1e-10

    def test_rejects_unnormalized(self):
        with pytest.raises(NotUnitTrace):
            PureState(np.array([1, 1], dtype=complex))


class TestMix:
    def test_singleton(self):
        rho = density_from_pure(PLUS)
        np.testing.assert_array_equal(mix(Ensemble(np.array([1.0]), (rho,))).mat,
                                      rho.mat)

    def test_orthogonal_balance(self):
        e = Ensemble(np.array([0.5, 0.5]),
                     (density_from_pure(KET0), density_from_pure(KET1)))
        np.testing.assert_allclose(mix(e).mat, np.eye(2) / 2, atol=1e-15)

    def test_bb84_mixture(self):
        # hand arithmetic: (|0><0| + |+><+|)/2
        e = Ensemble(np.array([0.5, 0.5]),
                     (density_from_pure(KET0), density_from_pure(PLUS)))
        np.testing.assert_allclose(
            mix(e).mat, [[0.75, 0.25], [0.25, 0.25]], atol=1e-15)

    def test_linearity_over_merged_ensembles(self):
        g = Rng(3)
        states = tuple(DensityMatrix(np.outer(v, v.conj()))
                       for v in (haar_state(2, g.child(i)) for i in range(4)))
        merged = mix(Ensemble(np.array([0.1, 0.2, 0.3, 0.4]), states))
        sub_a = mix(Ensemble(np.array([1 / 3, 2 / 3]), states[:2]))
        sub_b = mix(Ensemble(np.array([3 / 7, 4 / 7]), states[2:]))
        recombined = 0.3 * sub_a.mat + 0.7 * sub_b.mat
        assert np.abs(merged.mat - recombined).max() < 1e-12

    def test_output_validates(self):
        e = Ensemble(np.array([0.5, 0.5]),
                     (density_from_pure(KET0), density_from_pure(PLUS)))
        validate_density(mix(e).mat, 1e-9)


class TestValidateDensity:
    def test_maximally_mixed(self):
        assert validate_density(np.eye(2, dtype=complex) / 2).dim == 2

    def test_constructed_violations(self):
        # diag(2, -1) has unit trace, so only positivity trips
        assert {n for n, _ in density_violations(
            np.diag([2.0, -1.0]).astype(complex))} == {"positive"}
        bad = np.diag([2.0, -0.5]).astype(complex)
        names = {n for n, _ in density_violations(bad)}
        assert names == {"unit_trace", "positive"}
        with pytest.raises(NotUnitTrace):
            validate_density(bad)

    def test_below_tolerance_perturbation(self):
        m = np.diag([0.5, 0.5]).astype(complex)
        m[0, 1] += 1e-12j
        m[1, 0] -= 1e-12j
        assert density_violations(m, 1e-9) == []
        # sub-tolerance Hermiticity break is also accepted
        m[1, 0] += 2e-12j
        assert density_violations(m, 1e-9) == []

    def test_negative_eigenvalue_reported(self):
        m = np.array([[0.9, 0.4], [0.4, 0.1]], dtype=complex)
        with pytest.raises(NotPositive) as exc:
            validate_density(m)
        assert exc.value.deviation > 0


class TestEnsemble:
    def test_probability_checks(self):
        rho = density_from_pure(KET0)
        with pytest.raises(NotUnitTrace):
            Ensemble(np.array([0.5, 0.4]), (rho, rho))
        with pytest.raises(NotPositive):
            Ensemble(np.array([1.5, -0.5]), (rho, rho))

    def test_uniform_dimension(self):
        from holevo.errors import DimensionMismatch
        with pytest.raises(DimensionMismatch):
            Ensemble(np.array([0.5, 0.5]),
                     (density_from_pure(KET0),
                      DensityMatrix(np.eye(3, dtype=complex) / 3)))

    def test_zero_probability_member_allowed(self):
        e = Ensemble(np.array([1.0, 0.0]),
                     (density_from_pure(KET0), density_from_pure(KET1)))
        assert len(e) == 2
