import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holevo.errors import DimensionMismatch, NotPositive, NotUnitTrace
from holevo.linalg import Rng, ginibre_density, haar_state, haar_unitary, kron
from holevo.states import (DensityMatrix, Ensemble, PureState,
                           density_from_pure)
from holevo.entropy import (chi_partial_trace_slack, concavity_slack, cq_state,
                            holevo_chi, shannon_entropy, ssa_slack,
                            von_neumann_entropy)
from holevo.demos import bb84_pair

# Independent oracle for the BB84 chi: mixture eigenvalues are (1 +/- 1/sqrt2)/2.
_LAM = (1 + 1 / np.sqrt(2)) / 2
BB84_CHI = float(-_LAM * np.log2(_LAM) - (1 - _LAM) * np.log2(1 - _LAM))


def random_density(seed, d, rank=None):
    return DensityMatrix(ginibre_density(d, rank or d, Rng(seed)))


def random_ensemble(seed, d, k):
    base = Rng(seed)
    g = base.generator()
    p = g.dirichlet(np.ones(k))
    states = tuple(DensityMatrix(ginibre_density(d, d, base.child(i)))
                   for i in range(k))
    return Ensemble(p, states)


class TestShannonEntropy:
    def test_deterministic(self):
        assert shannon_entropy([1.0, 0.0]) == 0.0

    def test_uniform_bit(self):
        assert abs(shannon_entropy([0.5, 0.5]) - 1.0) < 1e-12

    def test_skewed(self):
        # direct formula: -(3/4)log2(3/4) - (1/4)log2(1/4)
        expected = -(0.75 * np.log2(0.75) + 0.25 * np.log2(0.25))
        assert abs(shannon_entropy([0.75, 0.25]) - expected) < 1e-12
        assert abs(expected - 0.8112781244591328) < 1e-12

    def test_errors(self):
        with pytest.raises(NotPositive):
            shannon_entropy([1.2, -0.2])
        with pytest.raises(NotUnitTrace):
            shannon_entropy([0.5, 0.4])


class TestVonNeumannEntropy:
    def test_pure_states_have_zero_entropy(self):
        for seed in range(10):
            rho = density_from_pure(PureState(haar_state(4, Rng(seed))))
            assert abs(von_neumann_entropy(rho)) < 1e-10

    def test_maximally_mixed_qubit(self):
        assert abs(von_neumann_entropy(
            DensityMatrix(np.eye(2, dtype=complex) / 2)) - 1.0) < 1e-12

    def test_diagonal_spectrum(self):
        rho = DensityMatrix(np.diag([0.75, 0.25]).astype(complex))
        assert abs(von_neumann_entropy(rho) - 0.8112781244591328) < 1e-12

    @given(st.integers(0, 10 ** 6))
    @settings(max_examples=25, deadline=None)
    def test_unitary_invariance(self, seed):
        rho = random_density(seed, 3)
        u = haar_unitary(3, Rng(seed + 1))
        rotated = DensityMatrix(u @ rho.mat @ u.conj().T)
        assert abs(von_neumann_entropy(rotated)
                   - von_neumann_entropy(rho)) < 1e-9


class TestHolevoChi:
    def test_orthogonal_pair(self):
        k0 = density_from_pure(PureState(np.array([1, 0], dtype=complex)))
        k1 = density_from_pure(PureState(np.array([0, 1], dtype=complex)))
        rep = holevo_chi(Ensemble(np.array([0.5, 0.5]), (k0, k1)))
        assert abs(rep.chi - 1.0) < 1e-12

    def test_singleton_is_zero(self):
        rep = holevo_chi(Ensemble(np.array([1.0]), (random_density(0, 3),)))
        assert rep.chi == 0.0

    def test_identical_members_exactly_zero(self):
        rho = random_density(1, 2)
        rep = holevo_chi(Ensemble(np.array([0.3, 0.7]), (rho, rho)))
        assert rep.chi == 0.0

    def test_bb84_reference(self):
        rep = holevo_chi(bb84_pair())
        assert abs(rep.chi - BB84_CHI) < 1e-12

    def test_report_self_consistency(self):
        e = random_ensemble(2, 3, 3)
        rep = holevo_chi(e)
        recomputed = rep.mixture_entropy - float(
            np.dot(e.probs, rep.member_entropies))
        assert abs(rep.chi - recomputed) < 1e-12
        assert rep.chi >= -1e-10

    def test_permutation_invariance_exact(self):
        e = random_ensemble(3, 2, 3)
        flipped = Ensemble(e.probs[::-1].copy(), e.states[::-1])
        assert holevo_chi(e).chi == holevo_chi(flipped).chi

    @given(st.integers(0, 10 ** 6))
    @settings(max_examples=25, deadline=None)
    def test_chi_bounded_by_log_dim(self, seed):
        e = random_ensemble(seed, 3, 3)
        chi = holevo_chi(e).chi
        assert -1e-10 <= chi <= np.log2(3) + 1e-9


class TestCqState:
    def test_single_member(self):
        rho = random_density(4, 2)
        joint = cq_state([1.0], 1, [rho])
        flag = np.zeros((1, 1), dtype=complex)
        flag[0, 0] = 1
        np.testing.assert_allclose(joint.mat, kron(flag, rho.mat), atol=1e-15)

    def test_entropy_identity(self):
        p = np.array([0.2, 0.5, 0.3])
        states = [random_density(s, 2) for s in (5, 6, 7)]
        joint = cq_state(p, 3, states)
        expected = shannon_entropy(p) + float(
            np.dot(p, [von_neumann_entropy(s) for s in states]))
        assert abs(von_neumann_entropy(joint) - expected) < 1e-9

    def test_pure_members_give_flag_entropy(self):
        states = [density_from_pure(PureState(haar_state(2, Rng(s))))
                  for s in (8, 9)]
        joint = cq_state([0.5, 0.5], 2, states)
        assert abs(von_neumann_entropy(joint) - 1.0) < 1e-9

    def test_flag_dimension_shortfall(self):
        with pytest.raises(DimensionMismatch):
            cq_state([0.5, 0.5], 1, [random_density(0, 2)] * 2)


class TestSsaSlack:
    def test_product_state_additivity(self):
        rho = DensityMatrix(kron(kron(random_density(0, 2).mat,
                                      random_density(1, 2).mat),
                                 random_density(2, 2).mat))
        assert abs(ssa_slack(rho, (2, 2, 2))) < 1e-9

    def test_ghz_slack_is_one(self):
        v = np.zeros(8, dtype=complex)
        v[0] = v[7] = 1 / np.sqrt(2)
        rho = density_from_pure(PureState(v))
        # oracle: S(XY)=S(YZ)=S(Y)=1, S(XYZ)=0
        assert abs(ssa_slack(rho, (2, 2, 2)) - 1.0) < 1e-9

    def test_randomized_campaign(self):
        base = Rng(11)
        worst = min(
            ssa_slack(DensityMatrix(
                ginibre_density(8, i % 8 + 1, base.child(i))), (2, 2, 2))
            for i in range(1000))
        assert worst >= -1e-8

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            ssa_slack(random_density(0, 4), (2, 2, 2))


class TestChiPartialTraceSlack:
    def test_constant_second_factor(self):
        sigma = random_density(12, 2)
        members = tuple(DensityMatrix(kron(random_density(s, 2).mat, sigma.mat))
                        for s in (13, 14))
        e = Ensemble(np.array([0.4, 0.6]), members)
        assert abs(chi_partial_trace_slack(e, (2, 2))) < 1e-9

    def test_classical_copy(self):
        basis = [density_from_pure(PureState(np.eye(2, dtype=complex)[i]))
                 for i in range(2)]
        members = tuple(DensityMatrix(kron(b.mat, b.mat)) for b in basis)
        e = Ensemble(np.array([0.5, 0.5]), members)
        assert abs(chi_partial_trace_slack(e, (2, 2))) < 1e-9

    def test_randomized_campaign(self):
        worst = min(
            chi_partial_trace_slack(random_ensemble(seed, 4, 3), (2, 2))
            for seed in range(1000))
        assert worst >= -1e-8


class TestConcavitySlack:
    def test_identical_members(self):
        rho = random_density(15, 2)
        e = Ensemble(np.array([0.5, 0.5]), (rho, rho))
        assert abs(concavity_slack(e)) < 1e-10

    def test_orthogonal_uniform(self):
        basis = tuple(density_from_pure(PureState(np.eye(4, dtype=complex)[i]))
                      for i in range(4))
        e = Ensemble(np.full(4, 0.25), basis)
        assert abs(concavity_slack(e) - 2.0) < 1e-9

    def test_bb84_equals_chi(self):
        assert abs(concavity_slack(bb84_pair()) - BB84_CHI) < 1e-12
