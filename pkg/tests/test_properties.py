"""Randomized property tests over many seeded problems.

Deselect with ``-m "not slow"``.
"""
import numpy as np
import pytest

from blaschke_pick.blaschke import factorize, unimodularity_check, winding_degree
from blaschke_pick.core import random_admissible_gamma, random_check, random_problem
from blaschke_pick.numerics import is_psd
from blaschke_pick.parametrization import attainment, interpolant, recover_gamma, theta_identity_residuals
from blaschke_pick.pick import extended_pick_matrix, schwarz_pick_matrix
from blaschke_pick.problem import BoundaryData
from blaschke_pick.reduction import exists_degree_n_minus_2, min_degree_lower_bound, reducing_gamma

SEEDS = list(range(12))
WIDE_SEEDS = list(range(200))


def _node_angles(rng, n):
    jitter = rng.uniform(0.0, 1.0, size=n)
    return 2.0 * np.pi * (np.arange(n) + 0.5 * jitter) / n + rng.uniform(0.0, 2.0 * np.pi)


def _oriented_problem(rng, n):
    """Random problem whose first three targets run counter-clockwise like their nodes."""
    targets = rng.uniform(0.0, 2.0 * np.pi, size=n)
    targets[:3] = np.sort(targets[:3])
    return BoundaryData.from_angles(_node_angles(rng, n).tolist(), targets.tolist())


def _reversed_problem(rng, n):
    """Random problem whose targets run clockwise while the nodes run counter-clockwise."""
    targets = np.sort(rng.uniform(0.0, 2.0 * np.pi, size=n))[::-1]
    return BoundaryData.from_angles(_node_angles(rng, n).tolist(), targets.tolist())


@pytest.mark.slow
class TestInterpolantProperties:
    """Invariants of f_γ for random admissible γ."""

    @pytest.mark.parametrize("seed", WIDE_SEEDS)
    def test_interpolant_invariants(self, seed):
        """Test interpolation, unimodularity, degree and attained derivatives."""
        rng = np.random.default_rng(seed)
        n = int(rng.integers(3, 9))
        data = random_problem(rng, n)
        gamma = random_admissible_gamma(rng, data)
        family = interpolant(data, gamma)

        assert family.interpolation_residual() <= 1e-9
        assert unimodularity_check(family.f) <= 1e-9
        assert winding_degree(family.f) == n - 1 - len(family.delta.zero_set)
        assert family.predicted_degree == n - 1 - len(family.delta.zero_set)
        assert factorize(family.f).degree == family.predicted_degree
        for node in attainment(family):
            if node.attained:
                assert node.derivative == pytest.approx(node.gamma, rel=1e-6)

    @pytest.mark.parametrize("seed", SEEDS)
    def test_identities_and_extension(self, seed):
        """Test the Θ identities and the singular PSD extension."""
        rng = np.random.default_rng(1000 + seed)
        data = random_problem(rng, int(rng.integers(3, 8)))
        gamma = random_admissible_gamma(rng, data)
        r = theta_identity_residuals(data, gamma, 0.3 - 0.1j, -0.2 + 0.4j)
        assert max(r.kernel, r.dual_kernel, r.determinant) <= 1e-8
        assert is_psd(extended_pick_matrix(data, gamma))

    @pytest.mark.parametrize("seed", SEEDS)
    def test_recover_gamma_round_trip(self, seed):
        """Test that γ is recovered from its interpolant."""
        rng = np.random.default_rng(2000 + seed)
        data = random_problem(rng, int(rng.integers(3, 7)))
        gamma = random_admissible_gamma(rng, data)
        recovered = recover_gamma(interpolant(data, gamma).f, data)
        assert np.allclose(recovered.gamma.as_array(), gamma.as_array(), rtol=1e-6)

    @pytest.mark.parametrize("seed", SEEDS)
    def test_schwarz_pick_certificate(self, seed):
        """Test PSD of the Schwarz-Pick matrix at nodes and interior points."""
        rng = np.random.default_rng(3000 + seed)
        data = random_problem(rng, int(rng.integers(3, 7)))
        f = interpolant(data, random_admissible_gamma(rng, data)).f
        points = list(data.nodes) + [0.2j, -0.5 + 0.1j]
        assert is_psd(schwarz_pick_matrix(f, points))


@pytest.mark.slow
class TestReductionProperties:
    """Degree reduction on random problems that admit it."""

    @pytest.mark.parametrize("seed", SEEDS)
    def test_reduction(self, seed):
        """Test that an oriented triple always yields degree ≤ n − 2."""
        rng = np.random.default_rng(4000 + seed)
        data = random_problem(rng, int(rng.integers(3, 8)))
        if exists_degree_n_minus_2(data) is None:
            pytest.skip("no oriented triple")
        reduced = reducing_gamma(data)
        family = interpolant(reduced.data, reduced.gamma)
        assert family.predicted_degree <= data.n - 2
        assert family.interpolation_residual() <= 1e-8
        assert winding_degree(family.f) == family.predicted_degree
        assert family.predicted_degree >= min_degree_lower_bound(data)

    @pytest.mark.parametrize("seed", range(50))
    def test_engineered_zero_entry(self, seed):
        """Test Δ_{n−1} = 0 and the matching degree drop when an oriented triple is planted."""
        rng = np.random.default_rng(5000 + seed)
        n = int(rng.integers(3, 9))
        data = _oriented_problem(rng, n)
        assert exists_degree_n_minus_2(data) is not None
        reduced = reducing_gamma(data)
        family = interpolant(reduced.data, reduced.gamma)
        assert n - 2 in family.delta.zero_set
        assert family.interpolation_residual() <= 1e-8
        assert unimodularity_check(family.f) <= 1e-8
        assert winding_degree(family.f) == n - 1 - len(family.delta.zero_set)

    @pytest.mark.parametrize("seed", range(50))
    def test_reversed_targets_keep_full_degree(self, seed):
        """Test that clockwise targets force degree n − 1 for every admissible γ tried."""
        rng = np.random.default_rng(6000 + seed)
        n = int(rng.integers(3, 9))
        data = _reversed_problem(rng, n)
        assert exists_degree_n_minus_2(data) is None
        for _ in range(20):
            family = interpolant(data, random_admissible_gamma(rng, data))
            assert family.delta.zero_set == ()
            assert family.predicted_degree == n - 1
            assert winding_degree(family.f) == n - 1


@pytest.mark.slow
class TestRandomCheck:
    """The built-in self-check over a larger sample."""

    def test_many_instances(self):
        """Test 40 instances up to 10 nodes."""
        report = random_check(count=40, seed=99, max_nodes=10)
        assert report.passed, report.failures
