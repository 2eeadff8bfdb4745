import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cavitycorr import (
    MeasurementBasis,
    binary_entropy,
    classical_correlation_bruteforce,
    concurrence,
    conditional_entropy_measured,
    discord_bruteforce,
    discord_closed,
    entropy_a,
    entropy_b,
    entropy_joint,
    make_xstate,
    mutual_information,
    werner_state,
)
from cavitycorr.measures import _measured_entropy, _min_conditional_entropy
from cavitycorr.verify import sample_xstate

from conftest import seeded_rng, xstates

MIXED = make_xstate(0.25, 0.25, 0.25, 0.25, 0)
BELL = make_xstate(0, 0.5, 0.5, 0, 0.5)
CLASSICAL = make_xstate(0.5, 0, 0, 0.5, 0)  # perfectly correlated diagonal


class TestBinaryEntropy:
    def test_symmetric_maximum(self):
        assert binary_entropy(0.5) == 1.0

    def test_degenerate_endpoints(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_quarter(self):
        # -0.25 log2 0.25 - 0.75 log2 0.75, evaluated independently
        assert binary_entropy(0.25) == pytest.approx(0.811278, abs=1e-6)

    def test_roundoff_tolerated(self):
        assert binary_entropy(1.0 + 5e-13) == 0.0

    @pytest.mark.parametrize("x", [-0.01, 1.01])
    def test_domain(self, x):
        with pytest.raises(ValueError):
            binary_entropy(x)


class TestConcurrence:
    def test_maximally_mixed(self):
        assert concurrence(MIXED) == 0.0

    def test_bell(self):
        assert concurrence(BELL) == 1.0

    @pytest.mark.parametrize("r", [0.0, 0.2, 1 / 3, 0.8, 1.0])
    def test_werner_formula(self, r):
        assert concurrence(werner_state(r)) == pytest.approx(
            max(0.0, (3 * r - 1) / 2), abs=1e-12)

    def test_matches_general_definition(self):
        # spin-flip construction on the dense matrix as the oracle
        sy = np.array([[0, -1j], [1j, 0]])
        yy = np.kron(sy, sy)
        rng = seeded_rng(21)
        for _ in range(50):
            s = sample_xstate(rng)
            rho = s.as_matrix()
            lams = np.linalg.eigvals(rho @ yy @ rho.conj() @ yy)
            roots = np.sqrt(np.abs(np.sort(lams.real)[::-1]))
            expected = max(0.0, roots[0] - roots[1] - roots[2] - roots[3])
            assert concurrence(s) == pytest.approx(expected, abs=1e-10)


class TestEntropies:
    def test_joint_pure_and_mixed(self):
        assert entropy_joint(BELL) == pytest.approx(0.0, abs=1e-10)
        assert entropy_joint(MIXED) == pytest.approx(2.0, abs=1e-12)

    def test_joint_werner(self):
        expected = -(0.4 * math.log2(0.4) + 3 * 0.2 * math.log2(0.2))
        assert entropy_joint(werner_state(0.2)) == pytest.approx(expected, abs=1e-12)

    @given(xstates())
    def test_joint_range(self, s):
        assert -1e-12 <= entropy_joint(s) <= 2.0 + 1e-12

    def test_marginals(self):
        assert entropy_b(MIXED) == 1.0
        assert entropy_b(BELL) == 1.0
        assert entropy_b(make_xstate(1, 0, 0, 0, 0)) == 0.0
        for r in (0.0, 0.37, 1.0):
            assert entropy_b(werner_state(r)) == pytest.approx(1.0, abs=1e-12)
            assert entropy_a(werner_state(r)) == pytest.approx(1.0, abs=1e-12)

    def test_marginal_asymmetry(self):
        s = make_xstate(0.5, 0.2, 0.2, 0.1, 0)
        assert entropy_a(s) == pytest.approx(binary_entropy(0.7), abs=1e-14)
        assert entropy_b(s) == pytest.approx(binary_entropy(0.7), abs=1e-14)
        s = make_xstate(0.5, 0.3, 0.1, 0.1, 0)
        assert entropy_a(s) != entropy_b(s)


class TestMutualInformation:
    def test_known_values(self):
        assert mutual_information(MIXED) == pytest.approx(0.0, abs=1e-12)
        assert mutual_information(make_xstate(1, 0, 0, 0, 0)) == pytest.approx(0.0, abs=1e-12)
        assert mutual_information(BELL) == pytest.approx(2.0, abs=1e-10)
        assert mutual_information(CLASSICAL) == pytest.approx(1.0, abs=1e-12)

    @given(xstates())
    def test_nonnegative(self, s):
        assert mutual_information(s) >= -1e-9


class TestConditionalEntropy:
    def test_maximally_mixed_any_basis(self):
        for theta, phi in ((0.0, 0.0), (0.7, 1.1), (math.pi / 2, 4.0)):
            value = conditional_entropy_measured(MIXED, MeasurementBasis(theta, phi))
            assert value == pytest.approx(1.0, abs=1e-12)

    def test_bell_z_measurement(self):
        value = conditional_entropy_measured(BELL, MeasurementBasis(0.0, 0.0))
        assert value == pytest.approx(0.0, abs=1e-12)

    def test_pure_product(self):
        value = conditional_entropy_measured(make_xstate(1, 0, 0, 0, 0),
                                             MeasurementBasis(0.42, 2.0))
        assert value == pytest.approx(0.0, abs=1e-12)

    def test_fast_path_matches_projector_path(self):
        rng = seeded_rng(22)
        for _ in range(60):
            s = sample_xstate(rng)
            theta = float(rng.uniform(0, math.pi / 2))
            phi = float(rng.uniform(0, 2 * math.pi))
            general = conditional_entropy_measured(s, MeasurementBasis(theta, phi))
            fast = float(_measured_entropy(s, theta))
            assert general == pytest.approx(fast, abs=1e-12)

    def test_outcome_relabeling_symmetry(self):
        # (theta, phi) -> (pi/2 - theta, phi + pi) swaps the two outcomes
        rng = seeded_rng(23)
        for _ in range(30):
            s = sample_xstate(rng)
            theta = float(rng.uniform(0, math.pi / 2))
            phi = float(rng.uniform(0, math.pi))
            direct = conditional_entropy_measured(s, MeasurementBasis(theta, phi))
            swapped = conditional_entropy_measured(
                s, MeasurementBasis(math.pi / 2 - theta, phi + math.pi))
            assert direct == pytest.approx(swapped, abs=1e-10)

    def test_phi_independence(self):
        # the only coherence links |10> and |01>, so the measurement phase
        # cancels; 2*pi periodicity in phi follows a fortiori
        s = sample_xstate(seeded_rng(24))
        ref = conditional_entropy_measured(s, MeasurementBasis(0.9, 0.0))
        for phi in (0.3, 2.2, 4.9, 2 * math.pi - 1e-9):
            value = conditional_entropy_measured(s, MeasurementBasis(0.9, phi))
            assert value == pytest.approx(ref, abs=1e-12)

    def test_basis_validation(self):
        with pytest.raises(ValueError):
            MeasurementBasis(-0.1, 0.0)
        with pytest.raises(ValueError):
            MeasurementBasis(0.0, 2 * math.pi)


class TestBruteForce:
    def test_classical_correlation_values(self):
        assert classical_correlation_bruteforce(MIXED)[0] == pytest.approx(0.0, abs=1e-9)
        assert classical_correlation_bruteforce(BELL)[0] == pytest.approx(1.0, abs=1e-9)
        assert classical_correlation_bruteforce(CLASSICAL)[0] == pytest.approx(1.0, abs=1e-9)

    def test_classical_argmin_deterministic(self):
        value1, basis1 = classical_correlation_bruteforce(werner_state(0.6))
        value2, basis2 = classical_correlation_bruteforce(werner_state(0.6))
        assert value1 == value2
        assert basis1 == basis2

    def test_discord_values(self):
        assert discord_bruteforce(MIXED) == pytest.approx(0.0, abs=1e-9)
        assert discord_bruteforce(CLASSICAL) == pytest.approx(0.0, abs=1e-9)
        assert discord_bruteforce(BELL) == pytest.approx(1.0, abs=1e-9)

    def test_grid_floor(self):
        with pytest.raises(ValueError):
            discord_bruteforce(MIXED, grid_points=32)

    def test_refinement_grid_insensitive(self):
        # doubling the grid may only move the minimum marginally
        rng = seeded_rng(25)
        for _ in range(100):
            s = sample_xstate(rng)
            coarse, _ = _min_conditional_entropy(s, 128)
            fine, _ = _min_conditional_entropy(s, 256)
            assert abs(coarse - fine) < 1e-5


class TestDiscordClosed:
    def test_known_values(self):
        assert discord_closed(MIXED) == pytest.approx(0.0, abs=1e-9)
        assert discord_closed(BELL) == pytest.approx(1.0, abs=1e-9)

    def test_diagonal_states_have_zero_discord(self):
        rng = seeded_rng(26)
        for _ in range(50):
            w = -np.log(rng.random(4))
            w /= w.sum()
            assert discord_closed(make_xstate(*w, 0)) <= 1e-9

    def test_conjugation_invariance(self):
        rng = seeded_rng(27)
        for _ in range(50):
            s = sample_xstate(rng)
            t = make_xstate(s.p11, s.p22, s.p33, s.p44, np.conj(s.c23))
            assert abs(discord_closed(s) - discord_closed(t)) < 1e-12
            assert abs(concurrence(s) - concurrence(t)) < 1e-12

    def test_against_bruteforce_bulk(self):
        # closed form must stay within the known worst-case bound of the
        # two-candidate minimum, plus grid slack
        rng = seeded_rng(28)
        worst = 0.0
        for _ in range(300):
            s = sample_xstate(rng)
            brute = discord_bruteforce(s)
            worst = max(worst, abs(discord_closed(s) - brute))
            mi = mutual_information(s)
            assert brute <= mi + 1e-9
            assert classical_correlation_bruteforce(s)[0] <= mi + 1e-9
        assert worst <= 0.0021 + 5e-4

    @given(xstates())
    def test_range_and_ordering(self, s):
        d = discord_closed(s)
        assert 0.0 <= d <= 1.0 + 1e-9
        assert d <= mutual_information(s) + 1e-9
