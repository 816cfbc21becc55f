"""Tests for the exact density-matrix reference simulation."""

import math

import numpy as np
import pytest

from telequec import (
    BellDiagonalState,
    channel_of,
    purify_step,
    swap_step,
    werner,
)
from telequec.densmat import (
    H,
    I2,
    OracleError,
    X,
    Y,
    Z,
    bell_coefficients,
    check_density_matrix,
    cnot,
    dm_from_bell_diagonal,
    dm_purify_step,
    dm_swap_step,
    dm_teleport_channel,
    rx,
)

PERFECT = BellDiagonalState(1.0, 0.0, 0.0, 0.0)


def random_states(count, seed=0):
    rng = np.random.default_rng(seed)
    return [BellDiagonalState.normalized(*rng.dirichlet(np.ones(4))) for _ in range(count)]


class TestGates:
    def test_unitarity(self):
        gates = [I2, X, Y, Z, H, rx(0.3), rx(math.pi / 2), cnot(0, 1, 2), cnot(2, 0, 3)]
        for gate in gates:
            assert np.allclose(gate @ gate.conj().T, np.eye(len(gate)), atol=1e-12)

    def test_rx_definition(self):
        theta = 0.7
        expected = math.cos(theta / 2) * I2 - 1j * math.sin(theta / 2) * X
        assert np.allclose(rx(theta), expected)

    def test_h_definition(self):
        assert np.allclose(H, (X + Z) / math.sqrt(2))

    def test_cnot_action(self):
        gate = cnot(0, 1, 2)
        basis = np.eye(4)
        # |10> -> |11>, |11> -> |10>, control untouched otherwise
        assert np.allclose(gate @ basis[:, 2], basis[:, 3])
        assert np.allclose(gate @ basis[:, 3], basis[:, 2])
        assert np.allclose(gate @ basis[:, 0], basis[:, 0])


class TestBellRepresentation:
    def test_perfect_pair(self):
        rho = dm_from_bell_diagonal(PERFECT)
        phi_plus = np.zeros(4, dtype=complex)
        phi_plus[0] = phi_plus[3] = 1 / math.sqrt(2)
        assert np.allclose(rho, np.outer(phi_plus, phi_plus.conj()))

    def test_maximally_mixed(self):
        rho = dm_from_bell_diagonal(BellDiagonalState(0.25, 0.25, 0.25, 0.25))
        assert np.allclose(rho, np.eye(4) / 4)

    def test_werner_roundtrip(self):
        state = werner(0.8)
        rho = dm_from_bell_diagonal(state)
        check_density_matrix(rho)
        back = bell_coefficients(rho)
        assert back.as_tuple() == pytest.approx(state.as_tuple(), abs=1e-14)

    def test_non_bell_diagonal_rejected(self):
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = 1.0
        with pytest.raises(OracleError):
            bell_coefficients(rho)

    def test_invariant_checks_fire(self):
        with pytest.raises(OracleError):
            check_density_matrix(np.diag([0.7, 0.2, 0.1, 0.1]).astype(complex))


class TestPurifyOracle:
    def test_perfect_pair(self):
        out, success = dm_purify_step(PERFECT)
        assert out.as_tuple() == pytest.approx((1.0, 0.0, 0.0, 0.0), abs=1e-12)
        assert success == pytest.approx(1.0, abs=1e-12)

    def test_werner_08_matches_published_step(self):
        out, _ = dm_purify_step(werner(0.8))
        assert out.a == pytest.approx(0.838150289017341, abs=1e-10)
        assert out.b == pytest.approx(0.0115606936416185, abs=1e-10)
        assert out.c == pytest.approx(0.0115606936416185, abs=1e-10)
        assert out.d == pytest.approx(0.138728323699422, abs=1e-10)

    def test_matches_recursion_on_random_states(self):
        for state in random_states(25, seed=2):
            ref_state, ref_n = dm_purify_step(state)
            got_state, got_n = purify_step(state)
            assert ref_n == pytest.approx(got_n, abs=1e-10)
            assert ref_state.as_tuple() == pytest.approx(got_state.as_tuple(), abs=1e-10)


class TestTeleportOracle:
    def test_perfect_pair_identity_channel(self):
        ch = dm_teleport_channel(PERFECT)
        assert (ch.p_x, ch.p_y, ch.p_z) == pytest.approx((0.0, 0.0, 0.0), abs=1e-12)

    def test_psi_plus_pair_pure_x(self):
        ch = dm_teleport_channel(BellDiagonalState(0.0, 0.0, 1.0, 0.0))
        assert (ch.p_x, ch.p_y, ch.p_z) == pytest.approx((1.0, 0.0, 0.0), abs=1e-12)

    def test_werner_09_depolarizing(self):
        ch = dm_teleport_channel(werner(0.9))
        assert (ch.p_x, ch.p_y, ch.p_z) == pytest.approx(
            (1 / 30, 1 / 30, 1 / 30), abs=1e-12
        )

    def test_matches_cbd_mapping_on_random_states(self):
        for state in random_states(25, seed=4):
            ref = dm_teleport_channel(state)
            got = channel_of(state)
            assert (ref.p_x, ref.p_y, ref.p_z) == pytest.approx(
                (got.p_x, got.p_y, got.p_z), abs=1e-10
            )


class TestSwapOracle:
    def test_perfect_pair(self):
        out = dm_swap_step(PERFECT)
        assert out.as_tuple() == pytest.approx((1.0, 0.0, 0.0, 0.0), abs=1e-12)

    def test_purified_werner_09_asymmetry(self):
        state, _ = purify_step(werner(0.9))
        out = dm_swap_step(state)
        assert channel_of(out).a_eq == pytest.approx(25.1428571428571, rel=1e-9)

    def test_matches_recursion_on_random_states(self):
        for state in random_states(25, seed=6):
            ref = dm_swap_step(state)
            got = swap_step(state)
            assert ref.as_tuple() == pytest.approx(got.as_tuple(), abs=1e-10)
