"""Exact density-matrix reference for teleportation, purification and swapping.

Simulates the actual circuits on up to 4 qubits (16x16 complex matrices)
with projective measurements modeled as projection plus renormalization,
averaging over outcomes.  Everything here is deterministic and serves as
an independent cross-check of the closed-form recursions in `states`.
"""

from __future__ import annotations

import math

import numpy as np

from .states import BellDiagonalState, PauliChannel

_HERMITICITY_TOL = 1e-12
_PSD_TOL = 1e-10
_PROJECTION_TOL = 1e-14
_OFFDIAG_TOL = 1e-10

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = (X + Z) / math.sqrt(2)


class OracleError(RuntimeError):
    """A numerical consistency check inside the reference simulation failed."""


def rx(theta: float) -> np.ndarray:
    """x-axis rotation cos(theta/2) I - i sin(theta/2) X."""
    return math.cos(theta / 2) * I2 - 1j * math.sin(theta / 2) * X


def embed(gate: np.ndarray, qubit: int, n_qubits: int) -> np.ndarray:
    """Single-qubit gate acting on one qubit of an n-qubit register."""
    ops = [I2] * n_qubits
    ops[qubit] = gate
    out = ops[0]
    for op in ops[1:]:
        out = np.kron(out, op)
    return out


def cnot(control: int, target: int, n_qubits: int) -> np.ndarray:
    """CNOT on arbitrary qubit indices (big-endian bit order)."""
    dim = 2**n_qubits
    mat = np.zeros((dim, dim), dtype=complex)
    for j in range(dim):
        cbit = (j >> (n_qubits - 1 - control)) & 1
        jj = j ^ (cbit << (n_qubits - 1 - target))
        mat[jj, j] = 1.0
    return mat


def _ket(bits: str) -> np.ndarray:
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


BELL_VECTORS = {
    "phi+": (_ket("00") + _ket("11")) / math.sqrt(2),
    "psi-": (_ket("01") - _ket("10")) / math.sqrt(2),
    "psi+": (_ket("01") + _ket("10")) / math.sqrt(2),
    "phi-": (_ket("00") - _ket("11")) / math.sqrt(2),
}
_BELL_ORDER = ("phi+", "psi-", "psi+", "phi-")


def check_density_matrix(rho: np.ndarray) -> None:
    """Assert Hermiticity, unit trace and positive semidefiniteness."""
    if np.max(np.abs(rho - rho.conj().T)) > _HERMITICITY_TOL:
        raise OracleError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > _HERMITICITY_TOL:
        raise OracleError(f"trace is {np.trace(rho).real}, expected 1")
    if np.min(np.linalg.eigvalsh(rho)) < -_PSD_TOL:
        raise OracleError("density matrix has a significantly negative eigenvalue")


def dm_from_bell_diagonal(state: BellDiagonalState) -> np.ndarray:
    rho = np.zeros((4, 4), dtype=complex)
    for weight, name in zip(state.as_tuple(), _BELL_ORDER):
        v = BELL_VECTORS[name]
        rho += weight * np.outer(v, v.conj())
    return rho


def bell_coefficients(rho: np.ndarray) -> BellDiagonalState:
    """Extract (A, B, C, D); off-diagonal Bell-basis terms must be tiny."""
    vecs = [BELL_VECTORS[name] for name in _BELL_ORDER]
    for i, vi in enumerate(vecs):
        for j, vj in enumerate(vecs):
            if i != j and abs(vi.conj() @ rho @ vj) > _OFFDIAG_TOL:
                raise OracleError("state is not Bell-diagonal")
    coeffs = [float((v.conj() @ rho @ v).real) for v in vecs]
    return BellDiagonalState.normalized(*(max(c, 0.0) for c in coeffs))


def _measurement_projectors(qubit: int, n_qubits: int) -> tuple[np.ndarray, np.ndarray]:
    p0 = np.array([[1, 0], [0, 0]], dtype=complex)
    p1 = np.array([[0, 0], [0, 1]], dtype=complex)
    return embed(p0, qubit, n_qubits), embed(p1, qubit, n_qubits)


def _partial_trace_last_two(rho: np.ndarray) -> np.ndarray:
    """Trace out qubits 2 and 3 of a 4-qubit state, keeping qubits 0 and 1."""
    r = rho.reshape(4, 4, 4, 4)
    return np.einsum("ikjk->ij", r)


def dm_purify_step(state: BellDiagonalState) -> tuple[BellDiagonalState, float]:
    """Circuit-level purification of two copies of the pair.

    Qubits (0, 1) form the kept pair, (2, 3) the sacrificed pair; qubits 0
    and 2 sit at one node, 1 and 3 at the other.  Local rotations, the two
    cross CNOTs, then measurement of qubits 2 and 3 post-selected on
    agreeing outcomes.
    """
    rho = np.kron(dm_from_bell_diagonal(state), dm_from_bell_diagonal(state))
    u = (
        cnot(1, 3, 4)
        @ cnot(0, 2, 4)
        @ embed(rx(math.pi / 2), 0, 4)
        @ embed(rx(-math.pi / 2), 1, 4)
        @ embed(rx(math.pi / 2), 2, 4)
        @ embed(rx(-math.pi / 2), 3, 4)
    )
    rho = u @ rho @ u.conj().T
    p0_q2, p1_q2 = _measurement_projectors(2, 4)
    p0_q3, p1_q3 = _measurement_projectors(3, 4)
    agree = p0_q2 @ p0_q3 + p1_q2 @ p1_q3
    kept = agree @ rho @ agree.conj().T
    success = float(np.trace(kept).real)
    if success < _PROJECTION_TOL:
        raise OracleError("post-selection probability vanished")
    pair = _partial_trace_last_two(kept / success)
    check_density_matrix(pair)
    return bell_coefficients(pair), success


def _teleport_output(rho3: np.ndarray) -> np.ndarray:
    """Measure qubits 0 and 1, apply X^m2 Z^m1 on qubit 2, average outcomes."""
    u = embed(H, 0, 3) @ cnot(0, 1, 3)
    rho3 = u @ rho3 @ u.conj().T
    out = np.zeros((2, 2), dtype=complex)
    for m1 in (0, 1):
        for m2 in (0, 1):
            proj = (
                _measurement_projectors(0, 3)[m1]
                @ _measurement_projectors(1, 3)[m2]
            )
            branch = proj @ rho3 @ proj.conj().T
            correction = np.linalg.matrix_power(X, m2) @ np.linalg.matrix_power(Z, m1)
            fix = embed(correction, 2, 3)
            branch = fix @ branch @ fix.conj().T
            # trace out qubits 0 and 1 (they are in a definite basis state)
            out += branch.reshape(4, 2, 4, 2).trace(axis1=0, axis2=2)
    return out


def dm_teleport_channel(state: BellDiagonalState) -> PauliChannel:
    """Fit the teleportation-through-a-noisy-pair map to a Pauli channel.

    Teleports a tomographically complete set of inputs, reconstructs the
    Pauli transfer matrix, and checks it is diagonal before reading off the
    flip probabilities.
    """
    pair = dm_from_bell_diagonal(state)

    def send(psi: np.ndarray) -> np.ndarray:
        rho_in = np.outer(psi, psi.conj())
        return _teleport_output(np.kron(rho_in, pair))

    zero, one = _ket("0"), _ket("1")
    plus = (zero + one) / math.sqrt(2)
    plus_i = (zero + 1j * one) / math.sqrt(2)
    out_0, out_1 = send(zero), send(one)
    e_i = out_0 + out_1
    e_z = out_0 - out_1
    e_x = 2 * send(plus) - e_i
    e_y = 2 * send(plus_i) - e_i

    paulis = (I2, X, Y, Z)
    images = (e_i, e_x, e_y, e_z)
    ptm = np.array(
        [[(p.conj().T @ img).trace().real / 2 for img in images] for p in paulis]
    )
    diag = np.diag(np.diag(ptm))
    if np.max(np.abs(ptm - diag)) > _OFFDIAG_TOL or abs(ptm[0, 0] - 1.0) > _OFFDIAG_TOL:
        raise OracleError("teleportation map is not a Pauli channel")
    lx, ly, lz = (float(ptm[i, i]) for i in (1, 2, 3))
    return PauliChannel(
        p_x=max((1 + lx - ly - lz) / 4, 0.0),
        p_y=max((1 - lx + ly - lz) / 4, 0.0),
        p_z=max((1 - lx - ly + lz) / 4, 0.0),
    )


def dm_swap_step(state: BellDiagonalState) -> BellDiagonalState:
    """Circuit-level entanglement swapping of two copies of the pair.

    Pairs (0, 1) and (2, 3); the middle node Bell-measures qubits 1 and 2
    and the outcome-dependent correction lands on qubit 3, leaving the
    joined pair on qubits (0, 3).
    """
    rho = np.kron(dm_from_bell_diagonal(state), dm_from_bell_diagonal(state))
    u = embed(H, 1, 4) @ cnot(1, 2, 4)
    rho = u @ rho @ u.conj().T
    out = np.zeros((4, 4), dtype=complex)
    for m1 in (0, 1):
        for m2 in (0, 1):
            proj = (
                _measurement_projectors(1, 4)[m1]
                @ _measurement_projectors(2, 4)[m2]
            )
            branch = proj @ rho @ proj.conj().T
            correction = np.linalg.matrix_power(X, m2) @ np.linalg.matrix_power(Z, m1)
            fix = embed(correction, 3, 4)
            branch = fix @ branch @ fix.conj().T
            out += _trace_middle(branch)
    check_density_matrix(out)
    return bell_coefficients(out)


def _trace_middle(rho: np.ndarray) -> np.ndarray:
    """Trace out qubits 1 and 2 of a 4-qubit state, keeping qubits 0 and 3."""
    r = rho.reshape(2, 2, 2, 2, 2, 2, 2, 2)  # (q0 q1 q2 q3) x (q0 q1 q2 q3)
    return np.einsum("abcdebch->adeh", r).reshape(4, 4)
