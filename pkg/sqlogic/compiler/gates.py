"""Fixed and assignment-dependent gate matrices of the protocol."""
from __future__ import annotations

import numpy as np

from sqlogic.exceptions import UnsupportedPreparation
from sqlogic.models import ComplexMatrix, StateKet
from sqlogic.oracle import PAULI_X, fix_phase, matrix_sqrt_psd, require_normalized

PARITY_EVEN: ComplexMatrix = np.diag([1, 0, 0, 1]).astype(np.complex128)
PARITY_ODD: ComplexMatrix = np.diag([0, 1, 1, 0]).astype(np.complex128)
KET0_PROJECTOR: ComplexMatrix = np.diag([1, 0]).astype(np.complex128)
KET1_PROJECTOR: ComplexMatrix = np.diag([0, 1]).astype(np.complex128)


def build_elementary_unitary(psi_x: StateKet) -> ComplexMatrix:
    """U_x with U_x|1> = psi_x and U_x|0> = the phase-fixed orthogonal state."""
    if psi_x.dim != 2:
        raise UnsupportedPreparation(f"Elementary unitary needs a qubit state, got dim {psi_x.dim}")
    require_normalized(psi_x)
    alpha, beta = psi_x.amplitudes
    orthogonal = fix_phase(np.array([-np.conj(beta), np.conj(alpha)], dtype=np.complex128))
    return np.column_stack([orthogonal, psi_x.amplitudes])


def state_of_rank_one(projector: ComplexMatrix) -> StateKet:
    """Phase-fixed unit vector spanning a rank-1 projector."""
    eigenvalues, eigenvectors = np.linalg.eigh(projector)
    return StateKet(fix_phase(eigenvectors[:, int(np.argmax(eigenvalues))]))


def teleport_local_unitary(unitary: ComplexMatrix) -> ComplexMatrix:
    """U^dag (x) U^T on (x, x')."""
    return np.kron(unitary.conj().T, unitary.T)


def teleport_correction(unitary: ComplexMatrix) -> ComplexMatrix:
    """U X U^dag, applied to the next chain qubit on the odd parity outcome."""
    return unitary @ PAULI_X @ unitary.conj().T


def direct_recording_unitary(projector: ComplexMatrix) -> ComplexMatrix:
    """Sum_jk |j><k| (x) [x^(j xor k)] = X (x) [x] + I (x) [!x] on (ancilla, system)."""
    identity = np.eye(projector.shape[0], dtype=np.complex128)
    return np.kron(PAULI_X, projector) + np.kron(np.eye(2), identity - projector)


def build_coherent_and_pair() -> tuple[ComplexMatrix, ComplexMatrix]:
    """(M_s, M_f) on two result qubits; M_s writes the AND into the first, sets the second to |1>."""
    success = np.zeros((4, 4), dtype=np.complex128)
    # |01>(<00| + <01| + <10|)
    success[1, 0:3] = 1.0
    # |11><11|
    success[3, 3] = 1.0
    success /= np.sqrt(3.0)
    failure = matrix_sqrt_psd(np.eye(4) - success.conj().T @ success)
    return success, failure
