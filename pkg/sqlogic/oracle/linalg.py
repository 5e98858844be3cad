"""Dense linear-algebra helpers used by the oracle and the compiler."""
from __future__ import annotations

import numpy as np

from sqlogic.const import ALGEBRA_TOLERANCE
from sqlogic.exceptions import DimensionMismatch, InvalidState, NotPositiveSemidefinite
from sqlogic.models import ComplexMatrix, StateKet, max_abs

SQRT_HALF = 1.0 / np.sqrt(2.0)

PAULI_X: ComplexMatrix = np.array([[0, 1], [1, 0]], dtype=np.complex128)
CNOT: ComplexMatrix = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
)


def ket_plus() -> StateKet:
    """(|0> + |1>)/sqrt(2)."""
    return StateKet(np.array([SQRT_HALF, SQRT_HALF], dtype=np.complex128))


def ket_minus() -> StateKet:
    """(|0> - |1>)/sqrt(2)."""
    return StateKet(np.array([SQRT_HALF, -SQRT_HALF], dtype=np.complex128))


def require_normalized(psi: StateKet) -> None:
    """Raise InvalidState unless psi is normalized."""
    if not psi.is_normalized():
        raise InvalidState(f"State is not normalized (squared norm {psi.norm_squared!r})")


def projector_from_state(psi: StateKet) -> ComplexMatrix:
    """Rank-1 projector |psi><psi|."""
    require_normalized(psi)
    return np.outer(psi.amplitudes, psi.amplitudes.conj())


def fix_phase(vector: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the first nonzero amplitude is real positive."""
    nonzero = np.flatnonzero(np.abs(vector) > ALGEBRA_TOLERANCE)
    if nonzero.size == 0:
        return vector
    pivot = vector[nonzero[0]]
    return vector * (abs(pivot) / pivot)


def fidelity(left: StateKet, right: StateKet) -> float:
    """Overlap |<l|r>|^2 / (|l|^2 |r|^2), insensitive to global phase."""
    if left.dim != right.dim:
        raise DimensionMismatch(f"Can not compare states of dim {left.dim} and {right.dim}")
    denominator = left.norm_squared * right.norm_squared
    if denominator == 0.0:
        return 0.0
    overlap = np.vdot(left.amplitudes, right.amplitudes)
    return float(abs(overlap) ** 2 / denominator)


def matrix_sqrt_psd(matrix: ComplexMatrix) -> ComplexMatrix:
    """Unique positive semidefinite square root via the spectral decomposition."""
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatch(f"Square matrix expected, got shape {matrix.shape}")
    if max_abs(matrix - matrix.conj().T) > ALGEBRA_TOLERANCE:
        raise NotPositiveSemidefinite("Matrix is not Hermitian")
    eigenvalues, eigenvectors = np.linalg.eigh(matrix)
    if eigenvalues.size and eigenvalues.min() < -ALGEBRA_TOLERANCE:
        raise NotPositiveSemidefinite(
            f"Matrix has negative eigenvalue {eigenvalues.min():.3e}"
        )
    roots = np.sqrt(np.clip(eigenvalues, 0.0, None))
    return (eigenvectors * roots) @ eigenvectors.conj().T


def completeness_defect(operators: list[ComplexMatrix] | tuple[ComplexMatrix, ...]) -> float:
    """Max-abs entry of sum M^dag M - I."""
    dim = operators[0].shape[1]
    total = sum(operator.conj().T @ operator for operator in operators)
    return max_abs(total - np.eye(dim))


def unitarity_defect(matrix: ComplexMatrix) -> float:
    """Max-abs entry of U^dag U - I."""
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return float("inf")
    return max_abs(matrix.conj().T @ matrix - np.eye(matrix.shape[0]))


def is_valid_test_pair(operator: ComplexMatrix) -> tuple[bool, float]:
    """Check that {A, I - A} is a pair of generalized measurement operators."""
    operator = np.asarray(operator, dtype=np.complex128)
    if operator.ndim != 2 or operator.shape[0] != operator.shape[1]:
        raise DimensionMismatch(f"Square matrix expected, got shape {operator.shape}")
    complement = np.eye(operator.shape[0]) - operator
    defect = completeness_defect([operator, complement])
    return defect <= ALGEBRA_TOLERANCE, defect


def coherent_and_matrix() -> ComplexMatrix:
    """A = |0>(<00| + <01| + <10|) + |1><11|, a 2x4 map from two result qubits."""
    matrix = np.zeros((2, 4), dtype=np.complex128)
    matrix[0, 0:3] = 1.0
    matrix[1, 3] = 1.0
    return matrix


def coherent_and_spectrum() -> tuple[np.ndarray, ComplexMatrix]:
    """Eigenvalues (descending) and eigenvectors of A^dag A."""
    gram = coherent_and_matrix().conj().T @ coherent_and_matrix()
    eigenvalues, eigenvectors = np.linalg.eigh(gram)
    order = np.argsort(eigenvalues)[::-1]
    return eigenvalues[order], eigenvectors[:, order]


def coherent_and_obstruction() -> float:
    """Largest eigenvalue of A^dag A; above 1 means A is no measurement operator."""
    eigenvalues, _ = coherent_and_spectrum()
    return float(eigenvalues[0])
