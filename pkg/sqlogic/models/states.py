"""Dense linear-algebra carriers for states and projector assignments."""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from sqlogic.const import (
    ALGEBRA_TOLERANCE,
    MAX_SYSTEM_DIMENSION,
    NORMALIZATION_TOLERANCE,
)
from sqlogic.exceptions import DimensionMismatch, InvalidAssignment, UnassignedLabel

ComplexMatrix = npt.NDArray[np.complex128]
ComplexVector = npt.NDArray[np.complex128]


def max_abs(matrix: npt.ArrayLike) -> float:
    """Largest absolute entry; 0 for empty input."""
    values = np.abs(np.asarray(matrix))
    return float(values.max()) if values.size else 0.0


@dataclass(frozen=True, eq=False)
class StateKet:
    """Pure state vector, not necessarily normalized."""

    amplitudes: ComplexVector

    def __post_init__(self) -> None:
        """Store amplitudes as a flat complex copy."""
        amplitudes = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amplitudes.size == 0:
            raise DimensionMismatch("State vector must have positive dimension")
        if not np.all(np.isfinite(amplitudes)):
            raise DimensionMismatch("State vector has non-finite amplitudes")
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def basis(cls, dim: int, index: int) -> StateKet:
        """Return the computational basis ket |index> of dimension dim."""
        amplitudes = np.zeros(dim, dtype=np.complex128)
        amplitudes[index] = 1.0
        return cls(amplitudes)

    @classmethod
    def from_amplitudes(cls, amplitudes: Iterable[complex]) -> StateKet:
        """Build a ket from a sequence of complex amplitudes."""
        return cls(np.array(list(amplitudes), dtype=np.complex128))

    @property
    def dim(self) -> int:
        """Hilbert space dimension."""
        return int(self.amplitudes.size)

    @property
    def norm_squared(self) -> float:
        """Squared Euclidean norm."""
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def is_normalized(self, tolerance: float = NORMALIZATION_TOLERANCE) -> bool:
        """Check the squared norm is 1 within tolerance."""
        return abs(self.norm_squared - 1.0) <= tolerance

    def normalized(self) -> StateKet:
        """Return the ket scaled to unit norm."""
        norm = np.sqrt(self.norm_squared)
        if norm == 0.0:
            raise DimensionMismatch("Can not normalize the zero vector")
        return StateKet(self.amplitudes / norm)

    def __repr__(self) -> str:
        """Return string representation."""
        return f"StateKet(dim={self.dim}, amplitudes={np.round(self.amplitudes, 6)})"


@dataclass(frozen=True, eq=False)
class ElementaryAssignment:
    """Projectors for elementary labels on a shared system space."""

    system_dim: int
    projectors: Mapping[str, ComplexMatrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate dimension and the projector property of every matrix."""
        if not 1 <= self.system_dim <= MAX_SYSTEM_DIMENSION:
            raise InvalidAssignment(
                f"System dimension {self.system_dim} outside 1..{MAX_SYSTEM_DIMENSION}"
            )
        checked: dict[str, ComplexMatrix] = {}
        for label, matrix in self.projectors.items():
            projector = np.array(matrix, dtype=np.complex128)
            if projector.shape != (self.system_dim, self.system_dim):
                raise InvalidAssignment(
                    f'Projector for "{label}" has shape {projector.shape}, '
                    f"expected {(self.system_dim, self.system_dim)}"
                )
            if not np.all(np.isfinite(projector)):
                raise InvalidAssignment(f'Projector for "{label}" is not finite')
            hermitian_defect = max_abs(projector - projector.conj().T)
            idempotent_defect = max_abs(projector @ projector - projector)
            if max(hermitian_defect, idempotent_defect) > ALGEBRA_TOLERANCE:
                raise InvalidAssignment(
                    f'Matrix for "{label}" is not a projector '
                    f"(P-P^dag {hermitian_defect:.2e}, P^2-P {idempotent_defect:.2e})"
                )
            checked[label] = projector
        object.__setattr__(self, "projectors", checked)

    def projector(self, label: str) -> ComplexMatrix:
        """Return the projector assigned to label."""
        try:
            return self.projectors[label]
        except KeyError:
            raise UnassignedLabel(f'No projector assigned to "{label}"')

    def identity(self) -> ComplexMatrix:
        """Identity on the system space."""
        return np.eye(self.system_dim, dtype=np.complex128)

    def rank(self, label: str) -> int:
        """Rank of a projector, read off its trace."""
        return int(round(float(np.trace(self.projector(label)).real)))

    def is_rank_one_qubit(self, label: str) -> bool:
        """Check whether label is a rank-1 projector on a qubit."""
        return self.system_dim == 2 and self.rank(label) == 1
