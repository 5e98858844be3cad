"""Exceptions for the sequential quantum logic library."""
from __future__ import annotations


class SQLogicException(Exception):
    """Library base exception class."""


class PropositionSyntaxError(SQLogicException):
    """Proposition text does not follow the surface grammar."""

    def __init__(self, message: str, position: int) -> None:
        """Initialize with the character offset of the problem."""
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnsupportedProposition(SQLogicException):
    """Proposition uses a connective the reduction protocol can not compile."""


class UnassignedLabel(SQLogicException):
    """Elementary label without a projector or truth value."""


class DimensionMismatch(SQLogicException):
    """Operands of incompatible dimension."""


class InvalidAssignment(SQLogicException):
    """Elementary assignment is not a set of projectors."""


class InvalidState(SQLogicException):
    """State vector is not normalized or malformed."""


class NotPositiveSemidefinite(SQLogicException):
    """Matrix is not Hermitian positive semidefinite."""


class NonUnitaryOperator(SQLogicException):
    """Operator expected to be unitary is not."""


class IncompleteMeasurement(SQLogicException):
    """Measurement operators do not resolve the identity."""


class UnsupportedPreparation(SQLogicException):
    """Preparation path can not handle the given assignment."""


class ImpossibleBranch(SQLogicException):
    """Forced outcome has (numerically) zero probability."""

    def __init__(self, slot: str, outcome: int, probability: float) -> None:
        """Initialize with the offending result slot."""
        super().__init__(
            f"Outcome {outcome} of slot '{slot}' has probability {probability:.3e}"
        )
        self.slot = slot
        self.outcome = outcome
        self.probability = probability


class EntangledDiscard(SQLogicException):
    """Discarded qubit is entangled with the remaining register."""

    def __init__(self, slot: int, entanglement: float) -> None:
        """Initialize with the smallest Gram eigenvalue of the qubit."""
        super().__init__(
            f"Qubit in slot {slot} is not in a product state (defect {entanglement:.3e})"
        )
        self.slot = slot
        self.entanglement = entanglement


class CapacityExceeded(SQLogicException):
    """Register exceeds the dense simulation limits."""


class AttemptsExhausted(SQLogicException):
    """No successful run within the allowed number of attempts."""

    def __init__(self, attempts: int, failure_rate: float) -> None:
        """Initialize with the number of attempts made."""
        super().__init__(
            f"No successful outcome after {attempts} attempts (failure rate {failure_rate:.4f})"
        )
        self.attempts = attempts
        self.failure_rate = failure_rate


class UnexpectedFileContent(SQLogicException):
    """Unexpected file content."""


class DiscardStateMismatch(SQLogicException):
    """Discarded qubit is not in the computational basis state the circuit promises."""
