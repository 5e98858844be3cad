"""Package for exception handling."""
from .exceptions import (
    AttemptsExhausted,
    CapacityExceeded,
    DimensionMismatch,
    DiscardStateMismatch,
    EntangledDiscard,
    ImpossibleBranch,
    IncompleteMeasurement,
    InvalidAssignment,
    InvalidState,
    NonUnitaryOperator,
    NotPositiveSemidefinite,
    PropositionSyntaxError,
    SQLogicException,
    UnassignedLabel,
    UnexpectedFileContent,
    UnsupportedPreparation,
    UnsupportedProposition,
)

__all__ = [
    "SQLogicException",
    "AttemptsExhausted",
    "CapacityExceeded",
    "DimensionMismatch",
    "DiscardStateMismatch",
    "EntangledDiscard",
    "ImpossibleBranch",
    "IncompleteMeasurement",
    "InvalidAssignment",
    "InvalidState",
    "NonUnitaryOperator",
    "NotPositiveSemidefinite",
    "PropositionSyntaxError",
    "UnassignedLabel",
    "UnexpectedFileContent",
    "UnsupportedPreparation",
    "UnsupportedProposition",
]
