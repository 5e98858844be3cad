"""Sqlogic models."""
# flake8: noqa
from .circuit import (
    Circuit,
    CircuitViolation,
    ConditionalUnitary,
    Discard,
    GeneralizedMeasure,
    Instruction,
    ProjectiveMeasure,
    QubitRole,
    RegisterLayout,
    Relabel,
    Unitary,
    Wire,
)
from .proposition import (
    BinaryNode,
    Elementary,
    Not,
    Proposition,
    SeqAnd,
    SeqXor,
)
from .reports import (
    AnalyticReport,
    CheckResult,
    PairCheck,
    ParseReport,
    PhysicalityReport,
    RetryReport,
    TrialStats,
    VerificationReport,
)
from .simulation import RunOutcome, SimState
from .states import (
    ComplexMatrix,
    ComplexVector,
    ElementaryAssignment,
    StateKet,
    max_abs,
)
from .static import CheckKind, PrepPath, RoleKind, VerifyMode
