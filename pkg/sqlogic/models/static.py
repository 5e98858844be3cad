"""Enumerations shared by compiler, simulator and harness."""
from enum import Enum


class PrepPath(Enum):
    """Stage-1 history state preparation."""

    TELEPORT = "teleport"
    DIRECT = "direct"


class RoleKind(Enum):
    """What a register wire currently stands for."""

    ELEMENTARY = "elementary"
    PRIMED = "primed"
    SUBPROPOSITION = "subproposition"
    SYSTEM = "system"


class VerifyMode(Enum):
    """Verification strategy."""

    EXACT = "exact"
    SAMPLED = "sampled"


class CheckKind(Enum):
    """How a verification check is judged."""

    DELTA = "delta"
    FIDELITY = "fidelity"
    Z_SCORE = "z_score"
    P_VALUE = "p_value"
