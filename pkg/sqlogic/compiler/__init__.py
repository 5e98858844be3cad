"""Lowering of propositions into executable measurement circuits."""
from .compiler import ProtocolCompiler, compile_proposition
from .dump import dump_circuit
from .gates import (
    KET0_PROJECTOR,
    KET1_PROJECTOR,
    PARITY_EVEN,
    PARITY_ODD,
    build_coherent_and_pair,
    build_elementary_unitary,
    direct_recording_unitary,
    state_of_rank_one,
    teleport_correction,
    teleport_local_unitary,
)
from .validation import CircuitValidator, validate

__all__ = [
    "KET0_PROJECTOR",
    "KET1_PROJECTOR",
    "PARITY_EVEN",
    "PARITY_ODD",
    "CircuitValidator",
    "ProtocolCompiler",
    "build_coherent_and_pair",
    "build_elementary_unitary",
    "compile_proposition",
    "direct_recording_unitary",
    "dump_circuit",
    "state_of_rank_one",
    "teleport_correction",
    "teleport_local_unitary",
    "validate",
]
