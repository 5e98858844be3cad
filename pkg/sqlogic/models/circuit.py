"""Instruction-level intermediate representation."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from sqlogic.models.states import ComplexMatrix
from sqlogic.models.static import PrepPath, RoleKind


@dataclass(frozen=True)
class QubitRole:
    """Meaning of a register wire, e.g. the ancilla of leaf 2 labelled "b"."""

    kind: RoleKind
    tag: str

    def __str__(self) -> str:
        """Return string representation."""
        return f"{self.kind.value}({self.tag})"


@dataclass(frozen=True)
class Wire:
    """Register slot. Qubits have dim 2, the system wire has the system dimension."""

    slot: int
    role: QubitRole
    dim: int = 2


@dataclass(frozen=True, eq=False)
class Unitary:
    """Unitary acting on the joint space of targets (first target most significant)."""

    targets: tuple[int, ...]
    matrix: ComplexMatrix
    name: str = ""


@dataclass(frozen=True, eq=False)
class ProjectiveMeasure:
    """Projective measurement recording the outcome index in a result slot."""

    targets: tuple[int, ...]
    projectors: tuple[ComplexMatrix, ...]
    result_slot: str


@dataclass(frozen=True, eq=False)
class GeneralizedMeasure:
    """Measurement with operators M_i, sum M_i^dag M_i = I; failure_index aborts the run."""

    targets: tuple[int, ...]
    operators: tuple[ComplexMatrix, ...]
    result_slot: str
    failure_index: int


@dataclass(frozen=True, eq=False)
class ConditionalUnitary:
    """Unitary applied only when a result slot holds the given outcome."""

    condition: tuple[str, int]
    targets: tuple[int, ...]
    matrix: ComplexMatrix
    name: str = ""


@dataclass(frozen=True)
class Discard:
    """Remove a disentangled qubit; expect pins it to a computational basis state."""

    target: int
    expect: int | None = None


@dataclass(frozen=True)
class Relabel:
    """Give a wire a new role; the slot index never changes."""

    target: int
    role: QubitRole


Instruction = Union[
    Unitary, ProjectiveMeasure, GeneralizedMeasure, ConditionalUnitary, Discard, Relabel
]


@dataclass(frozen=True)
class RegisterLayout:
    """Initial register: wires in tensor order, input state wire and Bell pairs."""

    wires: tuple[Wire, ...]
    input_slot: int
    system_slot: int
    bell_pairs: tuple[tuple[int, int], ...] = ()

    def wire(self, slot: int) -> Wire:
        """Return the wire for a slot."""
        return next(wire for wire in self.wires if wire.slot == slot)


@dataclass(frozen=True)
class Circuit:
    """Compiled two-stage protocol."""

    proposition: str
    prep_path: PrepPath
    layout: RegisterLayout
    instructions: tuple[Instruction, ...]
    readout_slot: str
    root_slot: int
    # instructions before this index form stage 1
    stage_boundary: int
    # result slots whose failure index must be avoided
    success_slots: frozenset[str] = field(default_factory=frozenset)

    def count(self, kind: type) -> int:
        """Number of instructions of a given type."""
        return sum(1 for instruction in self.instructions if isinstance(instruction, kind))


@dataclass(frozen=True)
class CircuitViolation:
    """Static validation finding; index -1 refers to the layout."""

    index: int
    message: str
