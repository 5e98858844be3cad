"""Static validation of compiled circuits."""
from __future__ import annotations

import logging
import math

import numpy as np

from sqlogic.const import ALGEBRA_TOLERANCE, MAX_QUBIT_EQUIVALENTS
from sqlogic.models import (
    Circuit,
    CircuitViolation,
    ConditionalUnitary,
    Discard,
    GeneralizedMeasure,
    ProjectiveMeasure,
    Relabel,
    Unitary,
    max_abs,
)
from sqlogic.oracle import completeness_defect, unitarity_defect

_LOGGER = logging.getLogger("sqlogic.log")


class CircuitValidator:
    """Collect invariant violations of a circuit without raising."""

    def __init__(self, circuit: Circuit) -> None:
        """Initialize the validator."""
        self.circuit = circuit
        self.violations: list[CircuitViolation] = []
        self._dims = {wire.slot: wire.dim for wire in circuit.layout.wires}
        self._live = set(self._dims)
        self._measured: set[str] = set()
        self._generalized: set[str] = set()

    def _flag(self, index: int, message: str) -> None:
        self.violations.append(CircuitViolation(index, message))

    def validate(self) -> list[CircuitViolation]:
        """Run every check and return the findings."""
        self._check_layout()
        for index, instruction in enumerate(self.circuit.instructions):
            if isinstance(instruction, Discard):
                self._check_discard(index, instruction)
            elif isinstance(instruction, Relabel):
                if instruction.target not in self._live:
                    self._flag(index, f"Relabel of dead slot {instruction.target}")
            elif isinstance(instruction, ProjectiveMeasure):
                self._check_projective(index, instruction)
            elif isinstance(instruction, GeneralizedMeasure):
                self._check_generalized(index, instruction)
            else:
                self._check_unitary(index, instruction)
        self._check_readout()
        for slot in self.circuit.success_slots - self._generalized:
            self._flag(-1, f"Success slot '{slot}' is not a generalized measurement")
        _LOGGER.debug(
            'Validated "%s": %s violations', self.circuit.proposition, len(self.violations)
        )
        return self.violations

    def _check_layout(self) -> None:
        layout = self.circuit.layout
        slots = [wire.slot for wire in layout.wires]
        if len(set(slots)) != len(slots):
            self._flag(-1, "Duplicate register slots")
        for slot in (layout.input_slot, layout.system_slot):
            if slot not in self._dims:
                self._flag(-1, f"Layout refers to unknown slot {slot}")
        positions = {slot: position for position, slot in enumerate(slots)}
        for first, second in layout.bell_pairs:
            if positions.get(second, -2) - positions.get(first, -2) != 1:
                self._flag(-1, f"Bell pair ({first}, {second}) is not adjacent")
            elif self._dims[first] != 2 or self._dims[second] != 2:
                self._flag(-1, f"Bell pair ({first}, {second}) is not on qubits")
            if layout.input_slot in (first, second):
                self._flag(-1, "Input slot is part of a Bell pair")
        qubit_equivalents = sum(math.log2(dim) for dim in self._dims.values())
        if qubit_equivalents > MAX_QUBIT_EQUIVALENTS:
            self._flag(-1, f"Register needs {qubit_equivalents:.1f} qubit-equivalents")

    def _check_targets(self, index: int, targets: tuple[int, ...], shape: tuple[int, ...]) -> None:
        if len(set(targets)) != len(targets):
            self._flag(index, f"Repeated targets {targets}")
        dead = [slot for slot in targets if slot not in self._live]
        if dead:
            self._flag(index, f"Targets {dead} are not live")
            return
        joint = int(np.prod([self._dims[slot] for slot in targets]))
        if shape != (joint, joint):
            self._flag(index, f"Matrix shape {shape} does not match joint dimension {joint}")

    def _check_unitary(self, index: int, instruction: Unitary | ConditionalUnitary) -> None:
        self._check_targets(index, instruction.targets, instruction.matrix.shape)
        defect = unitarity_defect(instruction.matrix)
        if defect > ALGEBRA_TOLERANCE:
            self._flag(index, f"Matrix is not unitary (defect {defect:.3e})")
        if isinstance(instruction, ConditionalUnitary):
            slot, _ = instruction.condition
            if slot not in self._measured:
                self._flag(index, f"Condition slot '{slot}' is not measured earlier")

    def _record_slot(self, index: int, slot: str) -> None:
        if slot in self._measured:
            self._flag(index, f"Result slot '{slot}' written twice")
        self._measured.add(slot)

    def _check_projective(self, index: int, instruction: ProjectiveMeasure) -> None:
        self._check_targets(index, instruction.targets, instruction.projectors[0].shape)
        for projector in instruction.projectors:
            defect = max(
                max_abs(projector @ projector - projector),
                max_abs(projector - projector.conj().T),
            )
            if defect > ALGEBRA_TOLERANCE:
                self._flag(index, f"Measurement operator is not a projector ({defect:.3e})")
        if max_abs(sum(instruction.projectors) - np.eye(instruction.projectors[0].shape[0])) > ALGEBRA_TOLERANCE:
            self._flag(index, "Projectors do not resolve the identity")
        self._record_slot(index, instruction.result_slot)

    def _check_generalized(self, index: int, instruction: GeneralizedMeasure) -> None:
        self._check_targets(index, instruction.targets, instruction.operators[0].shape)
        if len({operator.shape for operator in instruction.operators}) != 1:
            self._flag(index, "Measurement operators differ in shape")
            return
        defect = completeness_defect(instruction.operators)
        if defect > ALGEBRA_TOLERANCE:
            self._flag(index, f"Completeness violated: sum M^dag M - I = {defect:.3e}")
        if not 0 <= instruction.failure_index < len(instruction.operators):
            self._flag(index, f"Failure index {instruction.failure_index} out of range")
        self._record_slot(index, instruction.result_slot)
        self._generalized.add(instruction.result_slot)

    def _check_discard(self, index: int, instruction: Discard) -> None:
        if instruction.target not in self._live:
            self._flag(index, f"Discard of dead slot {instruction.target}")
            return
        if instruction.target == self.circuit.layout.system_slot:
            self._flag(index, "Discard of the system wire")
        self._live.discard(instruction.target)

    def _check_readout(self) -> None:
        readouts = [
            (index, instruction)
            for index, instruction in enumerate(self.circuit.instructions)
            if isinstance(instruction, ProjectiveMeasure)
            and instruction.result_slot == self.circuit.readout_slot
        ]
        if len(readouts) != 1:
            self._flag(-1, f"Expected exactly one readout, found {len(readouts)}")
            return
        index, readout = readouts[0]
        if index != len(self.circuit.instructions) - 1:
            self._flag(index, "Readout is not the final instruction")
        if readout.targets != (self.circuit.root_slot,):
            self._flag(index, f"Readout targets {readout.targets}, root is {self.circuit.root_slot}")


def validate(circuit: Circuit) -> list[CircuitViolation]:
    """Check unitarity, completeness relations and liveness of every instruction."""
    return CircuitValidator(circuit).validate()
