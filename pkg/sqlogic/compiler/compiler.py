"""Lower a proposition into the two-stage measurement protocol."""
from __future__ import annotations

import logging

from sqlogic.const import AND_SLOT_PREFIX, PARITY_SLOT_PREFIX, READOUT_SLOT
from sqlogic.exceptions import UnsupportedPreparation
from sqlogic.models import (
    Circuit,
    ConditionalUnitary,
    Discard,
    Elementary,
    ElementaryAssignment,
    GeneralizedMeasure,
    Instruction,
    Not,
    PrepPath,
    ProjectiveMeasure,
    Proposition,
    QubitRole,
    RegisterLayout,
    Relabel,
    RoleKind,
    Unitary,
    Wire,
)
from sqlogic.oracle import CNOT, PAULI_X
from sqlogic.proposition import (
    canonicalize,
    iter_postorder,
    leaves,
    print_proposition,
    reduction_schedule,
)

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

_LOGGER = logging.getLogger("sqlogic.log")


class ProtocolCompiler:
    """Compile propositions against one elementary assignment."""

    def __init__(
        self,
        assignment: ElementaryAssignment,
        prep_path: PrepPath = PrepPath.DIRECT,
    ) -> None:
        """Initialize the compiler."""
        self.assignment = assignment
        self.prep_path = prep_path
        self._success, self._failure = build_coherent_and_pair()

    def compile(self, proposition: Proposition) -> Circuit:
        """Return the circuit testing proposition on the system wire."""
        canonical = canonicalize(proposition)
        schedule = reduction_schedule(canonical)
        labels = leaves(canonical)
        for label in labels:
            self.assignment.projector(label)

        if self.prep_path is PrepPath.TELEPORT:
            layout, instructions, leaf_slots = self._teleport_stage(labels)
        else:
            layout, instructions, leaf_slots = self._direct_stage(labels)
        stage_boundary = len(instructions)

        root_slot, and_slots = self._reduction_stage(canonical, leaf_slots, instructions)
        instructions.append(
            ProjectiveMeasure((root_slot,), (KET0_PROJECTOR, KET1_PROJECTOR), READOUT_SLOT)
        )
        circuit = Circuit(
            proposition=print_proposition(canonical),
            prep_path=self.prep_path,
            layout=layout,
            instructions=tuple(instructions),
            readout_slot=READOUT_SLOT,
            root_slot=root_slot,
            stage_boundary=stage_boundary,
            success_slots=frozenset(and_slots),
        )
        _LOGGER.info(
            'Compiled "%s" via %s path: %s wires, %s reduction steps, %s instructions',
            circuit.proposition,
            self.prep_path.value,
            len(layout.wires),
            len(schedule),
            len(instructions),
        )
        return circuit

    @staticmethod
    def _leaf_tag(label: str, position: int, labels: list[str]) -> str:
        return label if labels.count(label) == 1 else f"{label}@{position}"

    def _teleport_stage(
        self, labels: list[str]
    ) -> tuple[RegisterLayout, list[Instruction], list[int]]:
        """Bell-pair chain x, x' per leaf, then f; psi enters on the first leaf qubit."""
        for label in labels:
            if not self.assignment.is_rank_one_qubit(label):
                raise UnsupportedPreparation(
                    f'Teleport preparation needs rank-1 qubit projectors, "{label}" is not'
                )
        wires: list[Wire] = []
        for position, label in enumerate(labels):
            tag = self._leaf_tag(label, position, labels)
            wires.append(Wire(2 * position, QubitRole(RoleKind.ELEMENTARY, tag)))
            wires.append(Wire(2 * position + 1, QubitRole(RoleKind.PRIMED, f"{tag}'")))
        system_slot = 2 * len(labels)
        wires.append(Wire(system_slot, QubitRole(RoleKind.SYSTEM, "f"), dim=2))
        leaf_slots = [2 * position for position in range(len(labels))]
        chain = [*leaf_slots[1:], system_slot]
        layout = RegisterLayout(
            wires=tuple(wires),
            input_slot=leaf_slots[0],
            system_slot=system_slot,
            bell_pairs=tuple(
                (slot + 1, next_slot) for slot, next_slot in zip(leaf_slots, chain)
            ),
        )

        instructions: list[Instruction] = []
        for position, (label, slot, next_slot) in enumerate(zip(labels, leaf_slots, chain)):
            unitary = build_elementary_unitary(
                state_of_rank_one(self.assignment.projector(label))
            )
            parity_slot = f"{PARITY_SLOT_PREFIX}:{position}"
            pair = (slot, slot + 1)
            instructions.extend(
                [
                    Unitary(pair, teleport_local_unitary(unitary), f"U_{label}^dag*U_{label}^T"),
                    ProjectiveMeasure(pair, (PARITY_EVEN, PARITY_ODD), parity_slot),
                    ConditionalUnitary(
                        (parity_slot, 1),
                        (next_slot,),
                        teleport_correction(unitary),
                        f"U_{label}*X*U_{label}^dag",
                    ),
                    Unitary(pair, CNOT, "CNOT"),
                    Discard(slot + 1),
                ]
            )
        return layout, instructions, leaf_slots

    def _direct_stage(
        self, labels: list[str]
    ) -> tuple[RegisterLayout, list[Instruction], list[int]]:
        """One fresh |0> ancilla per leaf, coherently recording the test on f."""
        wires = [
            Wire(position, QubitRole(RoleKind.ELEMENTARY, self._leaf_tag(label, position, labels)))
            for position, label in enumerate(labels)
        ]
        system_slot = len(labels)
        wires.append(
            Wire(system_slot, QubitRole(RoleKind.SYSTEM, "f"), dim=self.assignment.system_dim)
        )
        layout = RegisterLayout(
            wires=tuple(wires), input_slot=system_slot, system_slot=system_slot
        )
        instructions: list[Instruction] = [
            Unitary(
                (position, system_slot),
                direct_recording_unitary(self.assignment.projector(label)),
                f"record_{label}",
            )
            for position, label in enumerate(labels)
        ]
        return layout, instructions, list(range(len(labels)))

    def _reduction_stage(
        self,
        proposition: Proposition,
        leaf_slots: list[int],
        instructions: list[Instruction],
    ) -> tuple[int, list[str]]:
        """Append NOT and coherent-AND steps; return the root slot and AND result slots."""
        result_slot: dict[int, int] = {}
        and_slots: list[str] = []
        next_leaf = iter(leaf_slots)
        for entry in iter_postorder(proposition):
            node = entry.node
            if isinstance(node, Elementary):
                result_slot[entry.index] = next(next_leaf)
                continue
            role = QubitRole(RoleKind.SUBPROPOSITION, print_proposition(node))
            if isinstance(node, Not):
                slot = result_slot[entry.children[0]]
                instructions.append(Unitary((slot,), PAULI_X, "X"))
            else:
                slot, right = (result_slot[child] for child in entry.children)
                and_slot = f"{AND_SLOT_PREFIX}:{len(and_slots)}"
                and_slots.append(and_slot)
                instructions.append(
                    GeneralizedMeasure(
                        (slot, right), (self._success, self._failure), and_slot, 1
                    )
                )
                # M_s leaves the right operand in |1>
                instructions.append(Discard(right, expect=1))
            instructions.append(Relabel(slot, role))
            result_slot[entry.index] = slot
        return result_slot[len(result_slot) - 1], and_slots


def compile_proposition(
    proposition: Proposition,
    assignment: ElementaryAssignment,
    prep_path: PrepPath = PrepPath.DIRECT,
) -> Circuit:
    """Compile proposition into the two-stage protocol."""
    return ProtocolCompiler(assignment, prep_path).compile(proposition)
