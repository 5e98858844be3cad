"""Line-oriented circuit dump, stable across runs for diffing."""
from __future__ import annotations

import json

from sqlogic.const import FORMAT_VERSION
from sqlogic.models import (
    Circuit,
    ConditionalUnitary,
    Discard,
    GeneralizedMeasure,
    Instruction,
    ProjectiveMeasure,
    Relabel,
    Unitary,
)
from sqlogic.util import matrix_to_pairs


def _json(value: object) -> str:
    return json.dumps(value, separators=(",", ":"))


def _instruction_line(index: int, instruction: Instruction) -> str:
    if isinstance(instruction, Unitary):
        fields = f"unitary name={instruction.name} targets={_json(instruction.targets)} matrix={_json(matrix_to_pairs(instruction.matrix))}"
    elif isinstance(instruction, ConditionalUnitary):
        slot, value = instruction.condition
        fields = f"conditional_unitary name={instruction.name} if={slot}=={value} targets={_json(instruction.targets)} matrix={_json(matrix_to_pairs(instruction.matrix))}"
    elif isinstance(instruction, ProjectiveMeasure):
        fields = f"projective_measure slot={instruction.result_slot} targets={_json(instruction.targets)} projectors={_json([matrix_to_pairs(p) for p in instruction.projectors])}"
    elif isinstance(instruction, GeneralizedMeasure):
        fields = f"generalized_measure slot={instruction.result_slot} failure={instruction.failure_index} targets={_json(instruction.targets)} operators={_json([matrix_to_pairs(m) for m in instruction.operators])}"
    elif isinstance(instruction, Discard):
        expect = "any" if instruction.expect is None else str(instruction.expect)
        fields = f"discard target={instruction.target} expect={expect}"
    else:
        relabel: Relabel = instruction
        fields = f"relabel target={relabel.target} role={relabel.role}"
    return f"{index:04d} {fields}"


def dump_circuit(circuit: Circuit) -> str:
    """Render the circuit, one instruction per line."""
    layout = circuit.layout
    lines = [
        f"format_version {FORMAT_VERSION}",
        f"proposition {circuit.proposition}",
        f"prep_path {circuit.prep_path.value}",
    ]
    lines.extend(f"wire {wire.slot} {wire.role} dim={wire.dim}" for wire in layout.wires)
    lines.append(f"input {layout.input_slot}")
    lines.append(f"system {layout.system_slot}")
    lines.extend(f"bell {first} {second}" for first, second in layout.bell_pairs)
    lines.append(f"stage_boundary {circuit.stage_boundary}")
    lines.append(f"readout {circuit.readout_slot} root={circuit.root_slot}")
    lines.append(f"success_slots {_json(sorted(circuit.success_slots))}")
    lines.extend(
        _instruction_line(index, instruction)
        for index, instruction in enumerate(circuit.instructions)
    )
    return "\n".join(lines) + "\n"
