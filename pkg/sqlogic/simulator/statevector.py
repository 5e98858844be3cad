"""Exact dense statevector execution of compiled circuits.

The amplitude tensor has one axis per live wire in register order, so the
flattened vector is the Kronecker product in that order: the first wire is the
most significant index and the system wire, always last, varies fastest.
The system is the last Kronecker factor, not the slowest-varying first one,
so amplitudes read as |j_1..j_n> (x) psi in the same order as history states.
"""
from __future__ import annotations

from collections.abc import Iterator, Mapping
import dataclasses
import logging
import math
from typing import Protocol

import numpy as np

from sqlogic.const import (
    ALGEBRA_TOLERANCE,
    BRANCH_PRUNING_THRESHOLD,
    FORMAT_VERSION,
    MAX_QUBIT_EQUIVALENTS,
    NORM_DRIFT_TOLERANCE,
)
from sqlogic.exceptions import (
    CapacityExceeded,
    DimensionMismatch,
    DiscardStateMismatch,
    EntangledDiscard,
    ImpossibleBranch,
    IncompleteMeasurement,
    NonUnitaryOperator,
)
from sqlogic.models import (
    Circuit,
    ComplexMatrix,
    ConditionalUnitary,
    Discard,
    GeneralizedMeasure,
    ProjectiveMeasure,
    Relabel,
    RunOutcome,
    SimState,
    StateKet,
    Unitary,
    max_abs,
)
from sqlogic.oracle import completeness_defect, require_normalized, unitarity_defect
from sqlogic.util import complex_to_pair

_LOGGER = logging.getLogger("sqlogic.log")

_BELL = np.array([1, 0, 0, 1], dtype=np.complex128) / np.sqrt(2.0)


class OutcomeChooser(Protocol):
    """Picks the outcome of a measurement from its branch probabilities."""

    def choose(self, slot: str, probabilities: list[float]) -> int:
        """Return an outcome index."""


class SampledChooser:
    """Sample outcomes from a seeded numpy generator."""

    def __init__(self, generator: np.random.Generator) -> None:
        """Initialize with a generator owned by this run."""
        self.generator = generator

    def choose(self, slot: str, probabilities: list[float]) -> int:
        """Draw by the Born rule; branches below the pruning threshold never occur."""
        weights = np.array(
            [p if p >= BRANCH_PRUNING_THRESHOLD else 0.0 for p in probabilities]
        )
        return int(self.generator.choice(len(weights), p=weights / weights.sum()))


class ForcedChooser:
    """Follow a prescribed outcome for every result slot."""

    def __init__(self, outcomes: Mapping[str, int]) -> None:
        """Initialize with the branch to follow."""
        self.outcomes = outcomes

    def choose(self, slot: str, probabilities: list[float]) -> int:
        """Look the outcome up; unknown slots and indices outside the operator list are impossible."""
        try:
            index = self.outcomes[slot]
        except KeyError:
            raise ImpossibleBranch(slot, -1, 0.0)
        if not 0 <= index < len(probabilities):
            raise ImpossibleBranch(slot, index, 0.0)
        return index


def make_generator(seed: int | np.random.SeedSequence) -> np.random.Generator:
    """PCG64 generator; SeedSequence spawn keys give independent per-shot streams."""
    return np.random.Generator(np.random.PCG64(seed))


def shot_seed(seed: int, *path: int) -> np.random.SeedSequence:
    """Stream derived from the base seed and a shot path such as (shot,) or (trial, attempt)."""
    return np.random.SeedSequence(entropy=seed, spawn_key=path)


def initial_state(circuit: Circuit, psi: StateKet) -> SimState:
    """psi on the input wire, Bell pairs where the layout asks, |0> elsewhere."""
    layout = circuit.layout
    qubit_equivalents = sum(math.log2(wire.dim) for wire in layout.wires)
    if qubit_equivalents > MAX_QUBIT_EQUIVALENTS:
        raise CapacityExceeded(
            f"Register needs {qubit_equivalents:.1f} qubit-equivalents, limit {MAX_QUBIT_EQUIVALENTS}"
        )
    if psi.dim != layout.wire(layout.input_slot).dim:
        raise DimensionMismatch(
            f"Input state of dim {psi.dim} does not fit wire of dim {layout.wire(layout.input_slot).dim}"
        )
    require_normalized(psi)
    pair_starts = {first: second for first, second in layout.bell_pairs}
    vector = np.ones(1, dtype=np.complex128)
    skip: int | None = None
    for wire in layout.wires:
        if wire.slot == skip:
            continue
        if wire.slot == layout.input_slot:
            block = psi.amplitudes
        elif wire.slot in pair_starts:
            block = _BELL
            skip = pair_starts[wire.slot]
        else:
            block = np.zeros(wire.dim, dtype=np.complex128)
            block[0] = 1.0
        vector = np.kron(vector, block)
    shape = tuple(wire.dim for wire in layout.wires)
    return SimState(tensor=vector.reshape(shape), wires=layout.wires)


def _apply_operator(
    state: SimState, targets: tuple[int, ...], matrix: ComplexMatrix
) -> np.ndarray:
    """Apply matrix on the joint space of targets, first target most significant."""
    axes = [state.axis(slot) for slot in targets]
    front = list(range(len(axes)))
    moved = np.moveaxis(state.tensor, axes, front)
    joint = int(np.prod([moved.shape[axis] for axis in front]))
    if matrix.shape[1] != joint:
        raise DimensionMismatch(
            f"Operator of shape {matrix.shape} on targets {targets} of joint dim {joint}"
        )
    result = (matrix @ moved.reshape(joint, -1)).reshape(moved.shape)
    return np.moveaxis(result, front, axes)


def _check_live(state: SimState, targets: tuple[int, ...]) -> None:
    if len(set(targets)) != len(targets):
        raise DimensionMismatch(f"Repeated targets {targets}")
    for slot in targets:
        if not state.is_live(slot):
            raise DimensionMismatch(f"Slot {slot} is not live")


def apply_unitary(
    state: SimState, targets: tuple[int, ...], unitary: ComplexMatrix
) -> SimState:
    """Evolve the target subspace by a unitary."""
    _check_live(state, targets)
    defect = unitarity_defect(unitary)
    if defect > ALGEBRA_TOLERANCE:
        raise NonUnitaryOperator(f"U^dag U - I has max-abs entry {defect:.3e}")
    return dataclasses.replace(state, tensor=_apply_operator(state, targets, unitary))


def measurement_branches(
    state: SimState, targets: tuple[int, ...], operators: tuple[ComplexMatrix, ...]
) -> list[tuple[float, np.ndarray]]:
    """(probability, unnormalized collapsed tensor) for every operator."""
    branches = []
    for operator in operators:
        tensor = _apply_operator(state, targets, operator)
        branches.append((float(np.vdot(tensor, tensor).real), tensor))
    return branches


def _collapse(
    state: SimState,
    slot: str,
    index: int,
    branches: list[tuple[float, np.ndarray]],
) -> tuple[SimState, int, float]:
    probability, tensor = branches[index]
    if probability < BRANCH_PRUNING_THRESHOLD:
        raise ImpossibleBranch(slot, index, probability)
    collapsed = dataclasses.replace(
        state,
        tensor=tensor / np.sqrt(probability),
        probability=state.probability * probability,
        outcomes={**state.outcomes, slot: index},
    )
    return collapsed, index, probability


def apply_projective(
    state: SimState,
    targets: tuple[int, ...],
    projectors: tuple[ComplexMatrix, ...],
    chooser: OutcomeChooser,
    slot: str = "",
) -> tuple[SimState, int, float]:
    """Projective measurement; returns the collapsed state, outcome and its probability."""
    _check_live(state, targets)
    resolution = max_abs(sum(projectors) - np.eye(projectors[0].shape[0]))
    if resolution > ALGEBRA_TOLERANCE:
        raise IncompleteMeasurement(f"Projectors miss the identity by {resolution:.3e}")
    branches = measurement_branches(state, targets, projectors)
    index = chooser.choose(slot, [probability for probability, _ in branches])
    return _collapse(state, slot, index, branches)


def apply_generalized(
    state: SimState,
    targets: tuple[int, ...],
    operators: tuple[ComplexMatrix, ...],
    chooser: OutcomeChooser,
    slot: str = "",
) -> tuple[SimState, int, float]:
    """Generalized measurement with operators M_i, outcome i with probability |M_i phi|^2."""
    _check_live(state, targets)
    defect = completeness_defect(operators)
    if defect > ALGEBRA_TOLERANCE:
        raise IncompleteMeasurement(f"sum M^dag M - I has max-abs entry {defect:.3e}")
    branches = measurement_branches(state, targets, operators)
    index = chooser.choose(slot, [probability for probability, _ in branches])
    return _collapse(state, slot, index, branches)


def discard(state: SimState, slot: int, expect: int | None = None) -> SimState:
    """Remove a qubit whose reduced state is pure, contracting against that local state."""
    _check_live(state, (slot,))
    axis = state.axis(slot)
    dim = state.tensor.shape[axis]
    block = np.moveaxis(state.tensor, axis, 0).reshape(dim, -1)
    remaining_shape = tuple(np.delete(np.array(state.tensor.shape), axis))
    # the local Gram matrix has rank 1 iff the qubit is unentangled
    eigenvalues, eigenvectors = np.linalg.eigh(block @ block.conj().T)
    entanglement = float(eigenvalues.sum() - eigenvalues[-1])
    if entanglement > ALGEBRA_TOLERANCE:
        raise EntangledDiscard(slot, entanglement)
    if expect is None:
        local = eigenvectors[:, -1]
    else:
        weight = float(np.real(block[expect] @ block[expect].conj()))
        if weight < state.norm_squared - ALGEBRA_TOLERANCE:
            raise DiscardStateMismatch(
                f"Slot {slot} should be |{expect}> but has weight {weight:.6f} there"
            )
        local = np.zeros(dim, dtype=np.complex128)
        local[expect] = 1.0
    rest = local.conj() @ block
    rest /= np.linalg.norm(rest)
    return dataclasses.replace(
        state,
        tensor=rest.reshape(remaining_shape),
        wires=tuple(wire for wire in state.wires if wire.slot != slot),
    )


def _relabel(state: SimState, instruction: Relabel) -> SimState:
    _check_live(state, (instruction.target,))
    return dataclasses.replace(
        state,
        wires=tuple(
            dataclasses.replace(wire, role=instruction.role)
            if wire.slot == instruction.target
            else wire
            for wire in state.wires
        ),
    )


def _step(
    circuit: Circuit, state: SimState, pc: int, chooser: OutcomeChooser
) -> tuple[SimState, bool]:
    """Execute one instruction; the flag reports a realized failure outcome."""
    instruction = circuit.instructions[pc]
    if isinstance(instruction, Unitary):
        return apply_unitary(state, instruction.targets, instruction.matrix), False
    if isinstance(instruction, ConditionalUnitary):
        slot, value = instruction.condition
        if state.outcomes.get(slot) == value:
            state = apply_unitary(state, instruction.targets, instruction.matrix)
        return state, False
    if isinstance(instruction, ProjectiveMeasure):
        state, _, _ = apply_projective(
            state, instruction.targets, instruction.projectors, chooser, instruction.result_slot
        )
        return state, False
    if isinstance(instruction, GeneralizedMeasure):
        state, index, _ = apply_generalized(
            state, instruction.targets, instruction.operators, chooser, instruction.result_slot
        )
        return state, index == instruction.failure_index
    if isinstance(instruction, Discard):
        return discard(state, instruction.target, instruction.expect), False
    return _relabel(state, instruction), False


def _execute(
    circuit: Circuit,
    state: SimState,
    chooser: OutcomeChooser,
    stop: int | None = None,
) -> tuple[SimState, bool]:
    end = len(circuit.instructions) if stop is None else stop
    for pc in range(end):
        state, failed = _step(circuit, state, pc, chooser)
        if failed:
            _LOGGER.debug("Failure outcome at instruction %s", pc)
            return state, True
    drift = abs(state.norm_squared - 1.0)
    if drift > NORM_DRIFT_TOLERANCE:
        _LOGGER.warning("Amplitude norm drifted by %.3e", drift)
    return state, False


def _finish(circuit: Circuit, state: SimState, failed: bool) -> RunOutcome:
    if failed:
        return RunOutcome(
            success=False,
            truth_value=None,
            probability=state.probability,
            residual_system_state=None,
            outcomes=dict(state.outcomes),
        )
    system_slot = circuit.layout.system_slot
    for wire in state.wires:
        if wire.slot != system_slot:
            state = discard(state, wire.slot)
    return RunOutcome(
        success=True,
        truth_value=state.outcomes[circuit.readout_slot] == 1,
        probability=state.probability,
        residual_system_state=StateKet(state.vector),
        outcomes=dict(state.outcomes),
    )


def run(
    circuit: Circuit, psi: StateKet, seed: int | np.random.SeedSequence
) -> RunOutcome:
    """One sampled execution; deterministic given (circuit, psi, seed)."""
    chooser = SampledChooser(make_generator(seed))
    state, failed = _execute(circuit, initial_state(circuit, psi), chooser)
    return _finish(circuit, state, failed)


def run_forced(
    circuit: Circuit, psi: StateKet, outcomes: Mapping[str, int]
) -> RunOutcome:
    """Follow a prescribed branch; probability is the exact trajectory probability."""
    state, failed = _execute(circuit, initial_state(circuit, psi), ForcedChooser(outcomes))
    return _finish(circuit, state, failed)


def simulate_prefix(
    circuit: Circuit, psi: StateKet, outcomes: Mapping[str, int], stop: int
) -> SimState:
    """State after the first stop instructions along a prescribed branch."""
    state, _ = _execute(circuit, initial_state(circuit, psi), ForcedChooser(outcomes), stop)
    return state


def _explore(
    circuit: Circuit, state: SimState, pc: int, stop: int
) -> Iterator[tuple[SimState, bool]]:
    while pc < stop:
        instruction = circuit.instructions[pc]
        if isinstance(instruction, (ProjectiveMeasure, GeneralizedMeasure)):
            operators = (
                instruction.projectors
                if isinstance(instruction, ProjectiveMeasure)
                else instruction.operators
            )
            branches = measurement_branches(state, instruction.targets, operators)
            for index, (probability, _) in enumerate(branches):
                if probability < BRANCH_PRUNING_THRESHOLD:
                    _LOGGER.debug(
                        "Pruned outcome %s of %s (p=%.2e)",
                        index,
                        instruction.result_slot,
                        probability,
                    )
                    continue
                branch, _, _ = _collapse(state, instruction.result_slot, index, branches)
                if (
                    isinstance(instruction, GeneralizedMeasure)
                    and index == instruction.failure_index
                ):
                    yield branch, True
                else:
                    yield from _explore(circuit, branch, pc + 1, stop)
            return
        state, _ = _step(circuit, state, pc, ForcedChooser(state.outcomes))
        pc += 1
    yield state, False


def enumerate_branches(
    circuit: Circuit, psi: StateKet, stop: int | None = None
) -> list[SimState]:
    """Every non-failed branch state after stop instructions (default: all)."""
    end = len(circuit.instructions) if stop is None else stop
    return [
        state
        for state, failed in _explore(circuit, initial_state(circuit, psi), 0, end)
        if not failed
    ]


def enumerate_trajectories(circuit: Circuit, psi: StateKet) -> list[RunOutcome]:
    """All trajectories above the pruning threshold; probabilities sum to 1."""
    end = len(circuit.instructions)
    trajectories = [
        _finish(circuit, state, failed)
        for state, failed in _explore(circuit, initial_state(circuit, psi), 0, end)
    ]
    _LOGGER.debug(
        'Enumerated %s trajectories of "%s"', len(trajectories), circuit.proposition
    )
    return trajectories


def dump_amplitudes(state: SimState) -> str:
    """One basis label and [re, im] pair per line, register order."""
    header = " ".join(f"{wire.slot}:{wire.role}" for wire in state.wires)
    lines = [f"format_version {FORMAT_VERSION}", f"wires {header}"]
    for index in np.ndindex(state.tensor.shape):
        label = ",".join(str(digit) for digit in index)
        real, imag = complex_to_pair(state.tensor[index])
        lines.append(f"|{label}> [{real!r}, {imag!r}]")
    return "\n".join(lines) + "\n"
