"""Test the dense statevector simulator."""
from itertools import product
from test.conftest import (
    all_one_assignment,
    basis_projector,
    half_half_assignment,
    random_qubit_assignment,
    random_state,
)

import numpy as np
import pytest

from sqlogic.compiler import (
    KET0_PROJECTOR,
    KET1_PROJECTOR,
    PARITY_EVEN,
    PARITY_ODD,
    build_coherent_and_pair,
    compile_proposition,
)
from sqlogic.exceptions import (
    CapacityExceeded,
    DimensionMismatch,
    DiscardStateMismatch,
    EntangledDiscard,
    ImpossibleBranch,
    NonUnitaryOperator,
)
from sqlogic.models import (
    Discard,
    ElementaryAssignment,
    GeneralizedMeasure,
    PrepPath,
    QubitRole,
    RoleKind,
    SimState,
    StateKet,
    Wire,
)
from sqlogic.oracle import (
    CNOT,
    PAULI_X,
    fidelity,
    history_state_reference,
    ket_plus,
    operator_of,
)
from sqlogic.proposition import leaves, parse_proposition
from sqlogic.simulator import (
    ForcedChooser,
    SampledChooser,
    apply_generalized,
    apply_projective,
    apply_unitary,
    discard,
    dump_amplitudes,
    enumerate_branches,
    enumerate_trajectories,
    initial_state,
    make_generator,
    run,
    run_forced,
    simulate_prefix,
)

KET0 = StateKet.basis(2, 0)
KET1 = StateKet.basis(2, 1)


def _state(amplitudes, dims: tuple[int, ...]) -> SimState:
    wires = tuple(
        Wire(slot, QubitRole(RoleKind.ELEMENTARY, str(slot)), dim)
        for slot, dim in enumerate(dims)
    )
    tensor = np.asarray(amplitudes, dtype=np.complex128).reshape(dims)
    return SimState(tensor=tensor, wires=wires)


def _bell() -> SimState:
    return _state(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2))


def test_apply_unitary():
    """Test X, identity and Bell pair creation."""
    flipped = apply_unitary(_state([1, 0], (2,)), (0,), PAULI_X)
    assert np.allclose(flipped.vector, [0, 1])
    unchanged = apply_unitary(_bell(), (0, 1), np.eye(4))
    assert np.allclose(unchanged.vector, _bell().vector)
    plus_zero = _state(np.kron(ket_plus().amplitudes, [1, 0]), (2, 2))
    assert np.allclose(apply_unitary(plus_zero, (0, 1), CNOT).vector, _bell().vector)


def test_apply_unitary_target_order():
    """Test the first target is the control of a CNOT."""
    state = _state(np.kron([1, 0], [0, 1]), (2, 2))
    assert np.allclose(apply_unitary(state, (1, 0), CNOT).vector, np.kron([0, 1], [0, 1]))
    assert np.allclose(apply_unitary(state, (0, 1), CNOT).vector, state.vector)


def test_apply_unitary_errors():
    """Test non-unitary matrices and dimension mismatches raise."""
    with pytest.raises(NonUnitaryOperator):
        apply_unitary(_state([1, 0], (2,)), (0,), 2 * PAULI_X)
    with pytest.raises(DimensionMismatch):
        apply_unitary(_state([1, 0], (2,)), (0,), np.eye(4))
    with pytest.raises(DimensionMismatch):
        apply_unitary(_bell(), (0, 0), np.eye(4))


def test_apply_projective():
    """Test Born rule outcomes and collapse."""
    state, index, probability = apply_projective(
        _bell(), (0, 1), (PARITY_EVEN, PARITY_ODD), ForcedChooser({"p": 0}), "p"
    )
    assert (index, probability) == (0, pytest.approx(1.0))
    assert state.outcomes == {"p": 0}
    _, index, probability = apply_projective(
        _state([0, 1], (2,)), (0,), (KET0_PROJECTOR, KET1_PROJECTOR), ForcedChooser({"m": 1}), "m"
    )
    assert (index, probability) == (1, pytest.approx(1.0))
    state, index, probability = apply_projective(
        _state(ket_plus().amplitudes, (2,)),
        (0,),
        (KET0_PROJECTOR, KET1_PROJECTOR),
        ForcedChooser({"m": 0}),
        "m",
    )
    assert probability == pytest.approx(0.5)
    assert state.probability == pytest.approx(0.5)
    assert np.allclose(state.vector, [1, 0])


def test_forced_impossible_branch():
    """Test zero-probability outcomes can not be forced."""
    with pytest.raises(ImpossibleBranch) as err:
        apply_projective(
            _bell(), (0, 1), (PARITY_EVEN, PARITY_ODD), ForcedChooser({"p": 1}), "p"
        )
    assert err.value.slot == "p"
    with pytest.raises(ImpossibleBranch):
        apply_projective(_bell(), (0, 1), (PARITY_EVEN, PARITY_ODD), ForcedChooser({}), "p")


def test_apply_generalized():
    """Test the coherent AND measurement on |11> and on the symmetric vector."""
    success, failure = build_coherent_and_pair()
    operators = (success, failure)
    state = _state(np.kron([0, 0, 0, 1], [1, 0]), (2, 2, 2))
    collapsed, index, probability = apply_generalized(
        state, (0, 1), operators, ForcedChooser({"and": 0}), "and"
    )
    assert (index, probability) == (0, pytest.approx(1 / 3))
    assert np.allclose(collapsed.vector, state.vector)

    symmetric = _state(np.kron(np.array([1, 1, 1, 0]) / np.sqrt(3), [1, 0]), (2, 2, 2))
    collapsed, _, probability = apply_generalized(
        symmetric, (0, 1), operators, ForcedChooser({"and": 0}), "and"
    )
    assert probability == pytest.approx(1.0)
    # the AND of the symmetric inputs is |0>, the second qubit is left in |1>
    assert np.allclose(collapsed.vector, np.kron([0, 1, 0, 0], [1, 0]))

    _, index, probability = apply_generalized(
        _state([1, 0], (2,)), (0,), (np.eye(2),), ForcedChooser({"one": 0}), "one"
    )
    assert (index, probability) == (0, pytest.approx(1.0))


def test_discard():
    """Test product qubits are removed and entangled ones refused."""
    product_state = _state(np.kron(ket_plus().amplitudes, [1, 0]), (2, 2))
    remaining = discard(product_state, 1)
    assert [wire.slot for wire in remaining.wires] == [0]
    assert fidelity(StateKet(remaining.vector), ket_plus()) == pytest.approx(1.0)
    with pytest.raises(EntangledDiscard) as err:
        discard(_bell(), 1)
    assert err.value.entanglement == pytest.approx(0.5)
    with pytest.raises(DiscardStateMismatch):
        discard(product_state, 1, expect=1)
    pinned = discard(_state(np.kron([0, 1], [0, 1]), (2, 2)), 1, expect=1)
    assert np.allclose(pinned.vector, [0, 1])


@pytest.mark.parametrize(
    ("projector", "psi", "truth"),
    [
        (basis_projector(2, 1), KET1, True),
        (basis_projector(2, 0), KET1, False),
    ],
)
def test_run_single_leaf(projector, psi, truth):
    """Test a deterministic elementary test."""
    circuit = compile_proposition(parse_proposition("a"), ElementaryAssignment(2, {"a": projector}))
    for seed in range(5):
        outcome = run(circuit, psi, seed)
        assert outcome.success
        assert outcome.truth_value is truth
        assert outcome.probability == pytest.approx(1.0)
        assert fidelity(outcome.residual_system_state, psi) == pytest.approx(1.0)


def test_run_worked_example():
    """Test every successful run of the worked example reads false."""
    for path in PrepPath:
        circuit = compile_proposition(parse_proposition("!(a&b)&c"), all_one_assignment(), path)
        outcomes = [run(circuit, KET1, seed) for seed in range(200)]
        assert any(outcome.success for outcome in outcomes)
        for outcome in outcomes:
            assert outcome.truth_value is (False if outcome.success else None)


def test_run_is_deterministic():
    """Test identical seeds give identical trajectories."""
    circuit = compile_proposition(
        parse_proposition("a&b"), half_half_assignment(), PrepPath.TELEPORT
    )
    first = [run(circuit, KET0, seed).outcomes for seed in range(20)]
    second = [run(circuit, KET0, seed).outcomes for seed in range(20)]
    assert first == second


def test_sampled_chooser_prunes():
    """Test branches below the pruning threshold are never drawn."""
    chooser = SampledChooser(make_generator(0))
    assert {chooser.choose("m", [1e-13, 1.0 - 1e-13]) for _ in range(200)} == {1}


def test_run_forced_half_half():
    """Test the forced success-and-true trajectories sum to 1/3 * 1/2."""
    circuit = compile_proposition(
        parse_proposition("a&b"), half_half_assignment(), PrepPath.TELEPORT
    )
    total = sum(
        run_forced(
            circuit,
            KET0,
            {"parity:0": first, "parity:1": second, "and:0": 0, "readout": 1},
        ).probability
        for first, second in product((0, 1), repeat=2)
    )
    assert total == pytest.approx(1 / 6, abs=1e-9)


def test_run_forced_impossible_readout():
    """Test forcing a zero-amplitude readout raises."""
    circuit = compile_proposition(parse_proposition("a"), all_one_assignment("a"))
    with pytest.raises(ImpossibleBranch):
        run_forced(circuit, KET0, {"readout": 1})


@pytest.mark.parametrize("outcome", [5, 2, -1])
def test_run_forced_outcome_out_of_range(outcome: int):
    """Test forcing an index outside the operator list raises ImpossibleBranch."""
    circuit = compile_proposition(parse_proposition("a"), all_one_assignment("a"))
    with pytest.raises(ImpossibleBranch) as err:
        run_forced(circuit, KET1, {"readout": outcome})
    assert err.value.slot == "readout"
    assert err.value.outcome == outcome


def test_parity_correction():
    """Test both parity branches leave the same stage-1 state."""
    rng = np.random.default_rng(4)
    assignment = random_qubit_assignment(rng, ["a"])
    psi = random_state(rng, 2)
    circuit = compile_proposition(parse_proposition("a"), assignment, PrepPath.TELEPORT)
    states = [
        StateKet(simulate_prefix(circuit, psi, {"parity:0": parity}, circuit.stage_boundary).vector)
        for parity in (0, 1)
    ]
    assert fidelity(*states) == pytest.approx(1.0, abs=1e-9)


def test_stage_one_is_history_state():
    """Test every stage-1 branch equals the history state on both paths."""
    rng = np.random.default_rng(8)
    for text in ("a", "a&b", "!(a&b)&c", "a&!b&c&!d"):
        proposition = parse_proposition(text)
        assignment = random_qubit_assignment(rng, sorted(set(leaves(proposition))))
        psi = random_state(rng, 2)
        reference = history_state_reference(leaves(proposition), psi, assignment)
        for path in PrepPath:
            circuit = compile_proposition(proposition, assignment, path)
            branches = enumerate_branches(circuit, psi, stop=circuit.stage_boundary)
            assert len(branches) == (2 ** len(leaves(proposition)) if path is PrepPath.TELEPORT else 1)
            assert sum(branch.probability for branch in branches) == pytest.approx(1.0)
            for branch in branches:
                assert fidelity(StateKet(branch.vector), reference) >= 1 - 1e-9


def test_enumerate_trajectories_complete():
    """Test trajectory probabilities sum to one and replay with run_forced."""
    rng = np.random.default_rng(9)
    assignment = random_qubit_assignment(rng, ["a", "b", "c"])
    psi = random_state(rng, 2)
    circuit = compile_proposition(parse_proposition("!(a&b)&c"), assignment, PrepPath.TELEPORT)
    trajectories = enumerate_trajectories(circuit, psi)
    assert sum(t.probability for t in trajectories) == pytest.approx(1.0, abs=1e-9)
    for trajectory in trajectories[:6]:
        replayed = run_forced(circuit, psi, trajectory.outcomes)
        assert replayed.probability == pytest.approx(trajectory.probability)
        assert replayed.success is trajectory.success


def test_capacity_and_dimension_checks():
    """Test oversized registers and mismatched inputs are refused."""
    labels = [f"x{index}" for index in range(10)]
    proposition = parse_proposition("&".join(labels))
    assignment = all_one_assignment(labels)
    teleport = compile_proposition(proposition, assignment, PrepPath.TELEPORT)
    with pytest.raises(CapacityExceeded):
        initial_state(teleport, KET1)
    direct = compile_proposition(proposition, assignment, PrepPath.DIRECT)
    assert len(initial_state(direct, KET1).wires) == 11
    with pytest.raises(DimensionMismatch):
        initial_state(direct, StateKet.basis(3, 0))


def test_initial_state_order():
    """Test the system wire is last and varies fastest."""
    circuit = compile_proposition(parse_proposition("a"), all_one_assignment("a"))
    state = initial_state(circuit, KET1)
    assert np.allclose(state.vector, [0, 1, 0, 0])
    assert dump_amplitudes(state).splitlines() == [
        "format_version 1",
        "wires 0:elementary(a) 1:system(f)",
        "|0,0> [0.0, 0.0]",
        "|0,1> [1.0, 0.0]",
        "|1,0> [0.0, 0.0]",
        "|1,1> [0.0, 0.0]",
    ]


def test_norm_drift():
    """Test a thousand random unitaries keep the state normalized."""
    rng = np.random.default_rng(12)
    state = _state(random_state(rng, 8).amplitudes, (2, 2, 2))
    for _ in range(1000):
        matrix, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
        targets = tuple(int(slot) for slot in rng.choice(3, size=2, replace=False))
        state = apply_unitary(state, targets, matrix)
    assert abs(state.norm_squared - 1.0) <= 1e-10


def _coarse_history(operators: list[np.ndarray], psi: StateKet) -> np.ndarray:
    """Sum over j of |j_1..j_m> (x) [s_m^j_m]...[s_1^j_1] psi for coarse-grained operators."""
    tensor = psi.amplitudes.copy()
    identity = np.eye(psi.dim)
    for operator in operators:
        tensor = np.stack(
            [
                np.tensordot(tensor, identity - operator, axes=([-1], [1])),
                np.tensordot(tensor, operator, axes=([-1], [1])),
            ],
            axis=-2,
        )
    return tensor.reshape(-1)


@pytest.mark.parametrize(
    ("text", "steps"),
    [
        ("!(a&b)&c", [["a&b", "c"], ["!(a&b)&c"]]),
        ("a&!b&c", [["a&!b", "c"], ["a&!b&c"]]),
        ("a&!(b&c)", [["a", "b&c"], ["a&!(b&c)"]]),
        ("a&b&c&d", [["a&b", "c", "d"], ["a&b&c", "d"], ["a&b&c&d"]]),
    ],
)
@pytest.mark.parametrize("path", list(PrepPath))
def test_and_steps_hold_coarse_history_state(text: str, steps: list[list[str]], path: PrepPath):
    """Test each successful AND step leaves the coarse-grained history state scaled by 1/sqrt(3)."""
    rng = np.random.default_rng(31)
    proposition = parse_proposition(text)
    assignment = random_qubit_assignment(rng, sorted(set(leaves(proposition))))
    psi = random_state(rng, 2)
    circuit = compile_proposition(proposition, assignment, path)
    forced = {f"parity:{position}": 0 for position in range(len(leaves(proposition)))}
    forced |= {f"and:{step}": 0 for step in range(len(steps))}
    stage_one = simulate_prefix(circuit, psi, forced, circuit.stage_boundary).probability

    stops = [
        pc + 1
        for pc, instruction in enumerate(circuit.instructions)
        if isinstance(instruction, Discard)
        and isinstance(circuit.instructions[pc - 1], GeneralizedMeasure)
    ]
    assert len(stops) == len(steps)
    for count, (stop, labels) in enumerate(zip(stops, steps), start=1):
        operators = [operator_of(parse_proposition(label), assignment) for label in labels]
        reference = _coarse_history(operators, psi) / np.sqrt(3.0) ** count
        state = simulate_prefix(circuit, psi, forced, stop)
        assert len(state.wires) == len(labels) + 1
        assert fidelity(StateKet(state.vector), StateKet(reference)) >= 1 - 1e-9
        weight = float(np.vdot(reference, reference).real)
        assert state.probability / stage_one == pytest.approx(weight, abs=1e-9)
