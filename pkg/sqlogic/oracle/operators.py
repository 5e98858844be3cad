"""Brute-force operator semantics of sequential propositions."""
from __future__ import annotations

import logging

import numpy as np

from sqlogic.const import AND_SUCCESS_WEIGHT, NORMALIZATION_TOLERANCE
from sqlogic.exceptions import (
    DimensionMismatch,
    SQLogicException,
    UnsupportedProposition,
)
from sqlogic.models import (
    ComplexMatrix,
    Elementary,
    ElementaryAssignment,
    Not,
    Proposition,
    SeqAnd,
    SeqXor,
    StateKet,
    max_abs,
)
from sqlogic.oracle.linalg import require_normalized
from sqlogic.proposition import count_seq_ands, count_seq_xors

_LOGGER = logging.getLogger("sqlogic.log")


def operator_of(proposition: Proposition, assignment: ElementaryAssignment) -> ComplexMatrix:
    """Evaluate [s]: [!s] = I - [s], [s&t] = [t][s], [s^t] = [!t][s] + [t][!s]."""
    if isinstance(proposition, Elementary):
        return assignment.projector(proposition.label)
    identity = assignment.identity()
    if isinstance(proposition, Not):
        return identity - operator_of(proposition.child, assignment)
    left = operator_of(proposition.left, assignment)
    right = operator_of(proposition.right, assignment)
    if isinstance(proposition, SeqAnd):
        return right @ left
    return (identity - right) @ left + right @ (identity - left)


def _check_state(psi: StateKet, assignment: ElementaryAssignment) -> None:
    if psi.dim != assignment.system_dim:
        raise DimensionMismatch(
            f"State of dim {psi.dim} does not match system dim {assignment.system_dim}"
        )
    require_normalized(psi)


def branch_vectors(
    proposition: Proposition, psi: StateKet, assignment: ElementaryAssignment
) -> tuple[StateKet, StateKet]:
    """Unnormalized [s]psi and [!s]psi."""
    _check_state(psi, assignment)
    operator = operator_of(proposition, assignment)
    true_branch = operator @ psi.amplitudes
    return StateKet(true_branch), StateKet(psi.amplitudes - true_branch)


def branch_norms(
    proposition: Proposition, psi: StateKet, assignment: ElementaryAssignment
) -> tuple[float, float]:
    """(w1, w0) = (|[s]psi|^2, |[!s]psi|^2)."""
    true_branch, false_branch = branch_vectors(proposition, psi, assignment)
    return true_branch.norm_squared, false_branch.norm_squared


def branch_overlap(
    proposition: Proposition, psi: StateKet, assignment: ElementaryAssignment
) -> float:
    """|<[s]psi, [!s]psi>|, zero whenever [s] is a projector."""
    true_branch, false_branch = branch_vectors(proposition, psi, assignment)
    return float(abs(np.vdot(true_branch.amplitudes, false_branch.amplitudes)))


def conditional_distribution(
    proposition: Proposition, psi: StateKet, assignment: ElementaryAssignment
) -> tuple[float, float]:
    """(P_true, P_false) conditioned on the protocol not failing."""
    w_true, w_false = branch_norms(proposition, psi, assignment)
    total = w_true + w_false
    if total < NORMALIZATION_TOLERANCE:
        # [s] + [!s] = I, so a normalized state can not be annihilated by both
        raise SQLogicException(f"Both branches vanish (total weight {total:.3e})")
    return w_true / total, w_false / total


def overall_success_probability(
    proposition: Proposition, psi: StateKet, assignment: ElementaryAssignment
) -> float:
    """(1/3)^(number of SeqAnd) * (w1 + w0)."""
    if count_seq_xors(proposition):
        raise UnsupportedProposition(
            "Success probability is only defined for the reduction protocol (no '^')"
        )
    w_true, w_false = branch_norms(proposition, psi, assignment)
    return float(AND_SUCCESS_WEIGHT ** count_seq_ands(proposition) * (w_true + w_false))


def history_tensor(
    labels: list[str], psi: StateKet, assignment: ElementaryAssignment
) -> np.ndarray:
    """History state as a tensor with one axis per label, system axis last."""
    if not labels:
        raise DimensionMismatch("History state needs at least one elementary label")
    _check_state(psi, assignment)
    identity = assignment.identity()
    tensor = psi.amplitudes.copy()
    for label in labels:
        projector = assignment.projector(label)
        negated = np.tensordot(tensor, identity - projector, axes=([-1], [1]))
        affirmed = np.tensordot(tensor, projector, axes=([-1], [1]))
        tensor = np.stack([negated, affirmed], axis=-2)
    return tensor


def history_state_reference(
    labels: list[str], psi: StateKet, assignment: ElementaryAssignment
) -> StateKet:
    """Sum over j of |j_1..j_n> (x) [x_n^j_n]...[x_1^j_1] psi, ancillas in label order."""
    return StateKet(history_tensor(labels, psi, assignment).reshape(-1))


def fine_grained_distribution(
    labels: list[str], psi: StateKet, assignment: ElementaryAssignment
) -> dict[str, float]:
    """Probability of every outcome sequence when all results are retained."""
    tensor = history_tensor(labels, psi, assignment)
    weights = np.sum(np.abs(tensor) ** 2, axis=-1)
    return {
        "".join(str(bit) for bit in index): float(weights[index])
        for index in np.ndindex(weights.shape)
    }


def xor_sqcap_defect(
    left: Proposition, right: Proposition, assignment: ElementaryAssignment
) -> float:
    """Distance between [s^t] and [!(!s&!t)&!(s&t)]."""
    xor = operator_of(SeqXor(left, right), assignment)
    rewritten = SeqAnd(
        Not(SeqAnd(Not(left), Not(right))),
        Not(SeqAnd(left, right)),
    )
    defect = max_abs(xor - operator_of(rewritten, assignment))
    _LOGGER.debug("XOR rewrite defect %.3e", defect)
    return defect
