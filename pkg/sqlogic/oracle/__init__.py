"""Operator oracle: ground-truth semantics of sequential propositions."""
from .linalg import (
    CNOT,
    PAULI_X,
    coherent_and_matrix,
    coherent_and_obstruction,
    coherent_and_spectrum,
    completeness_defect,
    fidelity,
    fix_phase,
    is_valid_test_pair,
    ket_minus,
    ket_plus,
    matrix_sqrt_psd,
    projector_from_state,
    require_normalized,
    unitarity_defect,
)
from .operators import (
    branch_norms,
    branch_overlap,
    branch_vectors,
    conditional_distribution,
    fine_grained_distribution,
    history_state_reference,
    history_tensor,
    operator_of,
    overall_success_probability,
    xor_sqcap_defect,
)

__all__ = [
    "CNOT",
    "PAULI_X",
    "branch_norms",
    "branch_overlap",
    "branch_vectors",
    "coherent_and_matrix",
    "coherent_and_obstruction",
    "coherent_and_spectrum",
    "completeness_defect",
    "conditional_distribution",
    "fidelity",
    "fine_grained_distribution",
    "fix_phase",
    "history_state_reference",
    "history_tensor",
    "is_valid_test_pair",
    "ket_minus",
    "ket_plus",
    "matrix_sqrt_psd",
    "operator_of",
    "overall_success_probability",
    "projector_from_state",
    "require_normalized",
    "unitarity_defect",
    "xor_sqcap_defect",
]
