"""Define output types for serialized reports."""
from __future__ import annotations

from typing import TypedDict


class ParseReport(TypedDict):
    """Parse result dictionary."""

    format_version: int
    input: str
    canonical: str
    tree: list[str]
    leaves: int
    seq_ands: int
    seq_xors: int
    compilable: bool
    warnings: list[str]


class PairCheck(TypedDict):
    """Completeness check of a two-outcome pair {A, I-A}."""

    subject: str
    valid: bool
    defect: float


class PhysicalityReport(TypedDict):
    """Physicality checks for a proposition."""

    format_version: int
    proposition: str
    direct_test: PairCheck
    coherent_and_largest_eigenvalue: float
    and_measurement_completeness_defect: float
    xor_tests: list[PairCheck]
    xor_sqcap_defects: list[float]
    recommendation: str


class AnalyticReport(TypedDict):
    """Oracle quantities for a proposition and initial state."""

    format_version: int
    proposition: str
    branch_norms: list[float]
    branch_overlap: float
    conditional_distribution: list[float] | None
    overall_success_probability: float | None
    seq_ands: int
    operator: list[list[list[float]]]


class TrialStats(TypedDict):
    """Shot statistics without restart."""

    format_version: int
    seed: int
    attempts: int
    successes: int
    true_count: int
    false_count: int
    success_rate: float
    success_rate_stderr: float
    conditional_true: float | None
    conditional_true_stderr: float | None


class RetryReport(TypedDict):
    """Result of a restart-until-success run."""

    format_version: int
    seed: int
    attempts: int
    truth_value: bool
    probability: float
    outcomes: dict[str, int]
    residual_system_state: list[list[float]]


class CheckResult(TypedDict):
    """Single verification check."""

    name: str
    kind: str
    value: float
    threshold: float
    passed: bool


class VerificationReport(TypedDict):
    """Verification of simulator output against the operator oracle."""

    format_version: int
    proposition: str
    mode: str
    prep_paths: list[str]
    seed: int | None
    tolerances: dict[str, float]
    checks: list[CheckResult]
    passed: bool
