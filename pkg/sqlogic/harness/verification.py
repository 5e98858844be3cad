"""Check simulated protocol runs against the operator oracle."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
import logging

import numpy as np

from sqlogic.compiler import compile_proposition, validate
from sqlogic.const import (
    ALGEBRA_TOLERANCE,
    BRANCH_PRUNING_THRESHOLD,
    CHI_SQUARE_P_MIN,
    DEFAULT_RESTART_TRIALS,
    DEFAULT_SHOTS,
    FIDELITY_TOLERANCE,
    FORMAT_VERSION,
    Z_SCORE_LIMIT,
)
from sqlogic.models import (
    CheckKind,
    CheckResult,
    Circuit,
    ElementaryAssignment,
    PrepPath,
    Proposition,
    RunOutcome,
    StateKet,
    VerificationReport,
    VerifyMode,
)
from sqlogic.oracle import (
    branch_vectors,
    conditional_distribution,
    fidelity,
    history_state_reference,
    overall_success_probability,
)
from sqlogic.proposition import canonicalize, leaves, print_proposition
from sqlogic.simulator import enumerate_branches, enumerate_trajectories

from .runner import restart_statistics, sample_shots, summarize
from .statistics import trajectory_chi_square, z_score

_LOGGER = logging.getLogger("sqlogic.log")


@dataclass(frozen=True)
class VerifyOptions:
    """Verification settings; prep_paths=None picks every path the assignment supports."""

    mode: VerifyMode = VerifyMode.EXACT
    prep_paths: tuple[PrepPath, ...] | None = None
    shots: int = DEFAULT_SHOTS
    seed: int = 0
    restart_trials: int = DEFAULT_RESTART_TRIALS
    jobs: int = 1


def supported_paths(
    proposition: Proposition, assignment: ElementaryAssignment
) -> tuple[PrepPath, ...]:
    """Teleport needs rank-1 qubit projectors; direct works for every assignment."""
    if all(assignment.is_rank_one_qubit(label) for label in leaves(proposition)):
        return (PrepPath.TELEPORT, PrepPath.DIRECT)
    return (PrepPath.DIRECT,)


def _check(name: str, kind: CheckKind, value: float, threshold: float) -> CheckResult:
    if kind is CheckKind.DELTA:
        passed = value <= threshold
    elif kind is CheckKind.FIDELITY:
        passed = value >= threshold
    elif kind is CheckKind.Z_SCORE:
        passed = abs(value) <= threshold
    else:
        passed = value > threshold
    if not passed:
        _LOGGER.warning("Check %s failed: %s (threshold %s)", name, value, threshold)
    return CheckResult(
        name=name, kind=kind.value, value=float(value), threshold=float(threshold), passed=bool(passed)
    )


def _delta(name: str, value: float) -> CheckResult:
    return _check(name, CheckKind.DELTA, value, ALGEBRA_TOLERANCE)


def _fidelity(name: str, value: float) -> CheckResult:
    return _check(name, CheckKind.FIDELITY, value, 1.0 - FIDELITY_TOLERANCE)


class ProtocolVerifier:
    """Compare compiled protocols for one proposition with the oracle."""

    def __init__(
        self,
        proposition: Proposition,
        assignment: ElementaryAssignment,
        psi: StateKet,
        options: VerifyOptions | None = None,
    ) -> None:
        """Initialize the verifier and evaluate the oracle once."""
        self.proposition = canonicalize(proposition)
        self.assignment = assignment
        self.psi = psi
        self.options = options or VerifyOptions()
        self.paths = self.options.prep_paths or supported_paths(self.proposition, assignment)
        self.success_probability = overall_success_probability(
            self.proposition, psi, assignment
        )
        self.p_true, self.p_false = conditional_distribution(self.proposition, psi, assignment)
        self.branches = branch_vectors(self.proposition, psi, assignment)
        self.history = history_state_reference(leaves(self.proposition), psi, assignment)

    def verify(self) -> VerificationReport:
        """Run every check of the configured mode on every path."""
        circuits = {
            path: compile_proposition(self.proposition, self.assignment, path)
            for path in self.paths
        }
        checks: list[CheckResult] = []
        for path, circuit in circuits.items():
            violations = validate(circuit)
            checks.append(
                _check(f"{path.value}.circuit_valid", CheckKind.DELTA, len(violations), 0)
            )
            if violations:
                continue
            if self.options.mode is VerifyMode.EXACT:
                checks.extend(self._exact_checks(path.value, circuit))
            else:
                checks.extend(self._sampled_checks(path.value, circuit))
        if self.options.mode is VerifyMode.EXACT and len(circuits) > 1:
            checks.extend(self._agreement_checks(list(circuits.values())))

        passed = all(check["passed"] for check in checks)
        _LOGGER.info(
            'Verified "%s" (%s mode): %s of %s checks passed',
            print_proposition(self.proposition),
            self.options.mode.value,
            sum(1 for check in checks if check["passed"]),
            len(checks),
        )
        return VerificationReport(
            format_version=FORMAT_VERSION,
            proposition=print_proposition(self.proposition),
            mode=self.options.mode.value,
            prep_paths=[path.value for path in self.paths],
            seed=self.options.seed if self.options.mode is VerifyMode.SAMPLED else None,
            tolerances={
                CheckKind.DELTA.value: ALGEBRA_TOLERANCE,
                CheckKind.FIDELITY.value: FIDELITY_TOLERANCE,
                CheckKind.Z_SCORE.value: Z_SCORE_LIMIT,
                CheckKind.P_VALUE.value: CHI_SQUARE_P_MIN,
            },
            checks=checks,
            passed=passed,
        )

    def _exact_checks(self, prefix: str, circuit: Circuit) -> list[CheckResult]:
        trajectories = enumerate_trajectories(circuit, self.psi)
        total = sum(trajectory.probability for trajectory in trajectories)
        successes = [trajectory for trajectory in trajectories if trajectory.success]
        success_probability = sum(trajectory.probability for trajectory in successes)
        true_probability = sum(
            trajectory.probability for trajectory in successes if trajectory.truth_value
        )
        checks = [
            _delta(f"{prefix}.trajectory_completeness", abs(total - 1.0)),
            _delta(
                f"{prefix}.success_probability",
                abs(success_probability - self.success_probability),
            ),
        ]
        if success_probability > BRANCH_PRUNING_THRESHOLD:
            conditional_true = true_probability / success_probability
            checks.append(
                _delta(f"{prefix}.conditional_true", abs(conditional_true - self.p_true))
            )
            checks.append(
                _delta(
                    f"{prefix}.conditional_false",
                    abs(1.0 - conditional_true - self.p_false),
                )
            )
        checks.extend(self._residual_checks(prefix, successes))
        checks.append(
            _fidelity(f"{prefix}.history_state", self._history_fidelity(circuit))
        )
        return checks

    def _residual_checks(
        self, prefix: str, successes: Sequence[RunOutcome]
    ) -> list[CheckResult]:
        checks = []
        for truth, branch in zip((True, False), self.branches):
            if branch.norm_squared <= BRANCH_PRUNING_THRESHOLD:
                continue
            reached = [
                trajectory.residual_system_state
                for trajectory in successes
                if trajectory.truth_value is truth
                and trajectory.residual_system_state is not None
            ]
            worst = min((fidelity(state, branch) for state in reached), default=0.0)
            name = "true" if truth else "false"
            checks.append(_fidelity(f"{prefix}.residual_fidelity_{name}", worst))
        return checks

    def _history_fidelity(self, circuit: Circuit) -> float:
        """Smallest fidelity of a stage-1 branch state with the history state."""
        branches = enumerate_branches(circuit, self.psi, stop=circuit.stage_boundary)
        return min(
            (fidelity(StateKet(branch.vector), self.history) for branch in branches),
            default=0.0,
        )

    def _agreement_checks(self, circuits: list[Circuit]) -> list[CheckResult]:
        """Every preparation path ends stage 1 in the same state and success law."""
        stage_one = [
            [StateKet(branch.vector) for branch in enumerate_branches(c, self.psi, c.stage_boundary)]
            for c in circuits
        ]
        reference = stage_one[0]
        worst = min(
            (fidelity(left, right) for states in stage_one[1:] for left in reference for right in states),
            default=0.0,
        )
        probabilities = [
            sum(t.probability for t in enumerate_trajectories(c, self.psi) if t.success)
            for c in circuits
        ]
        return [
            _fidelity("paths.stage1_agreement", worst),
            _delta(
                "paths.success_probability_agreement",
                float(np.ptp(probabilities)),
            ),
        ]

    def _sampled_checks(self, prefix: str, circuit: Circuit) -> list[CheckResult]:
        options = self.options
        outcomes = sample_shots(circuit, self.psi, options.shots, options.seed, options.jobs)
        stats = summarize(outcomes, options.seed)
        checks = [
            _check(
                f"{prefix}.success_rate_z",
                CheckKind.Z_SCORE,
                z_score(stats["success_rate"], self.success_probability, stats["attempts"]),
                Z_SCORE_LIMIT,
            )
        ]
        if stats["conditional_true"] is not None:
            checks.append(
                _check(
                    f"{prefix}.conditional_true_z",
                    CheckKind.Z_SCORE,
                    z_score(stats["conditional_true"], self.p_true, stats["successes"]),
                    Z_SCORE_LIMIT,
                )
            )
        exact = {
            trajectory.trajectory_key(): trajectory.probability
            for trajectory in enumerate_trajectories(circuit, self.psi)
        }
        checks.append(
            _check(
                f"{prefix}.trajectory_chi_square",
                CheckKind.P_VALUE,
                trajectory_chi_square([outcome.trajectory_key() for outcome in outcomes], exact),
                CHI_SQUARE_P_MIN,
            )
        )
        if options.restart_trials > 0:
            restarts = restart_statistics(
                circuit,
                self.psi,
                options.restart_trials,
                options.seed,
                self.success_probability,
            )
            checks.append(
                _check(
                    f"{prefix}.restart_geometric_chi_square",
                    CheckKind.P_VALUE,
                    restarts.p_value,
                    CHI_SQUARE_P_MIN,
                )
            )
        return checks


def verify(
    proposition: Proposition,
    assignment: ElementaryAssignment,
    psi: StateKet,
    options: VerifyOptions | None = None,
) -> VerificationReport:
    """Verify the compiled protocol of proposition against the oracle."""
    return ProtocolVerifier(proposition, assignment, psi, options).verify()
