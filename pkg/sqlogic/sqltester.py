"""Sequential quantum logic tester: one proposition, one assignment, every tool."""
from __future__ import annotations

import logging
from pathlib import Path
import time

from sqlogic.__version__ import __version__
from sqlogic.compiler import build_coherent_and_pair, compile_proposition
from sqlogic.const import DEFAULT_SHOTS, FORMAT_VERSION
from sqlogic.exceptions import SQLogicException
from sqlogic.harness import (
    VerifyOptions,
    default_max_attempts,
    estimate,
    run_until_success,
    verify,
)
from sqlogic.loader import AssignmentLoader
from sqlogic.models import (
    AnalyticReport,
    Circuit,
    ElementaryAssignment,
    PairCheck,
    ParseReport,
    PhysicalityReport,
    PrepPath,
    Proposition,
    RetryReport,
    SeqXor,
    StateKet,
    TrialStats,
    VerificationReport,
)
from sqlogic.oracle import (
    branch_norms,
    branch_overlap,
    coherent_and_obstruction,
    completeness_defect,
    conditional_distribution,
    is_valid_test_pair,
    operator_of,
    overall_success_probability,
    xor_sqcap_defect,
)
from sqlogic.proposition import (
    canonicalize,
    count_seq_ands,
    count_seq_xors,
    iter_postorder,
    leaves,
    parse_proposition,
    print_proposition,
    tree_dump,
)
from sqlogic.util import matrix_to_pairs, vector_to_pairs

_LOGGER = logging.getLogger("sqlogic.log")

XOR_WARNING = "Sequential exclusive OR is evaluated by the oracle only and can not be compiled"


class SQLogicTester:
    """Parse, check, compile, simulate and verify one sequential proposition."""

    def __init__(
        self,
        proposition: str | Proposition,
        assignment: ElementaryAssignment | None = None,
        initial_state: StateKet | None = None,
        prep_path: PrepPath = PrepPath.DIRECT,
    ):
        """Initialize a SQLogicTester."""
        self.text = proposition if isinstance(proposition, str) else print_proposition(proposition)
        self.proposition = canonicalize(
            parse_proposition(proposition) if isinstance(proposition, str) else proposition
        )
        self._assignment = assignment
        self._initial_state = initial_state
        self.prep_path = prep_path
        _LOGGER.info(
            'Sqlogic version %s testing "%s"', __version__, print_proposition(self.proposition)
        )

    @classmethod
    def from_file(
        cls,
        proposition: str,
        path: str | Path,
        prep_path: PrepPath = PrepPath.DIRECT,
    ) -> SQLogicTester:
        """Take assignment and initial state from an assignment file."""
        contents = AssignmentLoader.load(path)
        contents.require_labels(leaves(parse_proposition(proposition)))
        return cls(proposition, contents.assignment, contents.initial_state, prep_path)

    @property
    def assignment(self) -> ElementaryAssignment:
        """Elementary assignment; required by everything but parsing."""
        if self._assignment is None:
            raise SQLogicException("An elementary assignment is required")
        return self._assignment

    @property
    def initial_state(self) -> StateKet:
        """Initial system state."""
        if self._initial_state is None:
            raise SQLogicException("An initial state is required")
        return self._initial_state

    @property
    def label(self) -> str:
        """Canonical text of the proposition."""
        return print_proposition(self.proposition)

    def parse_report(self) -> ParseReport:
        """Structure of the proposition."""
        xors = count_seq_xors(self.proposition)
        warnings = [XOR_WARNING] if xors else []
        for warning in warnings:
            _LOGGER.warning(warning)
        return ParseReport(
            format_version=FORMAT_VERSION,
            input=self.text,
            canonical=self.label,
            tree=tree_dump(self.proposition),
            leaves=len(leaves(self.proposition)),
            seq_ands=count_seq_ands(self.proposition),
            seq_xors=xors,
            compilable=not xors,
            warnings=warnings,
        )

    def check(self) -> PhysicalityReport:
        """Whether {[p], I-[p]} is a physical test, and the obstruction to a coherent AND."""
        valid, defect = is_valid_test_pair(operator_of(self.proposition, self.assignment))
        xor_tests: list[PairCheck] = []
        xor_defects: list[float] = []
        for entry in iter_postorder(self.proposition):
            node = entry.node
            if not isinstance(node, SeqXor):
                continue
            xor_valid, xor_defect = is_valid_test_pair(operator_of(node, self.assignment))
            xor_tests.append(
                PairCheck(subject=print_proposition(node), valid=xor_valid, defect=xor_defect)
            )
            xor_defects.append(xor_sqcap_defect(node.left, node.right, self.assignment))

        if valid:
            recommendation = "direct test: {[p], I-[p]} is a projective measurement"
        elif xor_tests:
            recommendation = "no physical test: the nondeterministic protocol excludes '^'"
        else:
            recommendation = "nondeterministic protocol: compile and run with restart on failure"
        _LOGGER.info('Physicality of "%s": %s', self.label, recommendation)
        return PhysicalityReport(
            format_version=FORMAT_VERSION,
            proposition=self.label,
            direct_test=PairCheck(subject=self.label, valid=valid, defect=defect),
            coherent_and_largest_eigenvalue=coherent_and_obstruction(),
            and_measurement_completeness_defect=completeness_defect(build_coherent_and_pair()),
            xor_tests=xor_tests,
            xor_sqcap_defects=xor_defects,
            recommendation=recommendation,
        )

    def analyze(self) -> AnalyticReport:
        """Oracle quantities for the proposition on the initial state."""
        psi = self.initial_state
        w_true, w_false = branch_norms(self.proposition, psi, self.assignment)
        compilable = not count_seq_xors(self.proposition)
        return AnalyticReport(
            format_version=FORMAT_VERSION,
            proposition=self.label,
            branch_norms=[w_true, w_false],
            branch_overlap=branch_overlap(self.proposition, psi, self.assignment),
            conditional_distribution=list(
                conditional_distribution(self.proposition, psi, self.assignment)
            ),
            overall_success_probability=(
                overall_success_probability(self.proposition, psi, self.assignment)
                if compilable
                else None
            ),
            seq_ands=count_seq_ands(self.proposition),
            operator=matrix_to_pairs(operator_of(self.proposition, self.assignment)),
        )

    def compile(self, prep_path: PrepPath | None = None) -> Circuit:
        """Compile into the two-stage protocol."""
        return compile_proposition(self.proposition, self.assignment, prep_path or self.prep_path)

    def run(self, shots: int = DEFAULT_SHOTS, seed: int = 0, jobs: int = 1) -> TrialStats:
        """Shot statistics without restart."""
        _start = time.time()
        stats = estimate(self.compile(), self.initial_state, shots, seed, jobs)
        _LOGGER.info("Simulation took %s seconds", time.time() - _start)
        return stats

    def run_until_success(self, seed: int = 0, max_attempts: int | None = None) -> RetryReport:
        """Restart the protocol until it succeeds once."""
        limit = max_attempts or default_max_attempts(
            overall_success_probability(self.proposition, self.initial_state, self.assignment)
        )
        outcome, attempts = run_until_success(self.compile(), self.initial_state, seed, limit)
        assert outcome.residual_system_state is not None
        assert outcome.truth_value is not None
        return RetryReport(
            format_version=FORMAT_VERSION,
            seed=seed,
            attempts=attempts,
            truth_value=outcome.truth_value,
            probability=outcome.probability,
            outcomes=dict(outcome.outcomes),
            residual_system_state=vector_to_pairs(outcome.residual_system_state.amplitudes),
        )

    def verify(self, options: VerifyOptions | None = None) -> VerificationReport:
        """Verify the simulator against the oracle."""
        _start = time.time()
        report = verify(self.proposition, self.assignment, self.initial_state, options)
        _LOGGER.info("Verification took %s seconds", time.time() - _start)
        return report
