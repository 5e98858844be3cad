"""Restart-on-failure execution and shot statistics."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging
import math

from sqlogic.const import FALLBACK_MAX_ATTEMPTS, FORMAT_VERSION
from sqlogic.exceptions import AttemptsExhausted
from sqlogic.models import Circuit, RunOutcome, StateKet, TrialStats
from sqlogic.simulator import run, shot_seed

from .statistics import geometric_chi_square, standard_error

_LOGGER = logging.getLogger("sqlogic.log")


def default_max_attempts(success_probability: float | None) -> int:
    """100 * ceil(1/p) when the oracle knows p, else a fixed fallback."""
    if success_probability is None or success_probability <= 0.0:
        return FALLBACK_MAX_ATTEMPTS
    return 100 * math.ceil(1.0 / success_probability)


def run_until_success(
    circuit: Circuit,
    psi: StateKet,
    seed: int,
    max_attempts: int,
    trial: int | None = None,
) -> tuple[RunOutcome, int]:
    """Repeat the whole protocol until no failure outcome occurs."""
    if max_attempts < 1:
        raise ValueError("max_attempts must be at least 1")
    prefix = () if trial is None else (trial,)
    for attempt in range(max_attempts):
        outcome = run(circuit, psi, shot_seed(seed, *prefix, attempt))
        if outcome.success:
            _LOGGER.debug("Success after %s attempts", attempt + 1)
            return outcome, attempt + 1
    raise AttemptsExhausted(max_attempts, 1.0)


def sample_shots(
    circuit: Circuit, psi: StateKet, shots: int, seed: int, jobs: int = 1
) -> list[RunOutcome]:
    """Independent runs without restart; shot i only depends on (seed, i)."""
    if shots < 1:
        raise ValueError("shots must be at least 1")

    def _shot(index: int) -> RunOutcome:
        return run(circuit, psi, shot_seed(seed, index))

    if jobs <= 1:
        return [_shot(index) for index in range(shots)]
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(_shot, range(shots)))


def summarize(outcomes: list[RunOutcome], seed: int) -> TrialStats:
    """Aggregate run outcomes; independent of the order they finished in."""
    attempts = len(outcomes)
    successes = sum(1 for outcome in outcomes if outcome.success)
    true_count = sum(1 for outcome in outcomes if outcome.truth_value is True)
    success_rate = successes / attempts
    conditional = true_count / successes if successes else None
    return TrialStats(
        format_version=FORMAT_VERSION,
        seed=seed,
        attempts=attempts,
        successes=successes,
        true_count=true_count,
        false_count=successes - true_count,
        success_rate=success_rate,
        success_rate_stderr=standard_error(success_rate, attempts),
        conditional_true=conditional,
        conditional_true_stderr=(
            standard_error(conditional, successes) if conditional is not None else None
        ),
    )


def estimate(
    circuit: Circuit, psi: StateKet, shots: int, seed: int, jobs: int = 1
) -> TrialStats:
    """Shot statistics of the protocol without restart."""
    stats = summarize(sample_shots(circuit, psi, shots, seed, jobs), seed)
    _LOGGER.info(
        "%s shots: %s successes, %s true", stats["attempts"], stats["successes"], stats["true_count"]
    )
    return stats


@dataclass(frozen=True)
class RestartStatistics:
    """Attempt counts of repeated restart-until-success trials."""

    attempt_counts: tuple[int, ...]
    exhausted: int
    p_value: float

    @property
    def mean_attempts(self) -> float:
        """Average number of attempts per successful trial."""
        return sum(self.attempt_counts) / len(self.attempt_counts) if self.attempt_counts else math.inf


def restart_statistics(
    circuit: Circuit,
    psi: StateKet,
    trials: int,
    seed: int,
    success_probability: float,
    max_attempts: int | None = None,
) -> RestartStatistics:
    """Restart counts and their goodness of fit to Geometric(success_probability)."""
    limit = max_attempts or default_max_attempts(success_probability)
    counts: list[int] = []
    exhausted = 0
    for trial in range(trials):
        try:
            _, attempts = run_until_success(circuit, psi, seed, limit, trial=trial)
        except AttemptsExhausted:
            exhausted += 1
            attempts = limit + 1
        counts.append(attempts)
    return RestartStatistics(
        attempt_counts=tuple(counts),
        exhausted=exhausted,
        p_value=geometric_chi_square(counts, success_probability),
    )
