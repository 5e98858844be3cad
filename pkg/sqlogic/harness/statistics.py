"""Statistical gates comparing sampled runs with exact probabilities."""
from __future__ import annotations

from collections import Counter
from collections.abc import Hashable, Mapping, Sequence
import math

import numpy as np
from scipy import stats

from sqlogic.const import CHI_SQUARE_MIN_EXPECTED, NORMALIZATION_TOLERANCE


def standard_error(rate: float, samples: int) -> float:
    """Binomial standard error of an empirical rate."""
    if samples <= 0:
        return 0.0
    return math.sqrt(max(rate * (1.0 - rate), 0.0) / samples)


def z_score(observed_rate: float, expected: float, samples: int) -> float:
    """(observed - expected) / sqrt(p(1-p)/n); deterministic outcomes give 0 or inf."""
    variance = expected * (1.0 - expected)
    if samples <= 0:
        return 0.0
    if variance <= NORMALIZATION_TOLERANCE:
        return 0.0 if abs(observed_rate - expected) <= NORMALIZATION_TOLERANCE else math.inf
    return (observed_rate - expected) / math.sqrt(variance / samples)


def pooled_chi_square(observed: Sequence[int], expected: Sequence[float]) -> float:
    """Chi-square p-value after pooling bins with small expected counts into one."""
    kept_observed: list[float] = []
    kept_expected: list[float] = []
    pooled_observed = 0.0
    pooled_expected = 0.0
    for count, expectation in zip(observed, expected):
        if expectation >= CHI_SQUARE_MIN_EXPECTED:
            kept_observed.append(count)
            kept_expected.append(expectation)
        else:
            pooled_observed += count
            pooled_expected += expectation
    if pooled_expected > 0.0:
        if pooled_expected < CHI_SQUARE_MIN_EXPECTED and kept_expected:
            # fold a thin tail into the smallest kept bin
            smallest = int(np.argmin(kept_expected))
            kept_observed[smallest] += pooled_observed
            kept_expected[smallest] += pooled_expected
        else:
            kept_observed.append(pooled_observed)
            kept_expected.append(pooled_expected)
    elif pooled_observed > 0:
        # outcomes the exact model says are impossible
        return 0.0
    if len(kept_expected) < 2:
        return 1.0
    total_observed = sum(kept_observed)
    scale = total_observed / sum(kept_expected)
    result = stats.chisquare(kept_observed, [value * scale for value in kept_expected])
    return float(result.pvalue)


def trajectory_chi_square(
    sampled: Sequence[Hashable], exact: Mapping[Hashable, float]
) -> float:
    """Goodness of fit of sampled trajectory keys against exact probabilities."""
    counts = Counter(sampled)
    keys = list(exact)
    observed = [counts.pop(key, 0) for key in keys]
    expected = [exact[key] * len(sampled) for key in keys]
    # keys never produced by the exact enumeration
    observed.append(sum(counts.values()))
    expected.append(0.0)
    return pooled_chi_square(observed, expected)


def geometric_chi_square(attempt_counts: Sequence[int], success_probability: float) -> float:
    """Goodness of fit of restart counts against Geometric(p) on {1, 2, ...}."""
    trials = len(attempt_counts)
    if trials == 0:
        return 1.0
    if success_probability >= 1.0 - NORMALIZATION_TOLERANCE:
        return 1.0 if all(count == 1 for count in attempt_counts) else 0.0
    counts = Counter(attempt_counts)
    largest = max(counts)
    observed = [counts.get(k, 0) for k in range(1, largest + 1)]
    expected = [
        trials * success_probability * (1.0 - success_probability) ** (k - 1)
        for k in range(1, largest + 1)
    ]
    # tail mass beyond the largest observed count
    observed.append(0)
    expected.append(trials * (1.0 - success_probability) ** largest)
    return pooled_chi_square(observed, expected)
