"""Restart loop, shot statistics and oracle verification."""
from .runner import (
    RestartStatistics,
    default_max_attempts,
    estimate,
    restart_statistics,
    run_until_success,
    sample_shots,
    summarize,
)
from .statistics import (
    geometric_chi_square,
    pooled_chi_square,
    standard_error,
    trajectory_chi_square,
    z_score,
)
from .verification import ProtocolVerifier, VerifyOptions, supported_paths, verify

__all__ = [
    "ProtocolVerifier",
    "RestartStatistics",
    "VerifyOptions",
    "default_max_attempts",
    "estimate",
    "geometric_chi_square",
    "pooled_chi_square",
    "restart_statistics",
    "run_until_success",
    "sample_shots",
    "standard_error",
    "summarize",
    "supported_paths",
    "trajectory_chi_square",
    "verify",
    "z_score",
]
