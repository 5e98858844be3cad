"""Dense statevector simulator with sampled and forced-outcome execution."""
from .statevector import (
    ForcedChooser,
    OutcomeChooser,
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
    measurement_branches,
    run,
    run_forced,
    shot_seed,
    simulate_prefix,
)

__all__ = [
    "ForcedChooser",
    "OutcomeChooser",
    "SampledChooser",
    "apply_generalized",
    "apply_projective",
    "apply_unitary",
    "discard",
    "dump_amplitudes",
    "enumerate_branches",
    "enumerate_trajectories",
    "initial_state",
    "make_generator",
    "measurement_branches",
    "run",
    "run_forced",
    "shot_seed",
    "simulate_prefix",
]
