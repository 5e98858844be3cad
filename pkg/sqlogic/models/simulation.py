"""Simulator state and run records."""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from sqlogic.models.circuit import Wire
from sqlogic.models.states import ComplexVector, StateKet


@dataclass(frozen=True, eq=False)
class SimState:
    """Normalized amplitude tensor over live wires, one axis per wire in register order."""

    tensor: np.ndarray
    wires: tuple[Wire, ...]
    # product of all realized outcome probabilities
    probability: float = 1.0
    outcomes: Mapping[str, int] = field(default_factory=dict)

    def axis(self, slot: int) -> int:
        """Tensor axis of a live slot."""
        for axis, wire in enumerate(self.wires):
            if wire.slot == slot:
                return axis
        raise KeyError(slot)

    def is_live(self, slot: int) -> bool:
        """Check whether a slot is still part of the register."""
        return any(wire.slot == slot for wire in self.wires)

    @property
    def vector(self) -> ComplexVector:
        """Flattened amplitudes, first wire most significant."""
        return self.tensor.reshape(-1)

    @property
    def norm_squared(self) -> float:
        """Squared norm of the amplitudes."""
        return float(np.vdot(self.vector, self.vector).real)


@dataclass(frozen=True, eq=False)
class RunOutcome:
    """Record of one protocol execution."""

    success: bool
    truth_value: bool | None
    probability: float
    residual_system_state: StateKet | None
    outcomes: Mapping[str, int]

    def trajectory_key(self) -> tuple[tuple[str, int], ...]:
        """Hashable outcome record in slot order of insertion."""
        return tuple(self.outcomes.items())
