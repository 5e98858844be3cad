"""Assignment file loader."""
from __future__ import annotations

from dataclasses import dataclass
import json
import logging
from pathlib import Path
from typing import Any

import numpy as np

from sqlogic.const import FORMAT_VERSION, STATE_INPUT_TOLERANCE
from sqlogic.exceptions import InvalidState, UnassignedLabel, UnexpectedFileContent
from sqlogic.models import ElementaryAssignment, StateKet
from sqlogic.oracle import projector_from_state
from sqlogic.util import pairs_to_matrix, pairs_to_vector

_LOGGER = logging.getLogger("sqlogic.log")


@dataclass(frozen=True)
class AssignmentFile:
    """Contents of an assignment file."""

    assignment: ElementaryAssignment
    initial_state: StateKet

    def require_labels(self, labels: list[str]) -> None:
        """Raise UnassignedLabel for the first label without a projector."""
        missing = [label for label in labels if label not in self.assignment.projectors]
        if missing:
            raise UnassignedLabel(f"Assignment file has no entry for {', '.join(missing)}")


def _read_state(pairs: Any, dimension: int, subject: str) -> StateKet:
    """Parse a ket, accept rounding within tolerance and renormalize exactly."""
    amplitudes = pairs_to_vector(pairs)
    if amplitudes.size != dimension:
        raise UnexpectedFileContent(
            f"{subject} has {amplitudes.size} amplitudes, expected {dimension}"
        )
    state = StateKet(amplitudes)
    if abs(state.norm_squared - 1.0) > STATE_INPUT_TOLERANCE:
        raise InvalidState(f"{subject} is not normalized (squared norm {state.norm_squared!r})")
    return state.normalized()


class AssignmentLoader:
    """Load elementary projectors and the initial state from JSON."""

    @staticmethod
    def load(path: str | Path) -> AssignmentFile:
        """Read and validate an assignment file."""
        path = Path(path)
        _LOGGER.debug('Loading assignment file "%s"', path)
        try:
            with path.open(encoding="utf-8") as assignment_file:
                data = json.load(assignment_file)
        except json.JSONDecodeError as err:
            raise UnexpectedFileContent(f"{path} is not valid JSON: {err}") from err
        return AssignmentLoader.load_dict(data)

    @staticmethod
    def load_dict(data: Any) -> AssignmentFile:
        """Validate already decoded assignment data."""
        if not isinstance(data, dict):
            raise UnexpectedFileContent("Assignment file must contain a JSON object")
        version = data.get("format_version", FORMAT_VERSION)
        if version != FORMAT_VERSION:
            raise UnexpectedFileContent(f"Unsupported format_version {version!r}")
        for key in ("dimension", "elementary", "initial_state"):
            if key not in data:
                raise UnexpectedFileContent(f'Assignment file misses "{key}"')

        dimension = data["dimension"]
        if isinstance(dimension, bool) or not isinstance(dimension, int):
            raise UnexpectedFileContent(f"dimension must be an integer, got {dimension!r}")
        elementary = data["elementary"]
        if not isinstance(elementary, dict):
            raise UnexpectedFileContent('"elementary" must map labels to entries')

        projectors: dict[str, np.ndarray] = {}
        for label, entry in elementary.items():
            if not isinstance(entry, dict) or len(entry.keys() & {"state", "projector"}) != 1:
                raise UnexpectedFileContent(
                    f'Entry for "{label}" needs exactly one of "state" or "projector"'
                )
            if "state" in entry:
                state = _read_state(entry["state"], dimension, f'State of "{label}"')
                projectors[label] = projector_from_state(state)
            else:
                projectors[label] = pairs_to_matrix(entry["projector"])

        assignment = ElementaryAssignment(dimension, projectors)
        initial_state = _read_state(data["initial_state"], dimension, "Initial state")
        _LOGGER.debug("Loaded %s elementary projectors on d=%s", len(projectors), dimension)
        return AssignmentFile(assignment, initial_state)
