"""Test assignment file loading."""
import json
from test import RESOURCES_PATH

import numpy as np
import pytest

from sqlogic.exceptions import (
    InvalidAssignment,
    InvalidState,
    UnassignedLabel,
    UnexpectedFileContent,
)
from sqlogic.loader import AssignmentLoader


def test_load_worked_example():
    """Test states and projectors both yield projectors."""
    loaded = AssignmentLoader.load(RESOURCES_PATH / "worked_example.json")
    one = np.array([[0, 0], [0, 1]], dtype=complex)
    assert loaded.assignment.system_dim == 2
    assert sorted(loaded.assignment.projectors) == ["a", "b", "c"]
    for label in "abc":
        np.testing.assert_allclose(loaded.assignment.projector(label), one, atol=1e-12)
    np.testing.assert_allclose(loaded.initial_state.amplitudes, [0, 1])
    loaded.require_labels(["a", "b", "c"])


def test_load_qutrit():
    """Test a d = 3 file with a rank-2 projector."""
    loaded = AssignmentLoader.load(RESOURCES_PATH / "qutrit.json")
    assert loaded.assignment.system_dim == 3
    assert loaded.assignment.rank("a") == 2
    assert loaded.assignment.rank("b") == 1
    assert not loaded.assignment.is_rank_one_qubit("b")


def test_missing_label():
    """Test missing labels are all named."""
    loaded = AssignmentLoader.load(RESOURCES_PATH / "half_half.json")
    with pytest.raises(UnassignedLabel, match="c, d"):
        loaded.require_labels(["a", "c", "d"])


def test_not_normalized():
    """Test an initial state off the unit sphere is rejected."""
    with pytest.raises(InvalidState):
        AssignmentLoader.load(RESOURCES_PATH / "not_normalized.json")


def test_broken_json():
    """Test undecodable files raise UnexpectedFileContent."""
    with pytest.raises(UnexpectedFileContent):
        AssignmentLoader.load(RESOURCES_PATH / "broken.json")


def test_small_rounding_is_renormalized():
    """Test states within tolerance of unit norm are accepted and renormalized."""
    loaded = AssignmentLoader.load_dict(
        {
            "dimension": 2,
            "elementary": {"a": {"state": [[1, 0], [0, 0]]}},
            "initial_state": [[1 + 1e-11, 0], [0, 0]],
        }
    )
    assert loaded.initial_state.norm_squared == pytest.approx(1.0, abs=1e-15)


VALID = {
    "dimension": 2,
    "elementary": {"a": {"state": [[1, 0], [0, 0]]}},
    "initial_state": [[1, 0], [0, 0]],
}


@pytest.mark.parametrize(
    ("changes", "error"),
    [
        ({"format_version": 2}, UnexpectedFileContent),
        ({"dimension": None}, UnexpectedFileContent),
        ({"dimension": True}, UnexpectedFileContent),
        ({"dimension": "2"}, UnexpectedFileContent),
        ({"elementary": []}, UnexpectedFileContent),
        ({"elementary": {"a": {}}}, UnexpectedFileContent),
        (
            {"elementary": {"a": {"state": [[1, 0], [0, 0]], "projector": [[[1, 0]]]}}},
            UnexpectedFileContent,
        ),
        ({"elementary": {"a": {"state": [[1, 0]]}}}, UnexpectedFileContent),
        ({"elementary": {"a": {"state": [[1, 0], [1, 0]]}}}, InvalidState),
        (
            {"elementary": {"a": {"projector": [[[1, 0], [1, 0]], [[0, 0], [0, 0]]]}}},
            InvalidAssignment,
        ),
        ({"initial_state": [[1, 0], [0, 0], [0, 0]]}, UnexpectedFileContent),
    ],
)
def test_invalid_content(changes, error):
    """Test every validation rule of the file format."""
    data = {**VALID, **changes}
    data = json.loads(json.dumps(data))
    with pytest.raises(error):
        AssignmentLoader.load_dict(data)


@pytest.mark.parametrize("missing", ["dimension", "elementary", "initial_state"])
def test_missing_key(missing):
    """Test required keys."""
    data = {key: value for key, value in VALID.items() if key != missing}
    with pytest.raises(UnexpectedFileContent, match=missing):
        AssignmentLoader.load_dict(data)


def test_not_an_object():
    """Test the top level must be a JSON object."""
    with pytest.raises(UnexpectedFileContent):
        AssignmentLoader.load_dict([VALID])
