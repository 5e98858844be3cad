"""Conftest for sqlogic."""
from collections.abc import Iterable
import json
from test import STUBS_PATH
from typing import Any

import numpy as np

from sqlogic.models import ElementaryAssignment, StateKet
from sqlogic.oracle import projector_from_state


def assert_stub(to_be_verified: Any, stub_name: str) -> None:
    """Assert input matched loaded stub file."""
    stub_path = STUBS_PATH / stub_name

    def remove_format_version(obj: dict[str, Any]) -> dict[str, Any]:
        """Remove format_version from object."""
        version = obj.pop("format_version")
        assert isinstance(version, int)
        return obj

    with open(stub_path, encoding="utf-8") as stub_file:
        stub = remove_format_version(json.load(stub_file))
        to_be_verified = remove_format_version(json.loads(json.dumps(to_be_verified)))
        for key, value in stub.items():
            assert key in to_be_verified, f"`{key}` key missing in generated object"
            assert value == to_be_verified[key], f"`{key}` item does not match"

        for key in to_be_verified.keys():
            assert key in stub, f"`{key}` key of generated object missing in stub"


def random_state(rng: np.random.Generator, dim: int) -> StateKet:
    """Haar-like random normalized ket."""
    amplitudes = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return StateKet(amplitudes).normalized()


def random_projector(rng: np.random.Generator, dim: int, rank: int = 1) -> np.ndarray:
    """Projector onto a random rank-dimensional subspace."""
    basis = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    orthonormal, _ = np.linalg.qr(basis)
    return orthonormal @ orthonormal.conj().T


def random_qubit_assignment(rng: np.random.Generator, labels: list[str]) -> ElementaryAssignment:
    """Rank-1 qubit projector for every label."""
    return ElementaryAssignment(
        2, {label: projector_from_state(random_state(rng, 2)) for label in labels}
    )


def basis_projector(dim: int, index: int) -> np.ndarray:
    """|index><index| on dim."""
    return projector_from_state(StateKet.basis(dim, index))


PLUS_PROJECTOR = np.full((2, 2), 0.5, dtype=np.complex128)


def half_half_assignment() -> ElementaryAssignment:
    """[a] = |0><0|, [b] = |+><+| on a qubit."""
    return ElementaryAssignment(2, {"a": basis_projector(2, 0), "b": PLUS_PROJECTOR})


def all_one_assignment(labels: Iterable[str] = "abc") -> ElementaryAssignment:
    """Every label assigned |1><1|."""
    return ElementaryAssignment(2, {label: basis_projector(2, 1) for label in labels})
