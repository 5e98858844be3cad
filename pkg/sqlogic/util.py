"""Serialization utilities: complex numbers travel as [re, im] pairs."""
from __future__ import annotations

import logging
from typing import Any

import numpy as np

from sqlogic.exceptions import UnexpectedFileContent

_LOGGER = logging.getLogger("sqlogic.log")


def complex_to_pair(value: complex) -> list[float]:
    """Serialize one complex number."""
    value = complex(value)
    return [float(value.real), float(value.imag)]


def vector_to_pairs(vector: np.ndarray) -> list[list[float]]:
    """Serialize a complex vector."""
    return [complex_to_pair(value) for value in np.asarray(vector).reshape(-1)]


def matrix_to_pairs(matrix: np.ndarray) -> list[list[list[float]]]:
    """Serialize a complex matrix row by row."""
    return [vector_to_pairs(row) for row in np.asarray(matrix)]


def pair_to_complex(pair: Any) -> complex:
    """Parse one [re, im] pair."""
    try:
        real, imag = pair
        return complex(float(real), float(imag))
    except (TypeError, ValueError):
        _LOGGER.error("Could not parse complex pair from %r", pair)
        raise UnexpectedFileContent(f"Expected a [re, im] pair, got {pair!r}")


def pairs_to_vector(pairs: Any) -> np.ndarray:
    """Parse a list of [re, im] pairs."""
    if not isinstance(pairs, list):
        raise UnexpectedFileContent(f"Expected a list of [re, im] pairs, got {pairs!r}")
    return np.array([pair_to_complex(pair) for pair in pairs], dtype=np.complex128)


def pairs_to_matrix(rows: Any) -> np.ndarray:
    """Parse a row-major list of rows of [re, im] pairs."""
    if not isinstance(rows, list) or not rows:
        raise UnexpectedFileContent(f"Expected a non-empty list of rows, got {rows!r}")
    parsed = [pairs_to_vector(row) for row in rows]
    if len({row.size for row in parsed}) != 1:
        raise UnexpectedFileContent("Matrix rows differ in length")
    return np.vstack(parsed)
