"""Abstract syntax of sequential propositions."""
from __future__ import annotations

from dataclasses import dataclass
import re
from typing import Union

from sqlogic.exceptions import PropositionSyntaxError

LABEL_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Elementary:
    """Elementary proposition, tested by a single projector."""

    label: str

    def __post_init__(self) -> None:
        """Validate the label."""
        if not LABEL_PATTERN.fullmatch(self.label):
            raise PropositionSyntaxError(f'Invalid elementary label "{self.label}"', 0)


@dataclass(frozen=True)
class Not:
    """Negation."""

    child: Proposition


@dataclass(frozen=True)
class SeqAnd:
    """Sequential conjunction: left tested first, then right."""

    left: Proposition
    right: Proposition


@dataclass(frozen=True)
class SeqXor:
    """Sequential exclusive OR."""

    left: Proposition
    right: Proposition


Proposition = Union[Elementary, Not, SeqAnd, SeqXor]
BinaryNode = Union[SeqAnd, SeqXor]
