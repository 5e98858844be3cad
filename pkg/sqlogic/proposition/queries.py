"""Structural queries over proposition trees."""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from sqlogic.exceptions import UnassignedLabel, UnsupportedProposition
from sqlogic.models import BinaryNode, Elementary, Not, Proposition, SeqAnd, SeqXor


@dataclass(frozen=True)
class PostorderEntry:
    """Node position in a post-order walk; children refer to earlier indices."""

    index: int
    node: Proposition
    children: tuple[int, ...]


def _flatten_chain(node: Proposition, kind: type) -> list[Proposition]:
    if type(node) is kind:
        binary: BinaryNode = node  # type: ignore[assignment]
        return _flatten_chain(binary.left, kind) + _flatten_chain(binary.right, kind)
    return [node]


def canonicalize(proposition: Proposition) -> Proposition:
    """Left-associate every SeqAnd and SeqXor chain; nothing else is rewritten."""
    if isinstance(proposition, Elementary):
        return proposition
    if isinstance(proposition, Not):
        return Not(canonicalize(proposition.child))
    kind = type(proposition)
    operands = [canonicalize(operand) for operand in _flatten_chain(proposition, kind)]
    result = operands[0]
    for operand in operands[1:]:
        result = kind(result, operand)
    return result


def iter_postorder(proposition: Proposition) -> list[PostorderEntry]:
    """Children before parents, left before right, with positional identity."""
    entries: list[PostorderEntry] = []

    def _visit(node: Proposition) -> int:
        if isinstance(node, Elementary):
            children: tuple[int, ...] = ()
        elif isinstance(node, Not):
            children = (_visit(node.child),)
        else:
            children = (_visit(node.left), _visit(node.right))
        entries.append(PostorderEntry(len(entries), node, children))
        return len(entries) - 1

    _visit(proposition)
    return entries


def leaves(proposition: Proposition) -> list[str]:
    """Elementary labels in left-to-right order, repeated labels included."""
    return [
        entry.node.label
        for entry in iter_postorder(proposition)
        if isinstance(entry.node, Elementary)
    ]


def _count(proposition: Proposition, kind: type) -> int:
    return sum(1 for entry in iter_postorder(proposition) if type(entry.node) is kind)


def count_seq_ands(proposition: Proposition) -> int:
    """Number of sequential conjunction nodes."""
    return _count(proposition, SeqAnd)


def count_seq_xors(proposition: Proposition) -> int:
    """Number of sequential exclusive OR nodes."""
    return _count(proposition, SeqXor)


def count_nots(proposition: Proposition) -> int:
    """Number of negation nodes."""
    return _count(proposition, Not)


def reduction_schedule(proposition: Proposition) -> list[Proposition]:
    """Internal nodes in the order the reduction stage processes them."""
    entries = iter_postorder(proposition)
    if any(isinstance(entry.node, SeqXor) for entry in entries):
        raise UnsupportedProposition(
            "Sequential exclusive OR can not be compiled into the reduction protocol"
        )
    return [entry.node for entry in entries if not isinstance(entry.node, Elementary)]


def classical_eval(proposition: Proposition, truth: Mapping[str, bool]) -> bool:
    """Boolean semantics: SeqAnd is AND, Not is NOT, SeqXor is XOR."""
    if isinstance(proposition, Elementary):
        try:
            return bool(truth[proposition.label])
        except KeyError:
            raise UnassignedLabel(f'No truth value for "{proposition.label}"')
    if isinstance(proposition, Not):
        return not classical_eval(proposition.child, truth)
    left = classical_eval(proposition.left, truth)
    right = classical_eval(proposition.right, truth)
    if isinstance(proposition, SeqAnd):
        return left and right
    return left != right
