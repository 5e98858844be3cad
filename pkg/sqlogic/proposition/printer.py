"""Render propositions back to text."""
from __future__ import annotations

from sqlogic.models import Elementary, Not, Proposition, SeqAnd, SeqXor

_SYMBOL = {SeqAnd: "&", SeqXor: "^"}


def print_proposition(proposition: Proposition) -> str:
    """Render with minimal parentheses; parsing the result yields the canonical tree."""
    if isinstance(proposition, Elementary):
        return proposition.label
    if isinstance(proposition, Not):
        child = print_proposition(proposition.child)
        if isinstance(proposition.child, (SeqAnd, SeqXor)):
            child = f"({child})"
        return f"!{child}"
    kind = type(proposition)
    left = print_proposition(proposition.left)
    right = print_proposition(proposition.right)
    # same-kind chains re-associate freely; a different binary kind needs brackets
    if isinstance(proposition.left, (SeqAnd, SeqXor)) and type(proposition.left) is not kind:
        left = f"({left})"
    if isinstance(proposition.right, (SeqAnd, SeqXor)) and type(proposition.right) is not kind:
        right = f"({right})"
    return f"{left}{_SYMBOL[kind]}{right}"


def tree_dump(proposition: Proposition) -> list[str]:
    """One line per node, children indented by two spaces."""
    lines: list[str] = []

    def _dump(node: Proposition, depth: int) -> None:
        indent = "  " * depth
        if isinstance(node, Elementary):
            lines.append(f"{indent}Elementary({node.label})")
        elif isinstance(node, Not):
            lines.append(f"{indent}Not")
            _dump(node.child, depth + 1)
        else:
            lines.append(f"{indent}{type(node).__name__}")
            _dump(node.left, depth + 1)
            _dump(node.right, depth + 1)

    _dump(proposition, 0)
    return lines
