"""Test rendering propositions."""
import pytest

from sqlogic.models import Elementary, Not, Proposition, SeqAnd, SeqXor
from sqlogic.proposition import parse_proposition, print_proposition, tree_dump

a, b, c = (Elementary(label) for label in "abc")


@pytest.mark.parametrize(
    ("proposition", "expected"),
    [
        (SeqAnd(Not(SeqAnd(a, b)), c), "!(a&b)&c"),
        (a, "a"),
        (Not(Not(a)), "!!a"),
        (SeqAnd(a, SeqAnd(b, c)), "a&b&c"),
        (SeqAnd(SeqXor(a, b), c), "(a^b)&c"),
        (SeqXor(a, SeqAnd(b, c)), "a^(b&c)"),
        (Not(SeqXor(a, b)), "!(a^b)"),
        (Not(Not(SeqAnd(a, b))), "!!(a&b)"),
    ],
)
def test_print_proposition(proposition: Proposition, expected: str):
    """Test minimal parentheses rendering."""
    assert print_proposition(proposition) == expected


def test_tree_dump():
    """Test indented tree rendering of the worked example."""
    assert tree_dump(parse_proposition("!(a&b)&c")) == [
        "SeqAnd",
        "  Not",
        "    SeqAnd",
        "      Elementary(a)",
        "      Elementary(b)",
        "  Elementary(c)",
    ]
