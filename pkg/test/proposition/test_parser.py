"""Test parsing propositions."""
import re

from hypothesis import given, strategies as st
import pytest

from sqlogic.const import MAX_PROPOSITION_DEPTH
from sqlogic.exceptions import PropositionSyntaxError
from sqlogic.models import Elementary, Not, Proposition, SeqAnd, SeqXor
from sqlogic.proposition import (
    canonicalize,
    count_seq_ands,
    parse_proposition,
    print_proposition,
)

a, b, c, d = (Elementary(label) for label in "abcd")

labels = st.sampled_from(["a", "b", "c", "x1", "long_label"]).map(Elementary)
propositions = st.recursive(
    labels,
    lambda children: st.one_of(
        children.map(Not),
        st.builds(SeqAnd, children, children),
        st.builds(SeqXor, children, children),
    ),
    max_leaves=8,
)


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("!(a&b)&c", SeqAnd(Not(SeqAnd(a, b)), c)),
        ("a", a),
        ("a&b&c", SeqAnd(SeqAnd(a, b), c)),
        ("a & (b & c)", SeqAnd(a, SeqAnd(b, c))),
        ("!!a", Not(Not(a))),
        ("a^b", SeqXor(a, b)),
        ("(a^b)&c", SeqAnd(SeqXor(a, b), c)),
        ("a&!(b^c)", SeqAnd(a, Not(SeqXor(b, c)))),
        ("  ( a )  ", a),
        ("x_1&Y2", SeqAnd(Elementary("x_1"), Elementary("Y2"))),
    ],
)
def test_parse(text: str, expected: Proposition):
    """Test parsing valid propositions."""
    assert parse_proposition(text) == expected


@pytest.mark.parametrize(
    ("text", "position", "message"),
    [
        ("", 0, "Empty proposition"),
        ("   ", 0, "Empty proposition"),
        ("(", 1, "Unexpected end of input"),
        ("(a&b", 4, "Unbalanced '('"),
        ("a)", 1, "Unbalanced ')'"),
        ("a&", 1, "Dangling operator '&'"),
        ("!", 0, "Dangling operator '!'"),
        ("a&&b", 1, "Dangling operator '&'"),
        ("()", 1, "Empty parentheses"),
        ("a&b^c", 3, "Ambiguous mix"),
        ("a b", 2, "expected an operator"),
        ("a|b", 1, "Unexpected character"),
        ("1a", 0, "Unexpected character '1'"),
    ],
)
def test_parse_errors(text: str, position: int, message: str):
    """Test syntax errors carry their position."""
    with pytest.raises(PropositionSyntaxError, match=re.escape(message)) as err:
        parse_proposition(text)
    assert err.value.position == position


def test_label_validation():
    """Test labels must start with a letter."""
    with pytest.raises(PropositionSyntaxError):
        Elementary("_a")
    assert Elementary("a") == Elementary("a")
    assert Elementary("a") != Elementary("A")


@given(propositions)
def test_print_parse_round_trip(proposition: Proposition):
    """Test parsing printed text gives the canonical tree."""
    assert parse_proposition(print_proposition(proposition)) == canonicalize(proposition)


@given(propositions)
def test_printed_canonical_form_is_fixed_point(proposition: Proposition):
    """Test print and parse are inverse on canonical trees."""
    text = print_proposition(proposition)
    assert print_proposition(parse_proposition(text)) == text


def test_depth_limit_accepts_boundary():
    """Test trees exactly at the depth limit parse, canonicalize and print."""
    negated = "!" * (MAX_PROPOSITION_DEPTH - 1) + "a"
    assert print_proposition(canonicalize(parse_proposition(negated))) == negated
    chain = "&".join(["a"] * MAX_PROPOSITION_DEPTH)
    parsed = parse_proposition(chain)
    assert count_seq_ands(parsed) == MAX_PROPOSITION_DEPTH - 1
    assert print_proposition(parsed) == chain


@pytest.mark.parametrize(
    ("text", "position"),
    [
        ("!" * 1500 + "a", 1500 - MAX_PROPOSITION_DEPTH),
        ("!" * MAX_PROPOSITION_DEPTH + "a", 0),
        ("&".join(["a"] * 1200), 2 * MAX_PROPOSITION_DEPTH - 1),
        ("^".join(["b"] * (MAX_PROPOSITION_DEPTH + 1)), 2 * MAX_PROPOSITION_DEPTH - 1),
        ("(" * 1500 + "a" + ")" * 1500, MAX_PROPOSITION_DEPTH),
    ],
)
def test_depth_limit(text: str, position: int):
    """Test deeply nested input is a syntax error instead of a crash."""
    with pytest.raises(PropositionSyntaxError, match="nested deeper than") as err:
        parse_proposition(text)
    assert err.value.position == position
