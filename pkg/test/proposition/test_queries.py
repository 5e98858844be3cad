"""Test structural queries on propositions."""
from hypothesis import given, strategies as st
import pytest

from sqlogic.exceptions import UnassignedLabel, UnsupportedProposition
from sqlogic.models import Elementary, Not, Proposition, SeqAnd, SeqXor
from sqlogic.proposition import (
    canonicalize,
    classical_eval,
    count_nots,
    count_seq_ands,
    count_seq_xors,
    iter_postorder,
    leaves,
    parse_proposition,
    reduction_schedule,
)

a, b, c = (Elementary(label) for label in "abc")

and_not_trees = st.recursive(
    st.sampled_from("abcd").map(Elementary),
    lambda children: st.one_of(children.map(Not), st.builds(SeqAnd, children, children)),
    max_leaves=6,
)


@pytest.mark.parametrize(
    ("proposition", "expected"),
    [
        (SeqAnd(a, SeqAnd(b, c)), SeqAnd(SeqAnd(a, b), c)),
        (SeqAnd(SeqAnd(a, b), c), SeqAnd(SeqAnd(a, b), c)),
        (Not(SeqAnd(a, SeqAnd(b, c))), Not(SeqAnd(SeqAnd(a, b), c))),
        (SeqXor(a, SeqXor(b, c)), SeqXor(SeqXor(a, b), c)),
        (SeqAnd(a, SeqXor(b, c)), SeqAnd(a, SeqXor(b, c))),
        (Not(Not(a)), Not(Not(a))),
    ],
)
def test_canonicalize(proposition: Proposition, expected: Proposition):
    """Test chains are left-associated and nothing else changes."""
    assert canonicalize(proposition) == expected


@given(and_not_trees)
def test_canonicalize_properties(proposition: Proposition):
    """Test idempotence, invariant counts and left association."""
    canonical = canonicalize(proposition)
    assert canonicalize(canonical) == canonical
    assert count_seq_ands(canonical) == count_seq_ands(proposition)
    assert leaves(canonical) == leaves(proposition)
    for entry in iter_postorder(canonical):
        if isinstance(entry.node, SeqAnd):
            assert not isinstance(entry.node.right, SeqAnd)
    assert len(reduction_schedule(canonical)) == count_nots(canonical) + count_seq_ands(
        canonical
    )


@pytest.mark.parametrize(
    ("text", "ands", "xors", "labels"),
    [
        ("!(a&b)&c", 2, 0, ["a", "b", "c"]),
        ("a", 0, 0, ["a"]),
        ("a&b&c&d", 3, 0, ["a", "b", "c", "d"]),
        ("a&a", 1, 0, ["a", "a"]),
        ("(a^b)&!c", 1, 1, ["a", "b", "c"]),
    ],
)
def test_counts(text: str, ands: int, xors: int, labels: list[str]):
    """Test node counting and leaf order."""
    proposition = parse_proposition(text)
    assert count_seq_ands(proposition) == ands
    assert count_seq_xors(proposition) == xors
    assert leaves(proposition) == labels


def test_reduction_schedule_worked_example():
    """Test AND of a and b first, then the negation, then the outer AND."""
    inner = SeqAnd(a, b)
    assert reduction_schedule(parse_proposition("!(a&b)&c")) == [
        inner,
        Not(inner),
        SeqAnd(Not(inner), c),
    ]
    assert reduction_schedule(a) == []
    assert reduction_schedule(Not(a)) == [Not(a)]


def test_reduction_schedule_rejects_xor():
    """Test sequential XOR is not part of the reduction protocol."""
    with pytest.raises(UnsupportedProposition):
        reduction_schedule(parse_proposition("!(a^b)"))


def test_iter_postorder_identical_subtrees():
    """Test repeated subtrees keep distinct positions."""
    entries = iter_postorder(parse_proposition("a&a"))
    assert [entry.index for entry in entries] == [0, 1, 2]
    assert entries[2].children == (0, 1)
    assert entries[0].node == entries[1].node


@pytest.mark.parametrize(
    ("text", "truth", "expected"),
    [
        ("!(a&b)&c", {"a": True, "b": True, "c": True}, False),
        ("!(a&b)&c", {"a": False, "b": True, "c": True}, True),
        ("a^b", {"a": True, "b": True}, False),
        ("a^b", {"a": True, "b": False}, True),
        ("!!a", {"a": False}, False),
    ],
)
def test_classical_eval(text: str, truth: dict[str, bool], expected: bool):
    """Test Boolean semantics."""
    assert classical_eval(parse_proposition(text), truth) is expected


def test_classical_eval_missing_label():
    """Test missing truth values raise."""
    with pytest.raises(UnassignedLabel):
        classical_eval(parse_proposition("a&b"), {"a": True})
