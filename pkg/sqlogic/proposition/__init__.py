"""Sequential proposition language: parsing, printing and structural queries."""
from .parser import PropositionParser, parse_proposition
from .printer import print_proposition, tree_dump
from .queries import (
    PostorderEntry,
    canonicalize,
    classical_eval,
    count_nots,
    count_seq_ands,
    count_seq_xors,
    iter_postorder,
    leaves,
    reduction_schedule,
)

__all__ = [
    "PostorderEntry",
    "PropositionParser",
    "canonicalize",
    "classical_eval",
    "count_nots",
    "count_seq_ands",
    "count_seq_xors",
    "iter_postorder",
    "leaves",
    "parse_proposition",
    "print_proposition",
    "reduction_schedule",
    "tree_dump",
]
