"""Recursive descent parser for the proposition surface grammar.

Grammar (whitespace ignored)::

    chain := unary (("&" | "^") unary)*     one operator kind per level
    unary := "!" unary | atom
    atom  := IDENT | "(" chain ")"

`&` is sequential conjunction, `^` sequential exclusive OR. Both are
left-associative with equal precedence; mixing them at one bracket level is
rejected as ambiguous.

Trees deeper than MAX_PROPOSITION_DEPTH levels, and brackets nested deeper than
that, are rejected with the position of the offending token.
"""
from __future__ import annotations

from dataclasses import dataclass
import logging

from sqlogic.const import MAX_PROPOSITION_DEPTH
from sqlogic.exceptions import PropositionSyntaxError
from sqlogic.models import Elementary, Not, Proposition, SeqAnd, SeqXor
from sqlogic.models.proposition import LABEL_PATTERN

_LOGGER = logging.getLogger("sqlogic.log")

_SYMBOLS = {"!": "NOT", "&": "AND", "^": "XOR", "(": "LPAREN", ")": "RPAREN"}
_BINARY = {"AND": SeqAnd, "XOR": SeqXor}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0
    while position < len(text):
        char = text[position]
        if char.isspace():
            position += 1
            continue
        if char in _SYMBOLS:
            tokens.append(_Token(_SYMBOLS[char], char, position))
            position += 1
            continue
        match = LABEL_PATTERN.match(text, position)
        if match is None:
            raise PropositionSyntaxError(f"Unexpected character '{char}'", position)
        tokens.append(_Token("IDENT", match.group(), position))
        position = match.end()
    tokens.append(_Token("END", "", len(text)))
    return tokens


class PropositionParser:
    """Parse one proposition string."""

    def __init__(self, text: str) -> None:
        """Initialize the parser."""
        self.text = text
        self._tokens = _tokenize(text)
        self._index = 0
        self._open_brackets = 0

    def parse(self) -> Proposition:
        """Parse the whole input."""
        if self._peek().kind == "END":
            raise PropositionSyntaxError("Empty proposition", 0)
        proposition, _ = self._chain()
        token = self._peek()
        if token.kind == "RPAREN":
            raise PropositionSyntaxError("Unbalanced ')'", token.position)
        if token.kind != "END":
            raise PropositionSyntaxError(
                f"Unexpected '{token.text}', expected an operator", token.position
            )
        return proposition

    def _peek(self) -> _Token:
        return self._tokens[self._index]

    def _advance(self) -> _Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    @staticmethod
    def _nest(depth: int, token: _Token) -> int:
        if depth > MAX_PROPOSITION_DEPTH:
            raise PropositionSyntaxError(
                f"Proposition nested deeper than {MAX_PROPOSITION_DEPTH} levels",
                token.position,
            )
        return depth

    def _chain(self) -> tuple[Proposition, int]:
        left, depth = self._unary()
        chain_kind: str | None = None
        while (token := self._peek()).kind in _BINARY:
            if chain_kind is None:
                chain_kind = token.kind
            elif token.kind != chain_kind:
                raise PropositionSyntaxError(
                    "Ambiguous mix of '&' and '^', add parentheses", token.position
                )
            self._advance()
            right, right_depth = self._unary()
            depth = self._nest(max(depth, right_depth) + 1, token)
            left = _BINARY[token.kind](left, right)
        return left, depth

    def _unary(self) -> tuple[Proposition, int]:
        negations: list[_Token] = []
        while self._peek().kind == "NOT":
            negations.append(self._advance())
        node, depth = self._atom()
        for token in reversed(negations):
            depth = self._nest(depth + 1, token)
            node = Not(node)
        return node, depth

    def _atom(self) -> tuple[Proposition, int]:
        token = self._advance()
        if token.kind == "IDENT":
            return Elementary(token.text), 1
        if token.kind == "LPAREN":
            self._open_brackets = self._nest(self._open_brackets + 1, token)
            inner = self._chain()
            closing = self._advance()
            if closing.kind != "RPAREN":
                raise PropositionSyntaxError(
                    f"Unbalanced '(' opened at position {token.position}",
                    closing.position,
                )
            self._open_brackets -= 1
            return inner
        previous = self._tokens[self._index - 2] if self._index >= 2 else None
        if token.kind == "END":
            if previous is not None and previous.kind in ("AND", "XOR", "NOT"):
                raise PropositionSyntaxError(
                    f"Dangling operator '{previous.text}'", previous.position
                )
            raise PropositionSyntaxError("Unexpected end of input", token.position)
        if token.kind == "RPAREN" and previous is not None and previous.kind == "LPAREN":
            raise PropositionSyntaxError("Empty parentheses", token.position)
        if previous is not None and previous.kind in ("AND", "XOR"):
            raise PropositionSyntaxError(
                f"Dangling operator '{previous.text}'", previous.position
            )
        raise PropositionSyntaxError(f"Unexpected '{token.text}'", token.position)


def parse_proposition(text: str) -> Proposition:
    """Parse proposition text into its syntax tree."""
    proposition = PropositionParser(text).parse()
    _LOGGER.debug('Parsed "%s" into %s', text, proposition)
    return proposition
