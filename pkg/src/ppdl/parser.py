"""Recursive-descent parser for reaction statements.

Grammar (entry point `reaction`):

    reaction      := initial_state ARROW final_state END
    initial_state := PARTICLE PARTICLE*          (beam, then targets)
    particle      := PARTICLE
                   | PARTICLE "<" final_state ">"
                   | "(" final_state ")"
    decay_group   := particle*                   (may be empty)
    final_state   := decay_group (("+" | "-") decay_group)* ("+" CC)?

The charge-conjugate marker is accepted only on the top-level final state,
and a leading "-" before the first group is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lexer import LexError, Token, TokenKind, tokenize
from .model import FinalState, GroupNode, ParticleNode, Reaction, compo_node


@dataclass
class ParseError(ValueError):
    message: str
    offset: int
    expected: frozenset = field(default_factory=frozenset)

    def __str__(self) -> str:
        return f"{self.message} (at offset {self.offset})"


def parse_reaction(text: str) -> Reaction:
    """Parse one statement into a Reaction tree.

    Raises ParseError on a grammar violation and LexError on a character
    outside the token alphabet.
    """
    tokens = tokenize(text)
    return _Parser(tokens, len(text)).reaction()


class _Parser:
    def __init__(self, tokens: list[Token], text_len: int):
        self._tokens = tokens
        self._pos = 0
        self._end_offset = text_len

    def _peek(self, ahead: int = 0) -> Token | None:
        i = self._pos + ahead
        return self._tokens[i] if i < len(self._tokens) else None

    def _advance(self) -> Token:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _offset(self) -> int:
        tok = self._peek()
        return tok.offset if tok is not None else self._end_offset

    def _fail(self, message: str, expected: set[TokenKind]) -> ParseError:
        tok = self._peek()
        got = f", got {tok.text!r}" if tok is not None else ", got end of input"
        return ParseError(message + got, self._offset(), frozenset(expected))

    def _expect(self, kind: TokenKind) -> Token:
        tok = self._peek()
        if tok is None or tok.kind is not kind:
            raise self._fail(f"expected {kind.value!r}", {kind})
        return self._advance()

    def reaction(self) -> Reaction:
        initial: list[ParticleNode] = []
        while (tok := self._peek()) is not None and tok.kind is TokenKind.PARTICLE:
            initial.append(ParticleNode(self._advance().text))
        if not initial:
            raise self._fail("expected beam particle", {TokenKind.PARTICLE})
        self._expect(TokenKind.ARROW)
        final = self.final_state(allow_cc=True)
        self._expect(TokenKind.END)
        if self._peek() is not None:
            raise self._fail("unexpected input after statement end", set())
        return Reaction(initial, final)

    def final_state(self, allow_cc: bool) -> FinalState:
        tok = self._peek()
        if tok is not None and tok.kind is TokenKind.MINUS:
            raise self._fail("group sign not allowed before first group", set())
        groups = [GroupNode(1, self.decay_group())]
        cc = False
        while (tok := self._peek()) is not None and tok.kind in (
            TokenKind.PLUS,
            TokenKind.MINUS,
        ):
            nxt = self._peek(1)
            if tok.kind is TokenKind.PLUS and nxt is not None and nxt.kind is TokenKind.CC:
                if not allow_cc:
                    raise self._fail(
                        "charge-conjugate marker allowed only at top level", set()
                    )
                self._advance()
                self._advance()
                cc = True
                break
            sign = 1 if tok.kind is TokenKind.PLUS else -1
            self._advance()
            groups.append(GroupNode(sign, self.decay_group()))
        return FinalState(groups, cc)

    def decay_group(self) -> list[ParticleNode]:
        particles: list[ParticleNode] = []
        while (tok := self._peek()) is not None and tok.kind in (
            TokenKind.PARTICLE,
            TokenKind.LP,
        ):
            particles.append(self.particle())
        return particles

    def particle(self) -> ParticleNode:
        tok = self._advance()
        if tok.kind is TokenKind.LP:
            alternatives = self.final_state(allow_cc=False)
            self._expect(TokenKind.RP)
            return compo_node(alternatives)
        decay = None
        nxt = self._peek()
        if nxt is not None and nxt.kind is TokenKind.LC:
            self._advance()
            decay = self.final_state(allow_cc=False)
            self._expect(TokenKind.RC)
        return ParticleNode(tok.text, 1, decay)


__all__ = ["ParseError", "LexError", "parse_reaction"]
