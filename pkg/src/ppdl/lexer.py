"""Tokenizer for reaction statements.

Maximal-munch tokenization: at each position the longest matching rule wins,
and on equal length the fixed tokens win over PARTICLE. The PARTICLE
character class overlaps several fixed tokens, so e.g. a standalone "+" is
PLUS while "E+" is one PARTICLE, and "nu(tau)" is a single name even though
"(" alone is LP.
"""

from __future__ import annotations

import enum
import string
from dataclasses import dataclass


class TokenKind(enum.Enum):
    ARROW = "-->"
    END = ";"
    LP = "("
    RP = ")"
    LC = "<"
    RC = ">"
    PLUS = "+"
    MINUS = "-"
    CC = "CC"
    PARTICLE = "PARTICLE"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    offset: int


class LexError(ValueError):
    def __init__(self, char: str, offset: int):
        super().__init__(f"unexpected character {char!r} at offset {offset}")
        self.char = char
        self.offset = offset


_FIXED = [
    (TokenKind.ARROW, "-->"),
    (TokenKind.END, ";"),
    (TokenKind.LP, "("),
    (TokenKind.RP, ")"),
    (TokenKind.LC, "<"),
    (TokenKind.RC, ">"),
    (TokenKind.PLUS, "+"),
    (TokenKind.MINUS, "-"),
    (TokenKind.CC, "CC"),
]

_PARTICLE_CHARS = frozenset(
    string.ascii_letters + string.digits + '+-:".*=%_()/'
)

_WHITESPACE = frozenset(" \t\r\n")


def tokenize(text: str) -> list[Token]:
    """Split a statement into tokens; raises LexError on a stray character."""
    tokens: list[Token] = []
    pos = 0
    end = len(text)
    while pos < end:
        ch = text[pos]
        if ch in _WHITESPACE:
            pos += 1
            continue
        run = pos
        while run < end and text[run] in _PARTICLE_CHARS:
            run += 1
        particle_len = run - pos
        fixed_kind = None
        fixed_len = 0
        for kind, lit in _FIXED:
            if len(lit) > fixed_len and text.startswith(lit, pos):
                fixed_kind = kind
                fixed_len = len(lit)
        if particle_len > fixed_len:
            tokens.append(Token(TokenKind.PARTICLE, text[pos:run], pos))
            pos = run
        elif fixed_kind is not None:
            tokens.append(Token(fixed_kind, text[pos : pos + fixed_len], pos))
            pos += fixed_len
        else:
            raise LexError(ch, pos)
    return tokens
