"""Rendering of reaction trees back to statement text.

Output uses single spaces between tokens and stays within the statement
grammar: multiplicity counts are expanded back to repeated names, decay
descriptions render as " < ... > ", grouping nodes as "( ... )", and the
charge-conjugate marker as a trailing "+ CC".
"""

from __future__ import annotations

from .model import COMPO, FinalState, ParticleNode, Reaction


def render_reaction(r: Reaction) -> str:
    """One-line statement text for a reaction, terminated by " ;".

    The sign of the first group of a final state has no surface syntax, so
    a leading negative sign (unreachable through parsing or
    canonicalization) would be dropped.
    """
    tokens = _seq_tokens(r.initial)
    tokens.append("-->")
    tokens.extend(_fs_tokens(r.final))
    tokens.append(";")
    return " ".join(tokens)


def _fs_tokens(fs: FinalState) -> list[str]:
    tokens: list[str] = []
    for i, g in enumerate(fs.groups):
        if i > 0:
            tokens.append("+" if g.sign > 0 else "-")
        tokens.extend(_seq_tokens(g.particles))
    if fs.cc:
        tokens.extend(["+", "CC"])
    return tokens


def _seq_tokens(seq: list[ParticleNode]) -> list[str]:
    tokens: list[str] = []
    for n in seq:
        if n.name == COMPO:
            tokens.append("(")
            tokens.extend(_fs_tokens(n.decay))
            tokens.append(")")
            continue
        for _ in range(n.count):
            tokens.append(n.name)
            if n.decay is not None:
                tokens.append("<")
                tokens.extend(_fs_tokens(n.decay))
                tokens.append(">")
    return tokens
