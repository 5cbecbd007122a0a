"""In-memory reaction tree: particles, groups, final states, reactions."""

from __future__ import annotations

import copy
from dataclasses import dataclass, field

# Synthetic node name for a parenthesized group of alternatives. Such a node
# always has count 0 and carries the alternatives in its decay field.
COMPO = "?compo"


@dataclass
class ParticleNode:
    """One particle species occurrence in a sequence.

    count >= 1 for named particles; count == 0 is reserved for COMPO nodes.
    decay, when present, describes the particle's decay alternatives.
    """

    name: str
    count: int = 1
    decay: FinalState | None = None


@dataclass
class GroupNode:
    """A signed alternative: one particle sequence with a unary sign."""

    sign: int = 1
    particles: list[ParticleNode] = field(default_factory=list)


@dataclass
class FinalState:
    """A sequence of signed groups, optionally marked charge-conjugate.

    The cc flag may be true only on the top-level final state of a Reaction.
    """

    groups: list[GroupNode] = field(default_factory=list)
    cc: bool = False


@dataclass
class Reaction:
    """Initial-state particle sequence (beam first) plus a final state."""

    initial: list[ParticleNode] = field(default_factory=list)
    final: FinalState = field(default_factory=FinalState)


def compo_node(alternatives: FinalState) -> ParticleNode:
    """Build the synthetic grouping node for a parenthesized final state."""
    return ParticleNode(COMPO, 0, alternatives)


def deep_copy(r: Reaction) -> Reaction:
    """Fully independent structural copy of a reaction."""
    return copy.deepcopy(r)


def structural_equal(a: Reaction, b: Reaction) -> bool:
    """Node-for-node equality, including order, signs, counts and cc flags."""
    return a == b
