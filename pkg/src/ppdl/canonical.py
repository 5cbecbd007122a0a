"""Reduction of a parsed reaction to canonical form.

The pipeline is: synonym resolution, distribution of grouping brackets,
merging of duplicate particles, then recursive sorting under one of two
ordering modes (plain lexicographic, or rank order of the particle
dictionary). All transformations are pure; they build new trees.
"""

from __future__ import annotations

import copy
import enum
import itertools

from .model import COMPO, FinalState, GroupNode, ParticleNode, Reaction
from .tables import Dictionary


class OrderingMode(enum.Enum):
    TRUE_LEX = "lex"
    DICT = "dict"


# ---------------------------------------------------------------- synonyms


def resolve_synonyms(r: Reaction, dictionary: Dictionary) -> Reaction:
    """Replace every particle name found in the dictionary by its key name.

    Unknown names (including the synthetic grouping node) pass through.
    """
    return Reaction(
        [_resolve_node(n, dictionary) for n in r.initial],
        _resolve_fs(r.final, dictionary),
    )


def _resolve_node(n: ParticleNode, d: Dictionary) -> ParticleNode:
    name = n.name if n.name == COMPO else d.key_for(n.name)
    decay = _resolve_fs(n.decay, d) if n.decay is not None else None
    return ParticleNode(name, n.count, decay)


def _resolve_fs(fs: FinalState, d: Dictionary) -> FinalState:
    return FinalState(
        [GroupNode(g.sign, [_resolve_node(n, d) for n in g.particles]) for g in fs.groups],
        fs.cc,
    )


# -------------------------------------------------------- bracket expansion


def expand_groups(fs: FinalState) -> FinalState:
    """Eliminate grouping nodes by distributing their alternatives.

    Each group containing grouping nodes is replaced by the cross product of
    their alternatives, spliced in place, with signs multiplied through.
    Alternatives of the leftmost grouping node vary slowest. Applied
    recursively inside decay descriptions.
    """
    groups: list[GroupNode] = []
    for g in fs.groups:
        for sign, items in _expand_seq(g.particles):
            groups.append(GroupNode(g.sign * sign, items))
    return FinalState(groups, fs.cc)


def _expand_node(n: ParticleNode) -> list[tuple[int, list[ParticleNode]]]:
    """Alternatives denoted by a single node: (sign, spliced particles)."""
    if n.name == COMPO:
        expanded = expand_groups(n.decay)
        return [(g.sign, g.particles) for g in expanded.groups]
    decay = expand_groups(n.decay) if n.decay is not None else None
    return [(1, [ParticleNode(n.name, n.count, decay)])]


def _expand_seq(items: list[ParticleNode]) -> list[tuple[int, list[ParticleNode]]]:
    choices = [_expand_node(n) for n in items]
    out: list[tuple[int, list[ParticleNode]]] = []
    for combo in itertools.product(*choices):
        sign = 1
        seq: list[ParticleNode] = []
        for s, part in combo:
            sign *= s
            seq.extend(copy.deepcopy(part))
        out.append((sign, seq))
    return out


# ---------------------------------------------------------------- merging


def merge_duplicates(r: Reaction) -> Reaction:
    """Merge decay-free nodes of the same name within each sequence.

    Occurrences are combined into the first one, summing counts. Nodes that
    carry a decay description are never merged. Requires grouping nodes to
    have been expanded away.
    """
    return Reaction(_merge_seq(r.initial), _merge_fs(r.final))


def _merge_fs(fs: FinalState) -> FinalState:
    return FinalState(
        [GroupNode(g.sign, _merge_seq(g.particles)) for g in fs.groups], fs.cc
    )


def _merge_seq(items: list[ParticleNode]) -> list[ParticleNode]:
    out: list[ParticleNode] = []
    first_at: dict[str, int] = {}
    for n in items:
        decay = _merge_fs(n.decay) if n.decay is not None else None
        if decay is None and n.name in first_at:
            out[first_at[n.name]].count += n.count
        else:
            if decay is None:
                first_at[n.name] = len(out)
            out.append(ParticleNode(n.name, n.count, decay))
    return out


def expand_counts(r: Reaction) -> Reaction:
    """Inverse of merging: replace count-k nodes by k count-1 copies."""
    return Reaction(_expand_counts_seq(r.initial), _expand_counts_fs(r.final))


def _expand_counts_fs(fs: FinalState) -> FinalState:
    return FinalState(
        [GroupNode(g.sign, _expand_counts_seq(g.particles)) for g in fs.groups], fs.cc
    )


def _expand_counts_seq(items: list[ParticleNode]) -> list[ParticleNode]:
    out: list[ParticleNode] = []
    for n in items:
        decay = _expand_counts_fs(n.decay) if n.decay is not None else None
        for _ in range(max(n.count, 1)):
            out.append(ParticleNode(n.name, 0 if n.name == COMPO else 1, copy.deepcopy(decay)))
    return out


# ---------------------------------------------------------------- ordering


def name_key(name: str, mode: OrderingMode, dictionary: Dictionary):
    """Sort key for a particle name under the given ordering mode.

    TRUE_LEX compares names bytewise. DICT compares dictionary ranks;
    names absent from the dictionary sort after all present ones and
    bytewise among themselves.
    """
    if mode is OrderingMode.TRUE_LEX:
        return (0, name.encode())
    rank = dictionary.rank_of(name)
    if rank is not None:
        return (0, rank)
    return (1, name.encode())


def compare_names(a: str, b: str, mode: OrderingMode, dictionary: Dictionary) -> int:
    """Three-way comparison: -1, 0 or +1."""
    ka = name_key(a, mode, dictionary)
    kb = name_key(b, mode, dictionary)
    return (ka > kb) - (ka < kb)


def _node_key(n: ParticleNode, mode: OrderingMode, d: Dictionary):
    # Decay content participates in the key so that same-name nodes with
    # different decays order deterministically (needed for permutation
    # invariance of the canonical form).
    if n.decay is None:
        return (name_key(n.name, mode, d), 0, ())
    return (name_key(n.name, mode, d), 1, _fs_key(n.decay, mode, d))


def _seq_key(items: list[ParticleNode], mode: OrderingMode, d: Dictionary):
    key = []
    for n in items:
        key.extend([_node_key(n, mode, d)] * max(n.count, 1))
    return tuple(key)


def _group_key(g: GroupNode, mode: OrderingMode, d: Dictionary):
    # Positive groups order before negative ones; within a sign, groups
    # compare elementwise on their sorted particle sequences (shorter
    # sequence first on prefix equality).
    return (0 if g.sign > 0 else 1, _seq_key(g.particles, mode, d))


def _fs_key(fs: FinalState, mode: OrderingMode, d: Dictionary):
    return tuple(_group_key(g, mode, d) for g in fs.groups) + (fs.cc,)


def sort_reaction(r: Reaction, mode: OrderingMode, dictionary: Dictionary) -> Reaction:
    """Recursively sort particle sequences and final-state groups."""
    return Reaction(
        _sort_seq(r.initial, mode, dictionary), _sort_fs(r.final, mode, dictionary)
    )


def _sort_seq(items: list[ParticleNode], mode: OrderingMode, d: Dictionary):
    sorted_nodes = [
        ParticleNode(n.name, n.count, _sort_fs(n.decay, mode, d) if n.decay else None)
        for n in items
    ]
    sorted_nodes.sort(key=lambda n: _node_key(n, mode, d))
    return sorted_nodes


def _sort_fs(fs: FinalState, mode: OrderingMode, d: Dictionary) -> FinalState:
    groups = [GroupNode(g.sign, _sort_seq(g.particles, mode, d)) for g in fs.groups]
    groups.sort(key=lambda g: _group_key(g, mode, d))
    return FinalState(groups, fs.cc)


# ------------------------------------------------------------- entry point


def canonicalize(
    r: Reaction, mode: OrderingMode, dictionary: Dictionary
) -> Reaction:
    """Full canonical form: synonyms, expansion, merging, then sorting.

    Idempotent: canonicalizing a canonical reaction is a fixed point.
    """
    out = resolve_synonyms(r, dictionary)
    out = Reaction(out.initial, expand_groups(out.final))
    out = merge_duplicates(out)
    return sort_reaction(out, mode, dictionary)
