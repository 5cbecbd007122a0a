"""Shared test utilities: random tree generators and independent oracles."""

from __future__ import annotations

import random
from collections import Counter

from ppdl import COMPO, FinalState, GroupNode, ParticleNode, Reaction

KNOWN_NAMES = [
    "e+", "e-", "mu+", "mu-", "nu(e)", "nu(mu)", "nu(tau)", "gamma",
    "p", "n", "pi+", "pi-", "pi0", "K+", "K-", "W+", "W-", "Z0",
    "E+", "MU-", "NUTAU", "PHOTON",
]
UNKNOWN_NAMES = ["QUARK", "QUARKBAR", "X1", "ZZ9", "glob"]
ALL_NAMES = KNOWN_NAMES + UNKNOWN_NAMES


def random_node(rng: random.Random, depth: int, allow_compo: bool) -> ParticleNode:
    if allow_compo and depth > 0 and rng.random() < 0.25:
        return ParticleNode(COMPO, 0, random_fs(rng, depth - 1, allow_compo))
    name = rng.choice(ALL_NAMES)
    decay = None
    if depth > 0 and rng.random() < 0.3:
        decay = random_fs(rng, depth - 1, allow_compo)
    return ParticleNode(name, 1, decay)


def random_seq(
    rng: random.Random, depth: int, allow_compo: bool, max_len: int = 4
) -> list[ParticleNode]:
    return [
        random_node(rng, depth, allow_compo) for _ in range(rng.randint(1, max_len))
    ]


def random_fs(
    rng: random.Random,
    depth: int,
    allow_compo: bool,
    max_groups: int = 3,
    max_len: int = 4,
) -> FinalState:
    groups = []
    for i in range(rng.randint(1, max_groups)):
        sign = 1 if i == 0 else rng.choice([1, -1])
        groups.append(GroupNode(sign, random_seq(rng, depth, allow_compo, max_len)))
    return FinalState(groups)


def expansion_size(fs: FinalState) -> int:
    """Number of groups after full bracket distribution."""
    total = 0
    for g in fs.groups:
        prod = 1
        for n in g.particles:
            if n.name == COMPO:
                prod *= expansion_size(n.decay)
            elif n.decay is not None:
                prod *= max(1, expansion_size(n.decay))
        total += prod
    return total


def bounded_random_fs(
    rng: random.Random,
    depth: int,
    max_groups: int = 3,
    max_len: int = 4,
    max_expanded: int = 200,
) -> FinalState:
    """Random final state with brackets whose expansion stays tractable."""
    while True:
        fs = random_fs(rng, depth, True, max_groups, max_len)
        if expansion_size(fs) <= max_expanded:
            return fs


def random_reaction(
    rng: random.Random, depth: int = 2, allow_compo: bool = False
) -> Reaction:
    initial = [ParticleNode(rng.choice(ALL_NAMES)) for _ in range(rng.randint(1, 3))]
    if allow_compo:
        final = bounded_random_fs(rng, depth)
    else:
        final = random_fs(rng, depth, False)
    return Reaction(initial, final)


def shuffled_reaction(r: Reaction, rng: random.Random) -> Reaction:
    """Copy of r with every sibling sequence and group list permuted."""

    def shuffle_seq(seq):
        nodes = [
            ParticleNode(n.name, n.count, shuffle_fs(n.decay) if n.decay else None)
            for n in seq
        ]
        rng.shuffle(nodes)
        return nodes

    def shuffle_fs(fs):
        groups = [GroupNode(g.sign, shuffle_seq(g.particles)) for g in fs.groups]
        rng.shuffle(groups)
        return FinalState(groups, fs.cc)

    return Reaction(shuffle_seq(r.initial), shuffle_fs(r.final))


# --------------------------------------------------------------------------
# Independent oracle for grouping-bracket distribution. Works on value
# fingerprints and explicit cross products rather than tree rewriting.


def node_fingerprint(n: ParticleNode):
    return (n.name, n.count, fs_fingerprint(n.decay) if n.decay else ())


def fs_fingerprint(fs: FinalState):
    """Order-insensitive fingerprint: sorted (sign, sorted-particles) pairs."""
    pairs = [
        (g.sign, tuple(sorted(node_fingerprint(n) for n in g.particles)))
        for g in fs.groups
    ]
    return tuple(sorted(pairs)) + (fs.cc,)


def oracle_expand_fs(fs: FinalState) -> Counter:
    """Multiset of (sign, particle-multiset) pairs after full distribution."""
    out = Counter()
    for g in fs.groups:
        for sign, items in _oracle_seq(g.particles):
            out[(g.sign * sign, tuple(sorted(items)))] += 1
    return out


def _oracle_node(n: ParticleNode):
    if n.name == COMPO:
        alts = []
        for g in n.decay.groups:
            for sign, items in _oracle_seq(g.particles):
                alts.append((g.sign * sign, items))
        return alts
    decay_fp = _oracle_decay_fp(n.decay) if n.decay else ()
    return [(1, [(n.name, n.count, decay_fp)])]


def _oracle_decay_fp(fs: FinalState):
    expanded = sorted(
        (sign, tuple(sorted(items))) for sign, items in _oracle_fs_pairs(fs)
    )
    return tuple(expanded) + (fs.cc,)


def _oracle_fs_pairs(fs: FinalState):
    for g in fs.groups:
        for sign, items in _oracle_seq(g.particles):
            yield g.sign * sign, items


def _oracle_seq(seq: list[ParticleNode]):
    if not seq:
        return [(1, [])]
    head_alts = _oracle_node(seq[0])
    tail_alts = _oracle_seq(seq[1:])
    out = []
    for hs, hitems in head_alts:
        for ts, titems in tail_alts:
            out.append((hs * ts, hitems + titems))
    return out


def expanded_fs_multiset(fs: FinalState) -> Counter:
    """Fingerprint multiset of an already-expanded final state."""
    out = Counter()
    for g in fs.groups:
        out[(g.sign, tuple(sorted(node_fingerprint(n) for n in g.particles)))] += 1
    return out
