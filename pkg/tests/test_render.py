import random
from collections import defaultdict

from helpers import random_reaction

from ppdl import (
    FinalState,
    GroupNode,
    OrderingMode,
    ParticleNode,
    Reaction,
    canonicalize,
    expand_counts,
    load_default_tables,
    parse_reaction,
    render_reaction,
    structural_equal,
    tokenize,
)

DICT, _ = load_default_tables()

PAPER_STATEMENT = (
    "E+ E- --> W- < QUARK QUARKBAR > W+ < TAU+ NUTAU + MU+ NUMU + E+ NUE > ;"
)


def test_render_minimal():
    assert render_reaction(parse_reaction("E- --> E- ;")) == "E- --> E- ;"


def test_render_golden_canonical_form():
    canonical = canonicalize(
        parse_reaction(PAPER_STATEMENT), OrderingMode.TRUE_LEX, DICT
    )
    assert render_reaction(canonical) == (
        "e+ e- --> W+ < e+ nu(e) + mu+ nu(mu) + nu(tau) tau+ > W- < QUARK QUARKBAR > ;"
    )


def test_render_normalizes_spacing():
    r = parse_reaction("A   B -->   C\t< D  E >  ;")
    assert render_reaction(r) == "A B --> C < D E > ;"


def test_render_expands_counts():
    r = Reaction(
        [ParticleNode("p")], FinalState([GroupNode(1, [ParticleNode("gamma", 3)])])
    )
    assert render_reaction(r) == "p --> gamma gamma gamma ;"


def test_render_signs_compo_and_cc():
    for text in [
        "A --> B + C - D ;",
        "A --> ( B + C ) D ;",
        "A --> B + CC ;",
        "A --> ( B - C ) D + CC ;",
    ]:
        assert render_reaction(parse_reaction(text)) == text


def test_render_reparses_to_same_tree():
    rng = random.Random(43)
    for _ in range(100):
        r = random_reaction(rng, depth=2, allow_compo=True)
        assert structural_equal(parse_reaction(render_reaction(r)), r)


def test_round_trip_of_canonical_reactions():
    rng = random.Random(47)
    for _ in range(200):
        canonical = canonicalize(
            random_reaction(rng, depth=2, allow_compo=True),
            rng.choice(list(OrderingMode)),
            DICT,
        )
        rendered = render_reaction(canonical)
        tokenize(rendered)  # must lex cleanly
        reparsed = parse_reaction(rendered)
        assert structural_equal(reparsed, expand_counts(canonical))


def test_render_injective_on_canonical_corpus():
    rng = random.Random(53)
    by_render = defaultdict(list)
    for _ in range(300):
        canonical = canonicalize(
            random_reaction(rng, depth=2, allow_compo=True), OrderingMode.DICT, DICT
        )
        by_render[render_reaction(canonical)].append(canonical)
    for rendered, trees in by_render.items():
        first = trees[0]
        for other in trees[1:]:
            assert structural_equal(first, other), rendered
