"""Reaction statement parsing, canonicalization and conservation checking."""

from .canonical import (
    OrderingMode,
    canonicalize,
    compare_names,
    expand_counts,
    expand_groups,
    merge_duplicates,
    resolve_synonyms,
    sort_reaction,
)
from .conservation import (
    Law,
    Status,
    Verdict,
    check_all_laws,
    default_laws,
    state_sum,
    test_reaction,
)
from .lexer import LexError, Token, TokenKind, tokenize
from .model import (
    COMPO,
    FinalState,
    GroupNode,
    ParticleNode,
    Reaction,
    deep_copy,
    structural_equal,
)
from .parser import ParseError, parse_reaction
from .render import render_reaction
from .tables import (
    Dictionary,
    PropertyTable,
    QuantumVector,
    load_default_tables,
    load_dictionary,
    load_property_table,
)

__version__ = "0.1.0"

__all__ = [
    "COMPO",
    "Dictionary",
    "FinalState",
    "GroupNode",
    "Law",
    "LexError",
    "OrderingMode",
    "ParseError",
    "ParticleNode",
    "PropertyTable",
    "QuantumVector",
    "Reaction",
    "Status",
    "Token",
    "TokenKind",
    "Verdict",
    "canonicalize",
    "check_all_laws",
    "compare_names",
    "deep_copy",
    "default_laws",
    "expand_counts",
    "expand_groups",
    "load_default_tables",
    "load_dictionary",
    "load_property_table",
    "merge_duplicates",
    "parse_reaction",
    "render_reaction",
    "resolve_synonyms",
    "sort_reaction",
    "state_sum",
    "structural_equal",
    "test_reaction",
    "tokenize",
]
