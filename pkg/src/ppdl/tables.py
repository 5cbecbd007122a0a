"""Synonym dictionary and particle-property tables.

File formats (whitespace-separated columns, `#` starts a comment line):

    dict-syn.txt    one synonym group per line; first token is the key name,
                    line order defines the dictionary sort rank
    particles.txt   name q3 b3 S C B T   (charge and baryon number in thirds)
    leptons.txt     name Le Lmu Ltau
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from importlib import resources
from typing import Iterable, TextIO

log = logging.getLogger(__name__)


class TableError(ValueError):
    pass


class DuplicateSynonym(TableError):
    def __init__(self, name: str, line: int):
        super().__init__(f"synonym {name!r} already defined (line {line})")
        self.name = name
        self.line = line


class EmptyDictionary(TableError):
    pass


class MalformedRow(TableError):
    def __init__(self, line: int, text: str):
        super().__init__(f"malformed row at line {line}: {text!r}")
        self.line = line


class DuplicateRow(TableError):
    def __init__(self, name: str):
        super().__init__(f"duplicate property row for {name!r}")
        self.name = name


@dataclass
class Dictionary:
    """Ordered synonym groups; any synonym resolves to its group's key name."""

    entries: list[list[str]]
    index: dict[str, tuple[int, str]]  # synonym -> (rank, key name)

    def key_for(self, name: str) -> str:
        """Key name for a synonym; names not in the dictionary pass through."""
        entry = self.index.get(name)
        return entry[1] if entry is not None else name

    def rank_of(self, name: str) -> int | None:
        entry = self.index.get(name)
        return entry[0] if entry is not None else None

    def __contains__(self, name: str) -> bool:
        return name in self.index


# Component order used throughout: charge and baryon number in thirds,
# then S, C, B, T, then the three lepton numbers.
COMPONENT_NAMES = ("q3", "b3", "S", "C", "B", "T", "Le", "Lmu", "Ltau")


@dataclass(frozen=True)
class QuantumVector:
    q3: int = 0
    b3: int = 0
    S: int = 0
    C: int = 0
    B: int = 0
    T: int = 0
    Le: int = 0
    Lmu: int = 0
    Ltau: int = 0

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, n) for n in COMPONENT_NAMES)

    def component(self, index: int) -> int:
        return getattr(self, COMPONENT_NAMES[index])

    def negated(self) -> "QuantumVector":
        return QuantumVector(*(-v for v in self.as_tuple()))


@dataclass
class PropertyTable:
    rows: dict[str, QuantumVector]

    def lookup(self, name: str) -> QuantumVector | None:
        return self.rows.get(name)


def _data_lines(source: Iterable[str]) -> Iterable[tuple[int, list[str]]]:
    for lineno, raw in enumerate(source, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def load_dictionary(source: Iterable[str]) -> Dictionary:
    """Load synonym groups from a text stream (anything iterable by line)."""
    entries: list[list[str]] = []
    index: dict[str, tuple[int, str]] = {}
    for lineno, names in _data_lines(source):
        rank = len(entries)
        key = names[0]
        for name in names:
            if name in index:
                raise DuplicateSynonym(name, lineno)
            index[name] = (rank, key)
        entries.append(names)
    if not entries:
        raise EmptyDictionary("dictionary has no entries")
    return Dictionary(entries, index)


def _parse_int_row(lineno: int, fields: list[str], arity: int) -> tuple[str, list[int]]:
    if len(fields) != arity:
        raise MalformedRow(lineno, " ".join(fields))
    try:
        values = [int(f) for f in fields[1:]]
    except ValueError:
        raise MalformedRow(lineno, " ".join(fields)) from None
    return fields[0], values


def load_property_table(
    props: Iterable[str], leptons: Iterable[str], dictionary: Dictionary
) -> PropertyTable:
    """Merge the hadronic-property and lepton-number files into one table.

    Names in either file are resolved to key names through the dictionary
    first. A name appearing only in the lepton file gets zero hadronic
    numbers; a name appearing only in the property file gets zero lepton
    numbers.
    """
    rows: dict[str, QuantumVector] = {}
    for lineno, fields in _data_lines(props):
        name, values = _parse_int_row(lineno, fields, 7)
        key = dictionary.key_for(name)
        if key in rows:
            raise DuplicateRow(key)
        if key not in dictionary:
            log.warning("property row for %r is not in the dictionary", key)
        rows[key] = QuantumVector(*values)
    seen_leptons: set[str] = set()
    for lineno, fields in _data_lines(leptons):
        name, values = _parse_int_row(lineno, fields, 4)
        key = dictionary.key_for(name)
        if key in seen_leptons:
            raise DuplicateRow(key)
        seen_leptons.add(key)
        base = rows.get(key, QuantumVector())
        rows[key] = replace(base, Le=values[0], Lmu=values[1], Ltau=values[2])
    return PropertyTable(rows)


def open_bundled(name: str) -> TextIO:
    """Open one of the data files shipped with the package."""
    return (resources.files("ppdl") / "data" / name).open("r", encoding="utf-8")


def load_default_tables() -> tuple[Dictionary, PropertyTable]:
    """Load the dictionary and property table shipped with the package."""
    with open_bundled("dict-syn.txt") as f:
        dictionary = load_dictionary(f)
    with open_bundled("particles.txt") as p, open_bundled("leptons.txt") as l:
        table = load_property_table(p, l, dictionary)
    return dictionary, table
