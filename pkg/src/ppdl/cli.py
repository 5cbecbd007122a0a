"""Batch command-line front end.

Reads statements from input files (";" terminates a statement, a trailing
"\\" continues a line), runs each through parse / canonicalize / check, and
routes results into six files in the output directory:

    rp-accept.txt    accepted statements, as written
    rp-accept-s.txt  their canonical renderings
    rp-reject.txt    rejected statements, as written
    rp-reject-s.txt  their canonical renderings
    rp-unknown.txt   statements that failed to parse or name unknown particles
    rp-log.txt       one disposition line per statement (STATUS\\treason\\ttext)
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .canonical import OrderingMode, canonicalize
from .conservation import (
    LAW_COMPONENTS,
    RELATION_EQ,
    RELATION_GE,
    RELATION_LE,
    Law,
    Status,
    check_all_laws,
)
from .lexer import LexError
from .parser import ParseError, parse_reaction
from .render import render_reaction
from .tables import (
    TableError,
    load_dictionary,
    load_property_table,
    open_bundled,
)

OUTPUT_FILES = (
    "rp-accept.txt",
    "rp-accept-s.txt",
    "rp-reject.txt",
    "rp-reject-s.txt",
    "rp-unknown.txt",
    "rp-log.txt",
)

_RELATIONS = {"eq": RELATION_EQ, "le": RELATION_LE, "ge": RELATION_GE}


@dataclass(frozen=True)
class Statement:
    text: str
    span: tuple[int, int]  # first and last source line (1-based)
    incomplete: bool = False


@dataclass
class RunConfig:
    inputs: list[Path]
    dictionary_path: Path | None = None
    properties_path: Path | None = None
    leptons_path: Path | None = None
    mode: OrderingMode = OrderingMode.DICT
    laws: list[Law] = field(default_factory=list)
    outdir: Path = Path(".")


@dataclass
class RunSummary:
    accepted: int = 0
    rejected: int = 0
    unknown: int = 0
    parse_failed: int = 0
    law_violations: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return self.accepted + self.rejected + self.unknown + self.parse_failed


def assemble_statements(stream: Iterable[str]) -> list[Statement]:
    """Fold continuation lines and split logical lines at ";" terminators.

    A line whose last non-whitespace character is "\\" is joined with the
    next line, the backslash becoming a single space. Text left on a logical
    line after its last ";" is reported as an incomplete statement.
    """
    statements: list[Statement] = []
    buf = ""
    start: int | None = None
    lineno = 0
    for lineno, raw in enumerate(stream, 1):
        line = raw.rstrip("\r\n")
        if start is None:
            start = lineno
        stripped = line.rstrip()
        if stripped.endswith("\\"):
            buf += stripped[:-1] + " "
            continue
        buf += line
        statements.extend(_split_logical_line(buf, (start, lineno)))
        buf = ""
        start = None
    if start is not None:
        statements.extend(_split_logical_line(buf, (start, lineno)))
    return statements


def _split_logical_line(text: str, span: tuple[int, int]) -> list[Statement]:
    out: list[Statement] = []
    pos = 0
    while True:
        i = text.find(";", pos)
        if i < 0:
            rest = text[pos:].strip()
            if rest:
                out.append(Statement(rest, span, incomplete=True))
            return out
        out.append(Statement(text[pos : i + 1].strip(), span))
        pos = i + 1


def build_laws(
    names: list[str] | None = None, relations: dict[str, int] | None = None
) -> list[Law]:
    """Law objects for the given law names (default: all, as equalities)."""
    names = list(LAW_COMPONENTS) if names is None else names
    relations = relations or {}
    laws = []
    for name in names:
        if name not in LAW_COMPONENTS:
            raise ValueError(f"unknown law {name!r}")
        laws.append(Law(name, LAW_COMPONENTS[name], relations.get(name, RELATION_EQ)))
    return laws


def _open(path: Path | None, bundled_name: str):
    if path is not None:
        return open(path, encoding="utf-8")
    return open_bundled(bundled_name)


def _load_tables(cfg: RunConfig):
    with _open(cfg.dictionary_path, "dict-syn.txt") as f:
        dictionary = load_dictionary(f)
    with _open(cfg.properties_path, "particles.txt") as p, _open(
        cfg.leptons_path, "leptons.txt"
    ) as l:
        table = load_property_table(p, l, dictionary)
    return dictionary, table


def process_file(cfg: RunConfig) -> RunSummary:
    """Run the full pipeline over all configured inputs."""
    dictionary, table = _load_tables(cfg)
    laws = cfg.laws or build_laws()
    summary = RunSummary()
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    files = {name: open(cfg.outdir / name, "w", encoding="utf-8") for name in OUTPUT_FILES}
    try:
        for path in cfg.inputs:
            with open(path, encoding="utf-8") as stream:
                for stmt in assemble_statements(stream):
                    _process_statement(stmt, dictionary, table, laws, cfg.mode, files, summary)
    finally:
        for f in files.values():
            f.close()
    return summary


def _process_statement(stmt, dictionary, table, laws, mode, files, summary) -> None:
    log = files["rp-log.txt"]
    if stmt.incomplete:
        summary.parse_failed += 1
        files["rp-unknown.txt"].write(stmt.text + "\n")
        log.write(f"ERROR\tincomplete statement (missing ';')\t{stmt.text}\n")
        return
    try:
        reaction = parse_reaction(stmt.text)
    except (ParseError, LexError) as exc:
        summary.parse_failed += 1
        files["rp-unknown.txt"].write(stmt.text + "\n")
        log.write(f"ERROR\t{exc}\t{stmt.text}\n")
        return
    canonical = canonicalize(reaction, mode, dictionary)
    rendered = render_reaction(canonical)
    verdict = check_all_laws(canonical, laws, table)
    if verdict.status is Status.ACCEPT:
        summary.accepted += 1
        files["rp-accept.txt"].write(stmt.text + "\n")
        files["rp-accept-s.txt"].write(rendered + "\n")
        log.write(f"ACCEPT\tcanonical: {rendered}\t{stmt.text}\n")
    elif verdict.status is Status.REJECT:
        summary.rejected += 1
        files["rp-reject.txt"].write(stmt.text + "\n")
        files["rp-reject-s.txt"].write(rendered + "\n")
        details = "; ".join(
            f"{v.law} at {v.location}: {v.initial_sum} vs {v.final_sum}"
            for v in verdict.violations
        )
        summary.law_violations.update(v.law for v in verdict.violations)
        log.write(f"REJECT\t{details}\t{stmt.text}\n")
    else:
        summary.unknown += 1
        files["rp-unknown.txt"].write(stmt.text + "\n")
        names = ", ".join(verdict.unknown_names)
        log.write(f"UNKNOWN\tunknown particle {names}; canonical: {rendered}\t{stmt.text}\n")


def _parse_args(argv):
    ap = argparse.ArgumentParser(
        prog="ppdl",
        description="Parse, canonicalize and conservation-check reaction statements.",
    )
    ap.add_argument("inputs", nargs="+", type=Path, help="input statement files")
    ap.add_argument("--dict", dest="dictionary", type=Path, help="synonym dictionary file")
    ap.add_argument("--props", type=Path, help="particle property file")
    ap.add_argument("--leptons", type=Path, help="lepton number file")
    ap.add_argument(
        "--order",
        choices=["lex", "dict"],
        default="dict",
        help="name ordering mode for canonicalization (default: dict)",
    )
    ap.add_argument(
        "--laws",
        help="comma-separated law subset (default: %s)" % ",".join(LAW_COMPONENTS),
    )
    ap.add_argument(
        "--relation",
        action="append",
        default=[],
        metavar="LAW=eq|le|ge",
        help="relation override for one law; may repeat",
    )
    ap.add_argument("--outdir", type=Path, default=Path("."), help="output directory")
    ap.add_argument(
        "--strict",
        action="store_true",
        help="exit 1 when any statement is rejected or unknown",
    )
    return ap.parse_args(argv)


def main(argv=None) -> int:
    args = _parse_args(argv)
    try:
        relations = {}
        for item in args.relation:
            law, _, rel = item.partition("=")
            if law not in LAW_COMPONENTS or rel not in _RELATIONS:
                raise ValueError(f"bad --relation {item!r}")
            relations[law] = _RELATIONS[rel]
        names = args.laws.split(",") if args.laws else None
        cfg = RunConfig(
            inputs=args.inputs,
            dictionary_path=args.dictionary,
            properties_path=args.props,
            leptons_path=args.leptons,
            mode=OrderingMode.TRUE_LEX if args.order == "lex" else OrderingMode.DICT,
            laws=build_laws(names, relations),
            outdir=args.outdir,
        )
        summary = process_file(cfg)
    except (OSError, TableError, ValueError) as exc:
        print(f"ppdl: error: {exc}", file=sys.stderr)
        return 2
    print(
        f"processed {summary.total}: {summary.accepted} accepted, "
        f"{summary.rejected} rejected, {summary.unknown} unknown, "
        f"{summary.parse_failed} unparsable"
    )
    if args.strict and (summary.rejected or summary.unknown or summary.parse_failed):
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
