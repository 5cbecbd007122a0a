"""Conservation-law checking over canonical reactions.

Each law selects one quantum-number component and a relation: equality, or
an inequality between the initial-state and final-state sums. Every
top-level alternative group must satisfy every law independently, and decay
descriptions are checked recursively (parent particle versus each decay
channel). A particle missing from the property table makes the whole
reaction UNKNOWN.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .model import ParticleNode, Reaction
from .tables import COMPONENT_NAMES, PropertyTable

# Law name -> component index into the quantum-number vector.
LAW_COMPONENTS = {
    "charge": 0,
    "baryon": 1,
    "S": 2,
    "C": 3,
    "B": 4,
    "T": 5,
    "Le": 6,
    "Lmu": 7,
    "Ltau": 8,
}

RELATION_EQ = 0  # initial == final
RELATION_LE = -1  # initial <= final
RELATION_GE = 1  # initial >= final


@dataclass(frozen=True)
class Law:
    name: str
    component: int
    relation: int = RELATION_EQ


def default_laws() -> list[Law]:
    """All nine components as equality laws."""
    return [Law(name, comp) for name, comp in LAW_COMPONENTS.items()]


class Status(enum.Enum):
    ACCEPT = "ACCEPT"
    REJECT = "REJECT"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Violation:
    law: str
    location: str
    initial_sum: int
    final_sum: int


@dataclass
class Verdict:
    status: Status
    violations: list[Violation] = field(default_factory=list)
    unknown_names: list[str] = field(default_factory=list)


class UnknownParticle(LookupError):
    def __init__(self, name: str):
        super().__init__(f"particle {name!r} not in property table")
        self.name = name


def state_sum(seq: list[ParticleNode], component: int, table: PropertyTable) -> int:
    """Sum of one component over a particle sequence, weighted by counts.

    Decay descriptions do not contribute; the decaying particle itself
    carries the quantum numbers. Raises UnknownParticle on the first name
    missing from the table.
    """
    total = 0
    for n in seq:
        vec = table.lookup(n.name)
        if vec is None:
            raise UnknownParticle(n.name)
        total += n.count * vec.component(component)
    return total


def _holds(initial: int, final: int, relation: int) -> bool:
    if relation == RELATION_EQ:
        return initial == final
    if relation == RELATION_LE:
        return initial <= final
    return initial >= final


def test_reaction(r: Reaction, law: Law, table: PropertyTable) -> Verdict:
    """Check one law against a reaction, including nested decays."""
    violations: list[Violation] = []
    try:
        initial = state_sum(r.initial, law.component, table)
        for gi, g in enumerate(r.final.groups):
            final = state_sum(g.particles, law.component, table)
            if not _holds(initial, final, law.relation):
                violations.append(Violation(law.name, f"final[{gi}]", initial, final))
            _check_decays(g.particles, f"final[{gi}]", law, table, violations)
    except UnknownParticle as exc:
        return Verdict(Status.UNKNOWN, [], [exc.name])
    if violations:
        return Verdict(Status.REJECT, violations)
    return Verdict(Status.ACCEPT)


def _check_decays(
    seq: list[ParticleNode],
    path: str,
    law: Law,
    table: PropertyTable,
    violations: list[Violation],
) -> None:
    for n in seq:
        if n.decay is None:
            continue
        vec = table.lookup(n.name)
        if vec is None:
            raise UnknownParticle(n.name)
        parent = vec.component(law.component)
        for di, dg in enumerate(n.decay.groups):
            loc = f"{path}.{n.name}.decay[{di}]"
            products = state_sum(dg.particles, law.component, table)
            if not _holds(parent, products, law.relation):
                violations.append(Violation(law.name, loc, parent, products))
            _check_decays(dg.particles, loc, law, table, violations)


def check_all_laws(
    r: Reaction, laws: list[Law], table: PropertyTable
) -> Verdict:
    """Aggregate verdict over a law set; UNKNOWN dominates REJECT."""
    violations: list[Violation] = []
    for law in laws:
        verdict = test_reaction(r, law, table)
        if verdict.status is Status.UNKNOWN:
            return verdict
        violations.extend(verdict.violations)
    if violations:
        return Verdict(Status.REJECT, violations)
    return Verdict(Status.ACCEPT)
