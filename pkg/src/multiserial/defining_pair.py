"""Rotation-closed systems of weighted simple cycles and the relation
sets they generate.

A cycle system pairs a set of simple cycles, closed under cyclic rotation,
with a multiplicity that is constant on each rotation class.  Subject to
the axioms checked by :func:`validate`, such a system presents a
finite-dimensional algebra through three families of relations: full cycle
powers based at a common vertex are identified, a full power followed by
its first arrow vanishes, and every two-arrow path off the cycles
vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .quiver import (
    Path,
    Quiver,
    canonical_rotation,
    compose,
    cycle_power,
    is_simple_cycle,
    lies_in,
    rotations,
)
from .report import Report


class DefiningPair:
    """A rotation-closed set of simple cycles with per-class multiplicities.

    ``cycles`` holds every rotation explicitly; ``mult`` maps each cycle's
    arrow tuple to its multiplicity.  Construction checks only structural
    sanity; the axioms live in :func:`validate` so that invalid systems can
    be represented and reported on.
    """

    def __init__(
        self,
        quiver: Quiver,
        cycles: Iterable[Path],
        mult: Mapping[tuple[str, ...], int],
    ) -> None:
        self.quiver = quiver
        unique: dict[tuple[str, ...], Path] = {}
        for c in cycles:
            if not is_simple_cycle(c):
                raise ValueError(f"not a simple cycle: {c}")
            if not quiver.contains_path(c):
                raise ValueError(f"cycle {c} is not a path of the quiver")
            unique[c.arrows] = c
        self.cycles: tuple[Path, ...] = tuple(
            unique[k] for k in sorted(unique)
        )
        self._mult: dict[tuple[str, ...], int] = {}
        for key, value in mult.items():
            if key not in unique:
                raise ValueError(f"multiplicity given for unknown cycle {' '.join(key)}")
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"multiplicity of {' '.join(key)} must be a positive integer")
            self._mult[key] = value
        missing = [k for k in unique if k not in self._mult]
        if missing:
            raise ValueError(f"cycle {' '.join(missing[0])} has no multiplicity")

    def mu(self, cycle: Path) -> int:
        return self._mult[cycle.arrows]

    def cycles_at(self, vertex: str) -> tuple[Path, ...]:
        return tuple(c for c in self.cycles if c.source == vertex)

    def rotation_class_representatives(self) -> list[tuple[Path, int]]:
        """One canonical (lexicographically least) cycle per rotation class."""
        reps: dict[tuple[str, ...], tuple[Path, int]] = {}
        for c in self.cycles:
            canon = canonical_rotation(c)
            reps.setdefault(canon.arrows, (canon, self.mu(c)))
        return [reps[k] for k in sorted(reps)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DefiningPair)
            and self.quiver == other.quiver
            and self.cycles == other.cycles
            and self._mult == other._mult
        )

    def __repr__(self) -> str:
        classes = len(self.rotation_class_representatives())
        return f"DefiningPair({classes} rotation classes, {len(self.cycles)} cycles)"


def close_under_rotation(
    quiver: Quiver, representatives: Iterable[tuple[Path, int]]
) -> DefiningPair:
    """Build a cycle system from one representative per rotation class.

    Rotation closure and constancy of the multiplicity on each class hold
    by construction.  Two representatives of the same class with different
    multiplicities are a fault.
    """
    by_class: dict[tuple[str, ...], tuple[Path, int]] = {}
    for cycle, mult in representatives:
        canon = canonical_rotation(cycle)
        known = by_class.get(canon.arrows)
        if known is not None and known[1] != mult:
            raise ValueError(
                f"conflicting multiplicities {known[1]} and {mult} "
                f"for rotations of {canon}"
            )
        by_class[canon.arrows] = (canon, mult)
    cycles: list[Path] = []
    mult_map: dict[tuple[str, ...], int] = {}
    for canon, mult in by_class.values():
        for rotation in rotations(canon):
            cycles.append(rotation)
            mult_map[rotation.arrows] = mult
    return DefiningPair(quiver, cycles, mult_map)


def validate(pair: DefiningPair) -> Report:
    """Check the five axioms of a cycle system, with witnesses on failure."""
    report = Report("cycle-system-axioms")

    bad_loops = [
        str(c) for c in pair.cycles if len(c) == 1 and pair.mu(c) == 1
    ]
    report.add(
        "loop-multiplicity",
        not bad_loops,
        "" if not bad_loops else "loops need multiplicity > 1: " + ", ".join(bad_loops),
    )

    present = {c.arrows for c in pair.cycles}
    missing_rotations = []
    for c in pair.cycles:
        for r in rotations(c):
            if r.arrows not in present:
                missing_rotations.append(f"{r} (rotation of {c})")
    report.add("rotation-closure", not missing_rotations, "; ".join(missing_rotations))

    uneven = []
    for c in pair.cycles:
        for r in rotations(c):
            if r.arrows in present and pair.mu(r) != pair.mu(c):
                uneven.append(f"{c} has {pair.mu(c)}, rotation {r} has {pair.mu(r)}")
    report.add("class-multiplicity", not uneven, "; ".join(uneven))

    covered = {a for c in pair.cycles for a in c.arrows}
    uncovered = sorted(set(pair.quiver.arrows) - covered)
    report.add(
        "arrow-coverage",
        not uncovered,
        "" if not uncovered else "arrows on no cycle: " + ", ".join(uncovered),
    )

    conflicts = []
    class_of: dict[str, frozenset[tuple[str, ...]]] = {}
    for c in pair.cycles:
        rotation_set = frozenset(r.arrows for r in rotations(c))
        for a in c.arrows:
            seen = class_of.setdefault(a, rotation_set)
            if seen != rotation_set:
                conflicts.append(a)
    conflicts = sorted(set(conflicts))
    report.add(
        "unique-class-per-arrow",
        not conflicts,
        "" if not conflicts else "arrows on two distinct classes: " + ", ".join(conflicts),
    )

    return report


@dataclass(frozen=True)
class RelationSet:
    """The generated relations: binomial pairs of full cycle powers at a
    shared vertex, full powers extended by their first arrow, and the
    two-arrow paths lying on no cycle."""

    type1: tuple[tuple[Path, Path], ...]
    type2: tuple[Path, ...]
    type3: tuple[Path, ...]

    def counts(self) -> tuple[int, int, int]:
        return len(self.type1), len(self.type2), len(self.type3)

    def linear_relations(self) -> list[list[tuple[int, Path]]]:
        rels: list[list[tuple[int, Path]]] = []
        rels.extend([(1, p), (-1, q)] for p, q in self.type1)
        rels.extend([(1, p)] for p in self.type2)
        rels.extend([(1, p)] for p in self.type3)
        return rels


def generate_relations(pair: DefiningPair) -> RelationSet:
    """Emit the full (possibly redundant) generating set of the ideal.

    Requires a system passing :func:`validate`.  Two-arrow paths count as
    on-cycle when they travel a cycle cyclically, so the square of a loop
    with multiplicity above one is not a relation.
    """
    verdict = validate(pair)
    if not verdict.passed:
        failed = ", ".join(c.name for c in verdict.failures())
        raise ValueError(f"cycle system fails validation: {failed}")

    type1 = []
    for v in pair.quiver.vertices:
        at_v = pair.cycles_at(v)
        for i in range(len(at_v)):
            for j in range(i + 1, len(at_v)):
                type1.append(
                    (
                        cycle_power(at_v[i], pair.mu(at_v[i])),
                        cycle_power(at_v[j], pair.mu(at_v[j])),
                    )
                )

    type2 = []
    for c in pair.cycles:
        full = cycle_power(c, pair.mu(c))
        first = pair.quiver.arrow(c.arrows[0])
        extended = compose(full, Path((first.name,), (first.source, first.target)))
        assert extended is not None
        type2.append(extended)

    type3 = [
        p
        for p in pair.quiver.length_two_paths()
        if not any(lies_in(p, c) for c in pair.cycles)
    ]

    return RelationSet(tuple(type1), tuple(type2), tuple(type3))


def nilpotency_bound(pair: DefiningPair) -> int:
    """One more than the longest full cycle power; every path at least this
    long vanishes in the presented algebra."""
    longest = max((pair.mu(c) * len(c) for c in pair.cycles), default=1)
    return longest + 1
