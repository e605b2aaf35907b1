"""Monomial/binomial presentations of path-algebra quotients and the
successor combinatorics they induce.

The ideal of a presentation is generated by its explicit zero paths and
binomial differences together with every path of length at least the
declared nilpotency bound.  Membership of a length-two path is read off
the explicit quadratic generators (plus the degenerate bound-two case);
that convention is what makes the successor and predecessor tables
computable without a general ideal-membership test, and input files are
expected to list all vanishing quadratics explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .quiver import Path, Quiver, rotations
from .report import Report


class MultiserialConditionError(ValueError):
    """Raised when an operation needs the at-most-one-successor condition."""


@dataclass(frozen=True, eq=False)
class Presentation:
    """A quotient of a path algebra by an admissible ideal.

    ``zero_paths`` are monomial generators, ``equal_pairs`` binomial
    generators p - q (same endpoints), and ``nilpotency`` the declared
    bound N >= 2 with every path of length >= N in the ideal.
    """

    quiver: Quiver
    zero_paths: tuple[Path, ...]
    equal_pairs: tuple[tuple[Path, Path], ...]
    nilpotency: int

    def __post_init__(self) -> None:
        if self.nilpotency < 2:
            raise ValueError("nilpotency bound must be at least 2")
        for p in self.zero_paths:
            self._check_generator(p)
        for p, q in self.equal_pairs:
            self._check_generator(p)
            self._check_generator(q)
            if p.source != q.source or p.target != q.target:
                raise ValueError(
                    f"binomial generator is not uniform: {p} and {q} "
                    "have different endpoints"
                )
        quadratic = frozenset(p.arrows for p in self.zero_paths if len(p) == 2)
        object.__setattr__(self, "_quadratic", quadratic)

    def _check_generator(self, p: Path) -> None:
        if not self.quiver.contains_path(p):
            raise ValueError(f"generator {p} is not a path of the quiver")
        if len(p) < 2:
            raise ValueError(f"generator {p} has length < 2; the ideal must be admissible")

    def quadratic_in_ideal(self, a: str, b: str) -> bool:
        """Whether the two-arrow path ab lies in the ideal."""
        if self.nilpotency == 2:
            return True
        return (a, b) in self._quadratic

    def linear_relations(self) -> list[list[tuple[int, Path]]]:
        """The generators as coefficient/path lists, for the dimension oracle."""
        rels: list[list[tuple[int, Path]]] = [[(1, p)] for p in self.zero_paths]
        rels.extend([(1, p), (-1, q)] for p, q in self.equal_pairs)
        return rels


@dataclass(eq=False)
class SuccessorTables:
    """Successor (sigma) and predecessor (tau) maps on arrow names.

    ``None`` is the stop marker: no composition with that arrow survives in
    the quotient.  The two maps are mutually inverse wherever defined, and
    a successor is always composable with its arrow.
    """

    quiver: Quiver
    sigma: dict[str, Optional[str]]
    tau: dict[str, Optional[str]]

    def __post_init__(self) -> None:
        names = set(self.quiver.arrows)
        if set(self.sigma) != names or set(self.tau) != names:
            raise ValueError("tables must be defined on exactly the quiver's arrows")
        for a, b in self.sigma.items():
            if b is None:
                continue
            if self.quiver.arrow(a).target != self.quiver.arrow(b).source:
                raise ValueError(f"successor of {a} is not composable: {b}")
            if self.tau.get(b) != a:
                raise ValueError(f"tables are not mutually inverse at {a} -> {b}")
        for b, a in self.tau.items():
            if a is None:
                continue
            if self.quiver.arrow(a).target != self.quiver.arrow(b).source:
                raise ValueError(f"predecessor of {b} is not composable: {a}")
            if self.sigma.get(a) != b:
                raise ValueError(f"tables are not mutually inverse at {a} <- {b}")


@dataclass(frozen=True)
class OrbitData:
    """Iteration statistics of the successor maps at one arrow.

    Exactly one of two shapes occurs: the forward orbit hits the stop
    marker after ``forward_stop`` steps (and the backward orbit after
    ``backward_stop``), or both orbits are cyclic with the same ``period``.
    """

    forward_stop: Optional[int] = None
    backward_stop: Optional[int] = None
    period: Optional[int] = None


def check_multiserial_condition(presentation: Presentation) -> Report:
    """Each arrow must admit at most one composable successor and at most
    one composable predecessor outside the ideal.

    Violations are report content, not faults; every offending arrow is
    listed with its surviving compositions.
    """
    q = presentation.quiver
    report = Report("multiserial-condition")
    if not q.is_connected():
        report.warn(
            "quiver is disconnected; constructions proceed blockwise but the "
            "algebra is decomposable"
        )
    violations = 0
    for arrow in sorted(q.arrows.values(), key=lambda a: a.name):
        successors = [
            b.name
            for b in q.arrows_from(arrow.target)
            if not presentation.quadratic_in_ideal(arrow.name, b.name)
        ]
        if len(successors) > 1:
            violations += 1
            report.add(
                f"unique-successor({arrow.name})",
                False,
                "surviving compositions with " + ", ".join(successors),
            )
        predecessors = [
            c.name
            for c in q.arrows_into(arrow.source)
            if not presentation.quadratic_in_ideal(c.name, arrow.name)
        ]
        if len(predecessors) > 1:
            violations += 1
            report.add(
                f"unique-predecessor({arrow.name})",
                False,
                "surviving compositions with " + ", ".join(predecessors),
            )
    report.add(
        "multiserial-condition",
        violations == 0,
        "" if violations == 0 else f"{violations} arrow(s) violate the condition",
    )
    return report


def derive_successors(presentation: Presentation) -> SuccessorTables:
    """Read the successor and predecessor tables off the quadratic generators.

    Faults when the multiserial condition fails, since the tables would not
    be single-valued.
    """
    condition = check_multiserial_condition(presentation)
    if not condition.passed:
        failed = ", ".join(c.name for c in condition.failures())
        raise MultiserialConditionError(
            f"presentation violates the multiserial condition: {failed}"
        )
    q = presentation.quiver
    sigma: dict[str, Optional[str]] = {}
    tau: dict[str, Optional[str]] = {}
    for arrow in q.arrows.values():
        successors = [
            b.name
            for b in q.arrows_from(arrow.target)
            if not presentation.quadratic_in_ideal(arrow.name, b.name)
        ]
        sigma[arrow.name] = successors[0] if successors else None
        predecessors = [
            c.name
            for c in q.arrows_into(arrow.source)
            if not presentation.quadratic_in_ideal(c.name, arrow.name)
        ]
        tau[arrow.name] = predecessors[0] if predecessors else None
    return SuccessorTables(q, sigma, tau)


def _orbit(table: dict[str, Optional[str]], start: str, limit: int) -> tuple[Optional[int], Optional[int]]:
    """Follow a table from ``start``: (steps to stop, None) or (None, period)."""
    current: Optional[str] = start
    for step in range(1, limit + 1):
        current = table[current]
        if current is None:
            return step, None
        if current == start:
            return None, step
    raise RuntimeError(
        f"orbit of {start!r} neither stops nor returns within {limit} steps; "
        "the tables are corrupt"
    )


def orbit_data(tables: SuccessorTables) -> dict[str, OrbitData]:
    """Iterate both tables at every arrow and classify the orbits.

    The forward orbit stops exactly when the backward one does, and cyclic
    orbits have equal periods under both maps; a violation means the tables
    were corrupted and is raised, not reported.
    """
    limit = len(tables.quiver.arrows) + 1
    out: dict[str, OrbitData] = {}
    for name in sorted(tables.quiver.arrows):
        forward_stop, sigma_period = _orbit(tables.sigma, name, limit)
        backward_stop, tau_period = _orbit(tables.tau, name, limit)
        if (forward_stop is None) != (backward_stop is None):
            raise RuntimeError(f"orbit of {name!r} stops in one direction only")
        if sigma_period != tau_period:
            raise RuntimeError(
                f"orbit of {name!r} has mismatched periods "
                f"{sigma_period} and {tau_period}"
            )
        out[name] = OrbitData(
            forward_stop=forward_stop,
            backward_stop=backward_stop,
            period=sigma_period,
        )
    return out


def maximal_paths(tables: SuccessorTables) -> tuple[Path, ...]:
    """All paths that cannot be extended in either direction.

    Such a path starts at an arrow with no predecessor and follows the
    successor map until it stops; every arrow with a stopping orbit occurs
    in exactly one of them.  Returned sorted by arrow sequence.
    """
    q = tables.quiver
    out = []
    for name in sorted(q.arrows):
        if tables.tau[name] is not None:
            continue
        chain = [name]
        current = tables.sigma[name]
        while current is not None:
            chain.append(current)
            current = tables.sigma[current]
        out.append(q.path(chain))
    return tuple(sorted(out, key=lambda p: p.arrows))


def simple_cycles(tables: SuccessorTables) -> tuple[Path, ...]:
    """The cycles traced by the successor map, one per on-cycle arrow.

    The family is closed under rotation: the cycle based at an arrow's
    successor is the rotation of the cycle based at the arrow itself.
    """
    q = tables.quiver
    data = orbit_data(tables)
    out = []
    for name in sorted(q.arrows):
        period = data[name].period
        if period is None:
            continue
        chain = [name]
        current = tables.sigma[name]
        while current != name:
            chain.append(current)
            current = tables.sigma[current]
        out.append(q.path(chain))
    return tuple(sorted(out, key=lambda p: p.arrows))


def check_orbit_structure(tables: SuccessorTables) -> Report:
    """Verify the structural facts tying orbits, maximal paths and cycles.

    All seven checks hold for any well-formed tables; a failure indicates
    an engine bug rather than bad input.
    """
    q = tables.quiver
    data = orbit_data(tables)
    maxima = maximal_paths(tables)
    cycles = simple_cycles(tables)
    report = Report("orbit-structure")

    on_maximal: dict[str, list[Path]] = {a: [] for a in q.arrows}
    for m in maxima:
        for a in m.arrows:
            on_maximal[a].append(m)
    cycle_at: dict[str, Path] = {c.arrows[0]: c for c in cycles}
    on_cycle: dict[str, list[Path]] = {a: [] for a in q.arrows}
    for c in cycles:
        for a in c.arrows:
            on_cycle[a].append(c)

    bad = [
        a
        for a in sorted(q.arrows)
        if (len(on_maximal[a]) > 0) == (len(on_cycle[a]) > 0)
    ]
    report.add(
        "arrow-partition",
        not bad,
        "" if not bad else "arrows on both or neither side: " + ", ".join(bad),
    )

    multi = [a for a in sorted(q.arrows) if len(on_maximal[a]) > 1]
    report.add(
        "unique-maximal-path",
        not multi,
        "" if not multi else "arrows on several maximal paths: " + ", ".join(multi),
    )

    incoherent = []
    for c in cycles:
        rotation_set = {r.arrows for r in rotations(c)}
        for a in c.arrows:
            based = cycle_at.get(a)
            if based is None or based.arrows not in rotation_set:
                incoherent.append(f"{a} on {c}")
    report.add(
        "cycle-rotation-coherence",
        not incoherent,
        "; ".join(incoherent),
    )

    bad_len = [
        f"{c}: length {len(c)} != period {data[c.arrows[0]].period}"
        for c in cycles
        if len(c) != data[c.arrows[0]].period
    ]
    report.add("cycle-length-is-period", not bad_len, "; ".join(bad_len))

    repeated = [str(m) for m in maxima if len(set(m.arrows)) != len(m.arrows)]
    report.add("maximal-path-no-repeated-arrows", not repeated, "; ".join(repeated))

    mismatched = []
    for m in maxima:
        for a in m.arrows:
            if _maximal_path_through(tables, a).arrows != m.arrows:
                mismatched.append(f"{a} does not recover {m}")
    report.add("maximal-path-determined-by-arrow", not mismatched, "; ".join(mismatched))

    bad_formula = []
    for m in maxima:
        for a in m.arrows:
            d = data[a]
            if d.forward_stop is None or len(m) != d.forward_stop + d.backward_stop - 1:
                bad_formula.append(f"{m} at {a}")
    report.add("maximal-path-length-formula", not bad_formula, "; ".join(bad_formula))

    return report


def _maximal_path_through(tables: SuccessorTables, arrow: str) -> Path:
    """Rebuild the maximal path containing ``arrow`` from both orbit halves."""
    backward = []
    current = tables.tau[arrow]
    while current is not None:
        backward.append(current)
        current = tables.tau[current]
    chain = list(reversed(backward)) + [arrow]
    current = tables.sigma[arrow]
    while current is not None:
        chain.append(current)
        current = tables.sigma[current]
    return tables.quiver.path(chain)


def minimal_monomial_bound(
    presentation: Presentation, budget: int = 200_000
) -> Optional[int]:
    """Smallest valid nilpotency bound for a purely monomial presentation.

    Computed as one more than the longest path avoiding every zero path as
    a subword, capped below at 2.  Returns None when the presentation has
    binomial generators (membership is no longer a subword test) or when
    the search exceeds ``budget`` alive paths.
    """
    if presentation.equal_pairs:
        return None
    generators = [p.arrows for p in presentation.zero_paths]
    q = presentation.quiver
    longest = 0
    alive: list[Path] = [q.trivial_path(v) for v in q.vertices]
    visited = len(alive)
    for length in range(1, presentation.nilpotency):
        grown = []
        for p in alive:
            for arrow in q.arrows_from(p.target):
                candidate = Path(p.arrows + (arrow.name,), p.vertices + (arrow.target,))
                word = candidate.arrows
                if any(
                    len(g) <= len(word) and word[len(word) - len(g) :] == g
                    for g in generators
                ):
                    continue
                grown.append(candidate)
        visited += len(grown)
        if visited > budget:
            return None
        if not grown:
            break
        longest = length
        alive = grown
    return max(longest + 1, 2)
