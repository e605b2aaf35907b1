"""Quivers, paths, and simple cycles.

Arrows are identified by name, so parallel arrows and loops are allowed.
Paths record their full vertex itinerary alongside the arrow names, which
makes them self-contained immutable values: rotation, composition and
cyclic-subword tests never have to consult the quiver again.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str

    def __str__(self) -> str:
        return f"{self.name}: {self.source} -> {self.target}"


@dataclass(frozen=True)
class Path:
    """A path in a quiver.

    ``vertices`` has exactly one more entry than ``arrows``; a trivial path
    anchored at a vertex v is ``Path((), (v,))``.
    """

    arrows: tuple[str, ...]
    vertices: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.arrows) + 1:
            raise ValueError("a path visits exactly len(arrows) + 1 vertices")

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def target(self) -> str:
        return self.vertices[-1]

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e({self.source})"
        return " ".join(self.arrows)


class Quiver:
    """A finite directed multigraph with uniquely named vertices and arrows."""

    def __init__(
        self,
        vertices: Iterable[str],
        arrows: Iterable[tuple[str, str, str]] = (),
    ) -> None:
        self.vertices: tuple[str, ...] = tuple(vertices)
        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                raise ValueError(f"duplicate vertex {v!r}")
            seen.add(v)
        self._vertex_set = frozenset(self.vertices)
        self.arrows: dict[str, Arrow] = {}
        for name, source, target in arrows:
            if name in self.arrows:
                raise ValueError(f"duplicate arrow name {name!r}")
            if source not in self._vertex_set:
                raise ValueError(f"arrow {name!r} starts at undeclared vertex {source!r}")
            if target not in self._vertex_set:
                raise ValueError(f"arrow {name!r} ends at undeclared vertex {target!r}")
            self.arrows[name] = Arrow(name, source, target)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_set

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrows[name]
        except KeyError:
            raise ValueError(f"unknown arrow {name!r}") from None

    def trivial_path(self, vertex: str) -> Path:
        if vertex not in self._vertex_set:
            raise ValueError(f"unknown vertex {vertex!r}")
        return Path((), (vertex,))

    def path(self, names: Sequence[str], at: str | None = None) -> Path:
        """Build the path given by ``names``; ``at`` anchors a trivial path."""
        names = tuple(names)
        if not names:
            if at is None:
                raise ValueError("a trivial path needs an anchoring vertex")
            return self.trivial_path(at)
        itinerary = [self.arrow(names[0]).source]
        for name in names:
            arrow = self.arrow(name)
            if arrow.source != itinerary[-1]:
                raise ValueError(
                    f"arrows do not compose: {name!r} starts at {arrow.source!r}, "
                    f"previous arrow ends at {itinerary[-1]!r}"
                )
            itinerary.append(arrow.target)
        return Path(names, tuple(itinerary))

    def contains_path(self, p: Path) -> bool:
        """Whether ``p`` is a valid path of this quiver, itinerary included."""
        if p.is_trivial:
            return p.source in self._vertex_set
        for i, name in enumerate(p.arrows):
            arrow = self.arrows.get(name)
            if arrow is None:
                return False
            if arrow.source != p.vertices[i] or arrow.target != p.vertices[i + 1]:
                return False
        return True

    def arrows_from(self, vertex: str) -> list[Arrow]:
        return sorted(
            (a for a in self.arrows.values() if a.source == vertex),
            key=lambda a: a.name,
        )

    def arrows_into(self, vertex: str) -> list[Arrow]:
        return sorted(
            (a for a in self.arrows.values() if a.target == vertex),
            key=lambda a: a.name,
        )

    def length_two_paths(self) -> list[Path]:
        """All composable two-arrow paths, ordered by their arrow names."""
        out = []
        for a in sorted(self.arrows.values(), key=lambda x: x.name):
            for b in self.arrows_from(a.target):
                out.append(Path((a.name, b.name), (a.source, a.target, b.target)))
        return out

    def is_connected(self) -> bool:
        """Connectivity of the underlying undirected graph."""
        if len(self.vertices) <= 1:
            return True
        neighbors: dict[str, set[str]] = {v: set() for v in self.vertices}
        for arrow in self.arrows.values():
            neighbors[arrow.source].add(arrow.target)
            neighbors[arrow.target].add(arrow.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in neighbors[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def compose(p: Path, q: Path) -> Path | None:
    """Concatenate two paths, or return None when the endpoints mismatch."""
    if p.target != q.source:
        return None
    if p.is_trivial:
        return q
    if q.is_trivial:
        return p
    return Path(p.arrows + q.arrows, p.vertices + q.vertices[1:])


def is_simple_cycle(p: Path) -> bool:
    """A closed nontrivial path with no repeated arrows (vertices may repeat)."""
    return (
        not p.is_trivial
        and p.source == p.target
        and len(set(p.arrows)) == len(p.arrows)
    )


def rotations(cycle: Path) -> list[Path]:
    """All cyclic rebasings of a simple cycle, one per arrow, in place order."""
    if not is_simple_cycle(cycle):
        raise ValueError(f"not a simple cycle: {cycle}")
    starts = cycle.vertices[:-1]
    out = []
    for i in range(len(cycle.arrows)):
        arrows = cycle.arrows[i:] + cycle.arrows[:i]
        vertices = starts[i:] + starts[:i] + (starts[i],)
        out.append(Path(arrows, vertices))
    return out


def canonical_rotation(cycle: Path) -> Path:
    """The lexicographically smallest rotation; canonical class representative."""
    return min(rotations(cycle), key=lambda c: c.arrows)


def lies_in(p: Path, cycle: Path) -> bool:
    """Whether ``p`` travels along ``cycle`` cyclically.

    True exactly when p occurs as a consecutive subword of a power of the
    cycle; enough powers are taken to cover every starting offset.
    """
    if p.is_trivial:
        raise ValueError("cyclic membership is undefined for trivial paths")
    if not is_simple_cycle(cycle):
        raise ValueError(f"not a simple cycle: {cycle}")
    reps = -(-len(p) // len(cycle)) + 1
    word = cycle.arrows * reps
    return any(word[i : i + len(p)] == p.arrows for i in range(len(cycle)))


def cycle_power(cycle: Path, exponent: int) -> Path:
    """The closed path walking ``cycle`` a positive number of times."""
    if not is_simple_cycle(cycle):
        raise ValueError(f"not a simple cycle: {cycle}")
    if exponent < 1:
        raise ValueError("exponent must be positive")
    return Path(cycle.arrows * exponent, cycle.vertices[:-1] * exponent + (cycle.source,))
