"""Completion of a multiserial presentation to a symmetric quotient source.

The enlarged quiver adds one return arrow per maximal path, turning every
maximal path into a simple cycle.  Together with the cycles already traced
by the successor tables, and with the presentation's nilpotency bound as
the uniform multiplicity, these form a valid cycle system.  The collapse
map sends return arrows to zero and everything else to itself; applying it
to each generated relation yields a path certified to lie in the original
ideal, which exhibits the presented algebra as a quotient of the symmetric
one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cycle_algebra import CycleAlgebra, oracle_dimension, DEFAULT_MAX_PATHS
from .defining_pair import (
    DefiningPair,
    close_under_rotation,
    generate_relations,
    nilpotency_bound,
    validate,
)
from .fields import RATIONALS
from .presentation import (
    Presentation,
    derive_successors,
    maximal_paths,
    simple_cycles,
)
from .quiver import Path, Quiver, canonical_rotation
from .report import Report

STAR_PREFIX = "star_"

KILLED_BY_STAR_ARROW = "KilledByStarArrow"
LONG_PATH = "LongPath"
FORBIDDEN_QUADRATIC = "ForbiddenQuadratic"
BINOMIAL_BOTH_TERMS = "BinomialBothTerms"
UNCERTIFIED = "Uncertified"


@dataclass(eq=False)
class QuiverStar:
    """The base quiver enlarged by one return arrow per maximal path."""

    base: Quiver
    star: Quiver
    maximal: tuple[Path, ...]
    return_arrows: dict[tuple[str, ...], str]

    def __post_init__(self) -> None:
        self._names = frozenset(self.return_arrows.values())

    @property
    def star_names(self) -> frozenset[str]:
        return self._names

    def is_star_arrow(self, name: str) -> bool:
        return name in self._names


def build_star_quiver(presentation: Presentation) -> QuiverStar:
    """Add a return arrow from the end to the start of each maximal path.

    Names are the reserved prefix followed by the path's concatenated
    arrow names; a clash with an existing arrow (or between two generated
    names) is a fault, since output files must be reproducible.
    """
    tables = derive_successors(presentation)
    maximal = maximal_paths(tables)
    return_arrows: dict[tuple[str, ...], str] = {}
    for m in maximal:
        name = STAR_PREFIX + "".join(m.arrows)
        if name in presentation.quiver.arrows:
            raise ValueError(
                f"generated return arrow {name!r} collides with an existing "
                "arrow; rename the quiver's arrows"
            )
        if name in return_arrows.values():
            raise ValueError(
                f"generated return arrow {name!r} is ambiguous between two "
                "maximal paths; rename the quiver's arrows"
            )
        return_arrows[m.arrows] = name
    base = presentation.quiver
    arrow_triples = [(a.name, a.source, a.target) for a in base.arrows.values()]
    arrow_triples.extend(
        (return_arrows[m.arrows], m.target, m.source) for m in maximal
    )
    star = Quiver(base.vertices, arrow_triples)
    return QuiverStar(base, star, maximal, return_arrows)


def symmetrize(
    presentation: Presentation, star: QuiverStar | None = None
) -> DefiningPair:
    """The cycle system on the enlarged quiver induced by a presentation.

    Its cycles are those traced by the successor tables plus, for each
    maximal path, the closure of the path by its return arrow; every class
    carries the presentation's nilpotency bound as multiplicity.
    """
    if star is None:
        star = build_star_quiver(presentation)
    tables = derive_successors(presentation)
    representatives: list[tuple[Path, int]] = []
    seen: set[tuple[str, ...]] = set()
    for cycle in simple_cycles(tables):
        canon = canonical_rotation(cycle)
        if canon.arrows not in seen:
            seen.add(canon.arrows)
            representatives.append((canon, presentation.nilpotency))
    for m in star.maximal:
        closed = star.star.path(m.arrows + (star.return_arrows[m.arrows],))
        representatives.append((closed, presentation.nilpotency))
    return close_under_rotation(star.star, representatives)


@dataclass(eq=False)
class ProjectionMap:
    """Collapse of the enlarged quiver onto the base: identity on vertices
    and base arrows, zero on return arrows."""

    star: QuiverStar

    def path_image(self, path: Path) -> Path | None:
        """The image of a path, or None when it crosses a return arrow."""
        names = self.star.star_names
        if any(a in names for a in path.arrows):
            return None
        return path

    def vertex_image(self, vertex: str) -> str:
        return vertex


def projection(presentation: Presentation, star: QuiverStar) -> ProjectionMap:
    if star.base != presentation.quiver:
        raise ValueError("the enlarged quiver was not built from this presentation")
    return ProjectionMap(star)


@dataclass(frozen=True)
class Justification:
    kind: str
    detail: str = ""
    parts: tuple["Justification", ...] = ()

    def to_json(self) -> dict:
        out = {"kind": self.kind, "detail": self.detail}
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out


@dataclass(frozen=True)
class CertifiedGenerator:
    relation_kind: str
    relation: str
    justification: Justification
    certified: bool

    def to_json(self) -> dict:
        return {
            "relation_kind": self.relation_kind,
            "relation": self.relation,
            "justification": self.justification.to_json(),
            "certified": self.certified,
        }


@dataclass
class QuotientCertificate:
    """Per-generator evidence that the collapse of the generated ideal
    lands in the presentation's ideal."""

    presentation: Presentation
    star: QuiverStar
    pair: DefiningPair
    entries: list[CertifiedGenerator] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return all(e.certified for e in self.entries)

    def failures(self) -> list[CertifiedGenerator]:
        return [e for e in self.entries if not e.certified]

    def counts(self) -> dict[str, int]:
        out = {"type1": 0, "type2": 0, "type3": 0}
        for e in self.entries:
            out[e.relation_kind] += 1
        return out

    def to_report(self) -> Report:
        report = Report("quotient-certificate")
        counts = self.counts()
        report.add(
            "certificate-complete",
            self.complete,
            f"{len(self.entries)} generators "
            f"({counts['type1']} binomial, {counts['type2']} overrun, "
            f"{counts['type3']} quadratic)",
        )
        for entry in self.failures():
            report.add(
                f"uncertified({entry.relation})",
                False,
                entry.justification.detail,
            )
        return report


def _certify_monomial_term(
    path: Path, star: QuiverStar, nilpotency: int
) -> Justification:
    for name in path.arrows:
        if star.is_star_arrow(name):
            return Justification(
                KILLED_BY_STAR_ARROW, f"contains return arrow {name}"
            )
    if len(path) >= nilpotency:
        return Justification(
            LONG_PATH, f"image has length {len(path)} >= bound {nilpotency}"
        )
    return Justification(
        UNCERTIFIED, f"image {path} survives the collapse and is short"
    )


def verify_quotient(presentation: Presentation) -> QuotientCertificate:
    """Certify, generator by generator, that the collapse map descends.

    Quadratic generators either contain a return arrow or map to a
    composition already declared dead; the other generators either contain
    a return arrow or map to paths at least as long as the nilpotency
    bound.  An uncertifiable generator is reported, not raised, but would
    indicate an engine or input-contract bug.
    """
    star = build_star_quiver(presentation)
    pair = symmetrize(presentation, star)
    verdict = validate(pair)
    if not verdict.passed:
        failed = ", ".join(c.name for c in verdict.failures())
        raise RuntimeError(
            f"symmetrized cycle system fails validation ({failed}); "
            "this is an engine bug"
        )
    relations = generate_relations(pair)
    tables = derive_successors(presentation)
    certificate = QuotientCertificate(presentation, star, pair)
    N = presentation.nilpotency

    for u, w in relations.type1:
        left = _certify_monomial_term(u, star, N)
        right = _certify_monomial_term(w, star, N)
        ok = UNCERTIFIED not in (left.kind, right.kind)
        certificate.entries.append(
            CertifiedGenerator(
                "type1",
                f"{u} - {w}",
                Justification(BINOMIAL_BOTH_TERMS, "", (left, right)),
                ok,
            )
        )

    for p in relations.type2:
        j = _certify_monomial_term(p, star, N)
        certificate.entries.append(
            CertifiedGenerator("type2", str(p), j, j.kind != UNCERTIFIED)
        )

    for p in relations.type3:
        a, b = p.arrows
        if star.is_star_arrow(a) or star.is_star_arrow(b):
            which = a if star.is_star_arrow(a) else b
            j = Justification(KILLED_BY_STAR_ARROW, f"contains return arrow {which}")
        elif presentation.quadratic_in_ideal(a, b):
            successor = tables.sigma[a]
            j = Justification(
                FORBIDDEN_QUADRATIC,
                f"successor of {a} is "
                f"{successor if successor is not None else 'the stop marker'}, not {b}",
            )
        else:
            j = Justification(UNCERTIFIED, f"composition {p} survives in the ideal")
        certificate.entries.append(
            CertifiedGenerator("type3", str(p), j, j.kind != UNCERTIFIED)
        )

    return certificate


def dimension_comparison(
    presentation: Presentation,
    field=RATIONALS,
    max_paths: int = DEFAULT_MAX_PATHS,
    cross_check: bool = False,
) -> tuple[int, int]:
    """(dimension of the presented algebra, dimension of its symmetric cover).

    The first is computed by the truncation oracle on the presentation's
    generators, the second from the closed-form basis of the symmetrized
    system; ``cross_check`` additionally runs the oracle on the system and
    insists the two routes agree.  The cover always dominates.
    """
    dim = oracle_dimension(
        presentation.quiver,
        presentation.linear_relations(),
        presentation.nilpotency,
        field=field,
        max_paths=max_paths,
    )
    pair = symmetrize(presentation)
    algebra = CycleAlgebra(pair, field)
    dim_star = algebra.dimension
    if cross_check:
        oracle_star = oracle_dimension(
            pair.quiver,
            generate_relations(pair).linear_relations(),
            nilpotency_bound(pair),
            field=field,
            max_paths=max_paths,
        )
        if oracle_star != dim_star:
            raise RuntimeError(
                f"closed-form dimension {dim_star} disagrees with the oracle "
                f"{oracle_star}; this is an engine bug"
            )
    if dim > dim_star:
        raise RuntimeError(
            f"presented dimension {dim} exceeds the cover's {dim_star}; "
            "the collapse map cannot be surjective, this is an engine bug"
        )
    return dim, dim_star
