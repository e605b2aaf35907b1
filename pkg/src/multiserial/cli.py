"""Input documents, command dispatch, and report rendering.

Documents are line-oriented: a ``[quiver]`` section followed by exactly
one of ``[presentation]`` or ``[definingpair]``.  Comments start with
``#``; tokens are whitespace-separated.

    [quiver]
    vertices = 1 2 3
    arrow a = 1 -> 2

    [presentation]
    nilpotency = 2
    zero = a b
    equal = a b , c d

    [definingpair]
    cycle = a b | mult = 2

Exit status: 0 when every verdict passes, 1 when some verdict fails, 2 on
faults (bad input, unsatisfied preconditions, exceeded budgets).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field

from .cycle_algebra import (
    DEFAULT_MAX_PATHS,
    CycleAlgebra,
    Idempotent,
    OnCyclePath,
    OracleBudgetError,
    Socle,
    oracle_dimension,
)
from .defining_pair import (
    DefiningPair,
    close_under_rotation,
    generate_relations,
    nilpotency_bound,
)
from .defining_pair import validate as validate_pair
from .fields import field_by_name
from .presentation import (
    Presentation,
    check_multiserial_condition,
    check_orbit_structure,
    derive_successors,
    maximal_paths,
    minimal_monomial_bound,
    orbit_data,
    simple_cycles,
)
from .quiver import Path, Quiver
from .report import Report
from .symmetrize import (
    STAR_PREFIX,
    build_star_quiver,
    symmetrize,
    verify_quotient,
)

COMMANDS = (
    "validate",
    "sigma-tau",
    "symmetrize",
    "relations",
    "basis",
    "gram",
    "cartan",
    "verify-quotient",
    "oracle",
    "dot",
)

SCHEMA_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        place = ""
        if line is not None:
            place = f"line {line}"
            if column is not None:
                place += f", column {column}"
            place += ": "
        super().__init__(place + message)
        self.line = line
        self.column = column


@dataclass
class InputDocument:
    quiver: Quiver
    presentation: Presentation | None = None
    pair: DefiningPair | None = None

    @property
    def kind(self) -> str:
        return "presentation" if self.presentation is not None else "definingpair"


def _column_of(line_text: str, token: str) -> int | None:
    match = re.search(rf"(?<!\w){re.escape(token)}(?!\w)", line_text)
    return match.start() + 1 if match else None


def parse_document(text: str) -> InputDocument:
    """Parse a document; definingpair sections are rotation-closed on load."""
    section = None
    vertices: list[str] = []
    vertex_set: set[str] = set()
    arrow_triples: list[tuple[str, str, str]] = []
    arrow_lines: dict[str, int] = {}
    quiver: Quiver | None = None

    nilpotency: int | None = None
    zero_specs: list[tuple[list[str], int]] = []
    equal_specs: list[tuple[list[str], list[str], int]] = []
    cycle_specs: list[tuple[list[str], int, int]] = []
    seen_sections: list[str] = []

    def finish_quiver() -> Quiver:
        nonlocal quiver
        if quiver is None:
            quiver = Quiver(vertices, arrow_triples)
        return quiver

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in ("quiver", "presentation", "definingpair"):
                raise ParseError(f"unknown section [{name}]", number)
            if name != "quiver" and "quiver" not in seen_sections:
                raise ParseError("the [quiver] section must come first", number)
            if name in seen_sections:
                raise ParseError(f"duplicate section [{name}]", number)
            seen_sections.append(name)
            section = name
            continue
        if section is None:
            raise ParseError("content before any section header", number)

        if section == "quiver":
            if line.startswith("vertices"):
                _, _, rest = line.partition("=")
                if not rest.strip():
                    raise ParseError("empty vertex list", number)
                for v in rest.split():
                    if v in vertex_set:
                        raise ParseError(f"duplicate vertex {v}", number, _column_of(raw, v))
                    vertex_set.add(v)
                    vertices.append(v)
            elif line.startswith("arrow"):
                head, eq, rest = line.partition("=")
                parts = head.split()
                if len(parts) != 2 or not eq:
                    raise ParseError("expected 'arrow NAME = SRC -> TGT'", number)
                name = parts[1]
                ends = [t.strip() for t in rest.split("->")]
                if len(ends) != 2 or not ends[0] or not ends[1]:
                    raise ParseError("expected 'arrow NAME = SRC -> TGT'", number)
                source, target = ends
                if name in arrow_lines:
                    raise ParseError(f"duplicate arrow name {name}", number, _column_of(raw, name))
                for v in (source, target):
                    if v not in vertex_set:
                        raise ParseError(
                            f"arrow {name} references undeclared vertex {v}",
                            number,
                            _column_of(raw, v),
                        )
                arrow_lines[name] = number
                arrow_triples.append((name, source, target))
            else:
                raise ParseError(f"unrecognized quiver line: {line}", number)
            continue

        if section == "presentation":
            key, eq, rest = line.partition("=")
            key = key.strip()
            rest = rest.strip()
            if not eq:
                raise ParseError(f"expected 'KEY = ...': {line}", number)
            if key == "nilpotency":
                try:
                    nilpotency = int(rest)
                except ValueError:
                    raise ParseError(f"nilpotency must be an integer, got {rest!r}", number) from None
            elif key == "zero":
                names = rest.split()
                if not names:
                    raise ParseError("empty zero path", number)
                zero_specs.append((names, number))
            elif key == "equal":
                sides = rest.split(",")
                if len(sides) != 2:
                    raise ParseError("expected 'equal = p1 p2 ... , q1 q2 ...'", number)
                left, right = sides[0].split(), sides[1].split()
                if not left or not right:
                    raise ParseError("both sides of 'equal' need arrows", number)
                equal_specs.append((left, right, number))
            else:
                raise ParseError(f"unrecognized presentation key {key!r}", number)
            continue

        if section == "definingpair":
            if not line.startswith("cycle"):
                raise ParseError(f"unrecognized definingpair line: {line}", number)
            _, eq, rest = line.partition("=")
            if not eq:
                raise ParseError("expected 'cycle = a1 a2 ... | mult = m'", number)
            pieces = rest.split("|")
            if len(pieces) != 2:
                raise ParseError("expected 'cycle = a1 a2 ... | mult = m'", number)
            names = pieces[0].split()
            mult_key, mult_eq, mult_value = pieces[1].partition("=")
            if mult_key.strip() != "mult" or not mult_eq:
                raise ParseError("expected 'mult = m' after '|'", number)
            try:
                mult = int(mult_value)
            except ValueError:
                raise ParseError(f"multiplicity must be an integer, got {mult_value.strip()!r}", number) from None
            if not names:
                raise ParseError("empty cycle", number)
            cycle_specs.append((names, mult, number))
            continue

    if "quiver" not in seen_sections:
        raise ParseError("missing [quiver] section")
    body = [s for s in seen_sections if s != "quiver"]
    if len(body) != 1:
        raise ParseError(
            "expected exactly one of [presentation] or [definingpair], "
            f"found {len(body)}"
        )
    q = finish_quiver()

    def path_of(names: list[str], number: int) -> Path:
        try:
            return q.path(names)
        except ValueError as exc:
            raise ParseError(str(exc), number) from None

    if body == ["presentation"]:
        for name, number in arrow_lines.items():
            if name.startswith(STAR_PREFIX):
                raise ParseError(
                    f"arrow name {name} uses the reserved prefix {STAR_PREFIX!r}",
                    number,
                )
        if nilpotency is None:
            raise ParseError("presentation section needs 'nilpotency = N'")
        zeros = tuple(path_of(names, number) for names, number in zero_specs)
        equals = tuple(
            (path_of(left, number), path_of(right, number))
            for left, right, number in equal_specs
        )
        try:
            presentation = Presentation(q, zeros, equals, nilpotency)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        return InputDocument(q, presentation=presentation)

    representatives = []
    for names, mult, number in cycle_specs:
        cycle = path_of(names, number)
        if mult < 1:
            raise ParseError(f"multiplicity must be positive, got {mult}", number)
        representatives.append((cycle, mult))
    try:
        pair = close_under_rotation(q, representatives)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return InputDocument(q, pair=pair)


def render_pair_document(pair: DefiningPair) -> str:
    """A parseable document for a cycle system; inverse of parsing."""
    lines = ["[quiver]"]
    lines.append("vertices = " + " ".join(pair.quiver.vertices))
    for arrow in pair.quiver.arrows.values():
        lines.append(f"arrow {arrow.name} = {arrow.source} -> {arrow.target}")
    lines.append("")
    lines.append("[definingpair]")
    for cycle, mult in pair.rotation_class_representatives():
        lines.append(f"cycle = {' '.join(cycle.arrows)} | mult = {mult}")
    return "\n".join(lines) + "\n"


def export_dot(document: InputDocument) -> str:
    """Graphviz output; return arrows of a symmetrization render dashed."""
    q = document.quiver
    lines = ["digraph quiver {"]
    for v in sorted(q.vertices):
        lines.append(f'    "{v}";')
    for arrow in sorted(q.arrows.values(), key=lambda a: a.name):
        style = ", style=dashed" if arrow.name.startswith(STAR_PREFIX) else ""
        lines.append(
            f'    "{arrow.source}" -> "{arrow.target}" [label="{arrow.name}"{style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass
class Options:
    field: object
    max_paths: int = DEFAULT_MAX_PATHS


@dataclass
class CommandResult:
    command: str
    report: Report
    data: dict = field(default_factory=dict)
    artifact: str | None = None
    artifact_key: str | None = None


def _need_presentation(document: InputDocument, command: str) -> Presentation:
    if document.presentation is None:
        raise ValueError(f"command {command!r} needs a presentation document")
    return document.presentation


def _need_pair(document: InputDocument, command: str) -> DefiningPair:
    if document.pair is None:
        raise ValueError(f"command {command!r} needs a definingpair document")
    return document.pair


def _coeff_json(value):
    try:
        return int(value)
    except (TypeError, ValueError):
        return str(value)


def _path_json(p: Path) -> list[str]:
    return list(p.arrows)


def _basis_json(element) -> dict:
    if isinstance(element, Idempotent):
        return {"kind": "idempotent", "vertex": element.vertex}
    if isinstance(element, OnCyclePath):
        return {"kind": "path", "arrows": _path_json(element.path)}
    assert isinstance(element, Socle)
    return {"kind": "socle", "vertex": element.vertex}


def _cmd_validate(document: InputDocument, options: Options) -> CommandResult:
    if document.presentation is not None:
        presentation = document.presentation
        report = check_multiserial_condition(presentation)
        minimal = minimal_monomial_bound(presentation)
        if minimal is not None and minimal < presentation.nilpotency:
            report.warn(
                f"declared nilpotency {presentation.nilpotency} is not minimal; "
                f"the monomial generators already force bound {minimal}"
            )
        return CommandResult("validate", report)
    pair = document.pair
    assert pair is not None
    return CommandResult("validate", validate_pair(pair))


def _stop_json(value: str | None):
    return value


def _cmd_sigma_tau(document: InputDocument, options: Options) -> CommandResult:
    presentation = _need_presentation(document, "sigma-tau")
    tables = derive_successors(presentation)
    report = check_orbit_structure(tables)
    orbits = orbit_data(tables)
    data = {
        "sigma": {a: _stop_json(tables.sigma[a]) for a in sorted(tables.sigma)},
        "tau": {a: _stop_json(tables.tau[a]) for a in sorted(tables.tau)},
        "orbits": {
            a: {
                "forward_stop": orbits[a].forward_stop,
                "backward_stop": orbits[a].backward_stop,
                "period": orbits[a].period,
            }
            for a in sorted(orbits)
        },
        "maximal_paths": [_path_json(m) for m in maximal_paths(tables)],
        "cycles": [_path_json(c) for c in simple_cycles(tables)],
    }
    return CommandResult("sigma-tau", report, data)


def _cmd_symmetrize(document: InputDocument, options: Options) -> CommandResult:
    presentation = _need_presentation(document, "symmetrize")
    star = build_star_quiver(presentation)
    pair = symmetrize(presentation, star)
    report = validate_pair(pair)
    data = {
        "return_arrows": {
            star.return_arrows[m.arrows]: {
                "source": m.target,
                "target": m.source,
                "closes": _path_json(m),
            }
            for m in star.maximal
        },
        "classes": [
            {"cycle": _path_json(c), "mult": mult}
            for c, mult in pair.rotation_class_representatives()
        ],
    }
    return CommandResult(
        "symmetrize", report, data, render_pair_document(pair), "document"
    )


def _cmd_relations(document: InputDocument, options: Options) -> CommandResult:
    pair = _need_pair(document, "relations")
    relations = generate_relations(pair)
    data = {
        "type1": [[_path_json(p), _path_json(q)] for p, q in relations.type1],
        "type2": [_path_json(p) for p in relations.type2],
        "type3": [_path_json(p) for p in relations.type3],
        "counts": dict(zip(("type1", "type2", "type3"), relations.counts())),
        "nilpotency_bound": nilpotency_bound(pair),
    }
    return CommandResult("relations", Report("relations"), data)


def _cmd_basis(document: InputDocument, options: Options) -> CommandResult:
    pair = _need_pair(document, "basis")
    algebra = CycleAlgebra(pair, options.field)
    data = {
        "dimension": algebra.dimension,
        "basis": [_basis_json(e) for e in algebra.basis],
    }
    return CommandResult("basis", Report("basis"), data)


def _cmd_gram(document: InputDocument, options: Options) -> CommandResult:
    pair = _need_pair(document, "gram")
    algebra = CycleAlgebra(pair, options.field)
    gram = algebra.gram_matrix()
    report = Report("gram")
    for warning in gram.warnings:
        report.warn(warning)
    report.add("gram-permutation", gram.is_permutation)
    report.add(
        "gram-nondegenerate",
        gram.nondegenerate,
        f"rank {gram.rank} of dimension {gram.dimension}"
        + ("" if gram.nondegenerate else " (DEGENERATE block present)"),
    )
    data = {
        "dimension": gram.dimension,
        "rank": gram.rank,
        "nondegenerate": gram.nondegenerate,
        "permutation": gram.is_permutation,
        "matrix": [[_coeff_json(c) for c in row] for row in gram.entries],
    }
    return CommandResult("gram", report, data)


def _cmd_cartan(document: InputDocument, options: Options) -> CommandResult:
    pair = _need_pair(document, "cartan")
    algebra = CycleAlgebra(pair, options.field)
    cartan = algebra.cartan_matrix()
    data = {"vertices": list(cartan.vertices), "matrix": cartan.entries}
    return CommandResult("cartan", Report("cartan"), data)


def _cmd_verify_quotient(document: InputDocument, options: Options) -> CommandResult:
    presentation = _need_presentation(document, "verify-quotient")
    certificate = verify_quotient(presentation)
    report = certificate.to_report()
    data = {
        "complete": certificate.complete,
        "generators": [e.to_json() for e in certificate.entries],
    }
    try:
        dim = oracle_dimension(
            presentation.quiver,
            presentation.linear_relations(),
            presentation.nilpotency,
            field=options.field,
            max_paths=options.max_paths,
        )
        dim_star = CycleAlgebra(certificate.pair, options.field).dimension
        report.add(
            "dimension-dominates", dim <= dim_star, f"{dim} <= {dim_star}"
        )
        data["dimension"] = dim
        data["dimension_star"] = dim_star
    except OracleBudgetError as exc:
        report.warn(f"dimension comparison skipped: {exc}")
    return CommandResult("verify-quotient", report, data)


def _cmd_oracle(document: InputDocument, options: Options) -> CommandResult:
    report = Report("oracle")
    if document.presentation is not None:
        presentation = document.presentation
        bound = presentation.nilpotency
        dim = oracle_dimension(
            presentation.quiver,
            presentation.linear_relations(),
            bound,
            field=options.field,
            max_paths=options.max_paths,
        )
        data = {"bound": bound, "oracle_dimension": dim, "closed_form_dimension": None}
        return CommandResult("oracle", report, data)
    pair = document.pair
    assert pair is not None
    bound = nilpotency_bound(pair)
    dim = oracle_dimension(
        pair.quiver,
        generate_relations(pair).linear_relations(),
        bound,
        field=options.field,
        max_paths=options.max_paths,
    )
    closed = CycleAlgebra(pair, options.field).dimension
    report.add("dimension-match", dim == closed, f"oracle {dim}, closed form {closed}")
    data = {"bound": bound, "oracle_dimension": dim, "closed_form_dimension": closed}
    return CommandResult("oracle", report, data)


def _cmd_dot(document: InputDocument, options: Options) -> CommandResult:
    return CommandResult(
        "dot", Report("dot"), {}, export_dot(document), "dot"
    )


_HANDLERS = {
    "validate": _cmd_validate,
    "sigma-tau": _cmd_sigma_tau,
    "symmetrize": _cmd_symmetrize,
    "relations": _cmd_relations,
    "basis": _cmd_basis,
    "gram": _cmd_gram,
    "cartan": _cmd_cartan,
    "verify-quotient": _cmd_verify_quotient,
    "oracle": _cmd_oracle,
    "dot": _cmd_dot,
}


def run_command(command: str, document: InputDocument, options: Options) -> CommandResult:
    try:
        handler = _HANDLERS[command]
    except KeyError:
        raise ValueError(f"unknown command {command!r}") from None
    return handler(document, options)


def _render_data(data: dict, indent: str = "") -> list[str]:
    lines = []
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_render_data(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(f"{indent}  {json.dumps(item)}")
        else:
            lines.append(f"{indent}{key}: {json.dumps(value)}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="input document")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--out", metavar="FILE", help="write the primary output to FILE")
    common.add_argument(
        "--field",
        default="rational",
        help="coefficient field: 'rational' or 'fp:P' for a prime P",
    )
    common.add_argument(
        "--max-paths",
        type=int,
        default=DEFAULT_MAX_PATHS,
        help="truncated path enumeration budget for the oracle",
    )
    common.add_argument("--quiet", action="store_true", help="suppress the report")
    parser = argparse.ArgumentParser(
        prog="multiserial",
        description="construct and verify symmetric multiserial quotients of path algebras",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    helps = {
        "validate": "check the multiserial condition or the cycle-system axioms",
        "sigma-tau": "successor tables, orbits, maximal paths and cycles",
        "symmetrize": "build the symmetric cycle system on the enlarged quiver",
        "relations": "emit the generated relation families of a cycle system",
        "basis": "closed-form basis and dimension of a cycle system's algebra",
        "gram": "trace-form Gram matrix, rank and nondegeneracy",
        "cartan": "basis counts by vertex pair",
        "verify-quotient": "certify that the collapse of the cover's ideal descends",
        "oracle": "dimension by brute force in a truncated path algebra",
        "dot": "Graphviz export of the document's quiver",
    }
    for name in COMMANDS:
        subparsers.add_parser(name, parents=[common], help=helps[name])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.input, encoding="utf-8") as handle:
            text = handle.read()
        document = parse_document(text)
        options = Options(field=field_by_name(args.field), max_paths=args.max_paths)
        result = run_command(args.command, document, options)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.json:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": result.command,
            "input": args.input,
            "passed": result.report.passed,
            "verdicts": [
                {"name": c.name, "passed": c.passed, "witness": c.witness}
                for c in result.report.checks
            ],
            "warnings": list(result.report.warnings),
            "data": dict(result.data),
        }
        if result.artifact is not None:
            if args.out:
                with open(args.out, "w", encoding="utf-8") as handle:
                    handle.write(result.artifact)
                payload["data"]["output_file"] = args.out
            else:
                payload["data"][result.artifact_key] = result.artifact
        if not args.quiet:
            print(json.dumps(payload))
    else:
        lines = [f"command: {result.command} ({args.input})"]
        lines.extend(result.report.lines())
        lines.extend(_render_data(result.data))
        if result.artifact is not None:
            if args.out:
                with open(args.out, "w", encoding="utf-8") as handle:
                    handle.write(result.artifact)
                lines.append(f"wrote {args.out}")
            else:
                lines.append(result.artifact.rstrip("\n"))
        if not args.quiet:
            print("\n".join(lines))

    return 0 if result.report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
