"""Command-line surface.

Subcommands::

    invariants FILE                     invariant profile of an algebra file
    classify FILE [--real]              isomorphism class label
    limit FILE --family FAM             contraction limit along a family
    verify-edge FILE --family FAM --target CLASS
    deform FILE --direction DIR         polynomial deformation check
    squaring FILE                       symmetrised image of an associative law
    graph {J3,J4} [--dot PATH]          degeneration graph of the shipped suite
    verify-paper [--json PATH]          recompute the full reference material

Exit codes: 0 success, 1 check failure, 2 parse or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .classify import CLASS_IDS, classify, classify_real
from .contractions import limit_of_family, verify_edge
from .deformations import verify_polynomial_deformation
from .errors import DIVERGES, NilJordanError, ParseError, SingularMatrixError
from .graphs import build_graph, to_dot
from .invariants import (
    central_series_dims,
    coboundary_space_dim,
    profile,
)
from .paperchecks import FAMILY_FIXTURES, load_family_fixture, run_verification
from .atlas import complex_labels
from .graphs import FamilySpec
from .tensors import is_jordan
from .textio import parse_algebra, parse_direction, parse_family, serialize_algebra


def _read(path):
    p = Path(path)
    if not p.exists():
        print(f"error: no such file: {path}", file=sys.stderr)
        raise SystemExit(2)
    return p.read_text()


def _load_algebra(path):
    return parse_algebra(_read(path))


def _cmd_invariants(args):
    phi = _load_algebra(args.file)
    print(f"dim = {phi.n}")
    print(f"field = {phi.field_tag}")
    jordan = phi.symmetric and is_jordan(phi)
    print(f"jordan = {'yes' if jordan else 'no'}")
    dims = central_series_dims(phi)
    print(f"central series dims = {dims}")
    if dims[-1] != 0:
        print("nilpotent = no")
        return 1
    p = profile(phi)
    print(f"s = {p.char_seq}")
    print(f"nilindex = {p.nilindex}")
    print(f"center dim = {p.dim_center}")
    print(f"derivation dim = {p.dim_der}")
    print(f"orbit dim = {p.dim_orbit}")
    print(f"coboundary dim = {coboundary_space_dim(phi)}")
    print(f"associative = {'yes' if p.associative else 'no'}")
    return 0


def _cmd_classify(args):
    phi = _load_algebra(args.file)
    if args.real:
        print(classify_real(phi))
    else:
        print(classify(phi))
    return 0


def _cmd_limit(args):
    phi = _load_algebra(args.file)
    fam = parse_family(_read(args.family))
    try:
        lim = limit_of_family(phi, fam)
    except SingularMatrixError:
        print("error: the family is singular for every t", file=sys.stderr)
        return 1
    if lim is DIVERGES:
        print("DIVERGES")
        return 0
    sys.stdout.write(serialize_algebra(lim))
    print(f"# class: {classify(lim)}")
    return 0


def _cmd_verify_edge(args):
    if args.target not in CLASS_IDS:
        print(f"error: unknown class label {args.target}", file=sys.stderr)
        return 2
    phi = _load_algebra(args.file)
    fam = parse_family(_read(args.family))
    edge = verify_edge(phi, args.target, fam)
    print(edge.describe())
    for name, ok in edge.inequalities.items():
        print(f"  {name}: {'yes' if ok else 'NO'}")
    return 0 if edge.verified else 1


def _cmd_deform(args):
    phi = _load_algebra(args.file)
    direction = parse_direction(_read(args.direction))
    report = verify_polynomial_deformation(phi, direction)
    print(f"base class = {report.base_class}")
    if not report.jordan_family:
        off = report.offending
        print(
            "NOT A JORDAN FAMILY: the identity fails at "
            f"t-exponent {off['t_exponent']} with coefficient {off['coefficient']} "
            f"(coordinate {off['coordinate']})"
        )
        return 1
    print("jordan family = yes")
    print(f"t=1 nilpotent = {'yes' if report.t1_nilpotent else 'no'}")
    if not report.t1_nilpotent:
        return 1
    print(f"t=1 class = {report.t1_class}")
    print(f"trivial = {'yes' if report.trivial else 'no'}")
    for name, ok in report.inequalities.items():
        print(f"  {name}: {'yes' if ok else 'NO'}")
    return 0


def _cmd_squaring(args):
    beta = _load_algebra(args.file)
    from .atlas import squaring_map

    phi = squaring_map(beta)
    sys.stdout.write(serialize_algebra(phi))
    print(f"# class: {classify(phi)}")
    return 0


def _graph_specs(dim):
    specs = []
    for name, group, src, tgt, _, _ in FAMILY_FIXTURES:
        if not src.startswith(f"J{dim}"):
            continue
        fam = load_family_fixture(name, group)
        specs.append(FamilySpec(f"{name}__{group}", src, tgt, fam, group))
    return specs


def _cmd_graph(args):
    dim = 3 if args.variety == "J3" else 4
    graph = build_graph(complex_labels(dim), _graph_specs(dim))
    print(f"nodes: {', '.join(graph.nodes)}")
    print("verified edges:")
    for e in sorted(graph.edges, key=lambda e: (e.source_class, e.target_class)):
        print(f"  {e.source_class} -> {e.target_class}")
    print("transitive reduction:")
    for (u, v) in graph.reduction:
        print(f"  {u} -> {v}")
    print("closure:")
    for lbl in graph.nodes:
        reach = sorted(graph.closure[lbl] - {lbl})
        print(f"  {lbl}: {', '.join(reach) if reach else '-'}")
    if graph.errata:
        print("families that failed verification (reported, not inserted):")
        for spec, edge in graph.errata:
            print(f"  {spec.name}: {edge.status}")
    if args.dot:
        Path(args.dot).write_text(to_dot(graph, name=f"contractions_{args.variety}"))
        print(f"wrote {args.dot}")
    return 0


def _cmd_verify_paper(args):
    report = run_verification()
    for line in report.lines():
        print(line)
    if args.json:
        Path(args.json).write_text(report.to_json())
        print(f"wrote {args.json}")
    return 0 if report.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="niljordan",
        description="Exact toolkit for nilpotent Jordan algebras in dimension <= 4",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariant profile of an algebra file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("classify", help="isomorphism class of an algebra file")
    p.add_argument("file")
    p.add_argument("--real", action="store_true", help="real classification (dim 3, field Q)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("limit", help="contraction limit along a family")
    p.add_argument("file")
    p.add_argument("--family", required=True)
    p.set_defaults(func=_cmd_limit)

    p = sub.add_parser("verify-edge", help="verify a contraction claim")
    p.add_argument("file")
    p.add_argument("--family", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(func=_cmd_verify_edge)

    p = sub.add_parser("deform", help="check a polynomial deformation family")
    p.add_argument("file")
    p.add_argument("--direction", required=True)
    p.set_defaults(func=_cmd_deform)

    p = sub.add_parser("squaring", help="symmetrised image of an associative law")
    p.add_argument("file")
    p.set_defaults(func=_cmd_squaring)

    p = sub.add_parser("graph", help="degeneration graph of the shipped suite")
    p.add_argument("variety", choices=["J3", "J4"])
    p.add_argument("--dot")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("verify-paper", help="recompute the full reference material")
    p.add_argument("--json")
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:  # raised for missing input files
        return exc.code
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NilJordanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


#: Alias kept for API symmetry with the operation name.
cli_main = main


if __name__ == "__main__":
    sys.exit(main())
