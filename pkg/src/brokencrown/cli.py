"""Command-line surface: generate, convert, count, verify.

Data goes to stdout (or --out), diagnostics to stderr, so subcommands
compose in pipelines. Exit codes: 0 success, 1 verification failure,
2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .errors import BrokenCrownError, InvalidParameter, ParseError
from .families import (
    BrokenCrown,
    BrokenCrownSpec,
    RemovalPolicy,
    build_broken_crown,
    build_crown,
    build_gp2,
    build_wheel,
)
from .formats import (
    Family,
    InstanceMetadata,
    graph_to_json,
    parse,
    write_directed_arclist,
    write_hcp_tsplib,
)
from .graphs import DirectedGraph, UndirectedGraph, underlying_graph
from .hamilton import analyze_labels, count_hc_directed, count_hc_undirected
from .karp import to_undirected_karp

_DIFF_LIMIT = 12  # arcs listed per side in a structure diff


def _use_color(stream) -> bool:
    return os.environ.get("BC_COLOR", "1") != "0" and stream.isatty()


def _mark(ok: bool, stream) -> str:
    word = "ok" if ok else "FAIL"
    if _use_color(stream):
        return f"\x1b[32m{word}\x1b[0m" if ok else f"\x1b[31m{word}\x1b[0m"
    return word


def _parse_int_list(text: str, what: str, parser: argparse.ArgumentParser) -> frozenset[int]:
    try:
        values = frozenset(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        parser.error(f"--{what} expects comma-separated integers, got {text!r}")
    if not values:
        parser.error(f"--{what} must list at least one integer")
    return values


def _read_input(path: str, parser: argparse.ArgumentParser):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        parser.error(f"cannot read {path}: {exc}")
    try:
        return parse(text)
    except ParseError as exc:
        parser.error(f"{path}: {exc}")


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _broken_spec(args, parser: argparse.ArgumentParser) -> BrokenCrownSpec:
    labels = None
    if args.labels is not None:
        labels = _parse_int_list(args.labels, "labels", parser)
    try:
        return BrokenCrownSpec(
            n=args.n,
            k=args.k,
            policy=RemovalPolicy(args.remove),
            removed_labels=labels,
            contract=args.contract,
            hub_length=args.hub_path,
        )
    except InvalidParameter as exc:
        parser.error(str(exc))


def _broken_metadata(spec: BrokenCrownSpec) -> InstanceMetadata:
    return InstanceMetadata(
        name=f"broken_n{spec.n}_k{spec.k}",
        family=Family.BROKEN_CROWN,
        n=spec.n,
        k=spec.k,
        policy=spec.policy,
        removed_labels=spec.removed_labels,
        directed=True,
    )


def _cmd_gen(args, parser: argparse.ArgumentParser) -> int:
    if args.family == "crown":
        try:
            graph = build_crown(args.n).graph
        except InvalidParameter as exc:
            parser.error(str(exc))
        meta = InstanceMetadata(
            name=f"crown_n{args.n}", family=Family.CROWN, n=args.n, directed=True
        )
    elif args.family == "broken":
        spec = _broken_spec(args, parser)
        graph = build_broken_crown(spec).graph
        meta = _broken_metadata(spec)
    elif args.family == "wheel":
        spokes = None
        if args.spokes is not None:
            spokes = _parse_int_list(args.spokes, "spokes", parser)
        try:
            graph = build_wheel(args.n, spokes)
        except InvalidParameter as exc:
            parser.error(str(exc))
        meta = InstanceMetadata(
            name=f"wheel_n{args.n}", family=Family.WHEEL, n=args.n, directed=False
        )
    else:  # gp2
        try:
            graph = build_gp2(args.n)
        except InvalidParameter as exc:
            parser.error(str(exc))
        meta = InstanceMetadata(
            name=f"gp2_n{args.n}", family=Family.GP2, n=args.n, directed=False
        )

    if args.format == "json":
        text = graph_to_json(graph, meta) + "\n"
    elif isinstance(graph, DirectedGraph):
        text = write_directed_arclist(graph, meta)
    else:
        text = write_hcp_tsplib(graph, meta)
    _write_output(text, args.out)
    return 0


def _cmd_convert(args, parser: argparse.ArgumentParser) -> int:
    graph, meta = _read_input(args.infile, parser)
    if not isinstance(graph, DirectedGraph):
        parser.error(f"{args.infile}: conversion expects a directed instance")
    converted, _ = to_undirected_karp(graph)
    out_meta = InstanceMetadata(
        name=f"{meta.name or 'instance'}_undirected",
        family=Family.CONVERTED,
        n=meta.n,
        k=meta.k,
        policy=meta.policy,
        removed_labels=meta.removed_labels,
        directed=False,
    )
    _write_output(write_hcp_tsplib(converted, out_meta), args.out)
    return 0


def _cmd_count(args, parser: argparse.ArgumentParser) -> int:
    graph, _ = _read_input(args.infile, parser)
    if isinstance(graph, DirectedGraph) and args.undirected:
        graph = underlying_graph(graph)
    if isinstance(graph, DirectedGraph):
        report = count_hc_directed(graph, cap=args.cap, collect=args.cycles)
    else:
        report = count_hc_undirected(graph, cap=args.cap, collect=args.cycles)
    payload: dict = {"count": report.count}
    if report.truncated:
        payload["truncated"] = True
    if args.cycles:
        payload["cycles"] = [list(c) for c in report.cycles]
    sys.stdout.write(json.dumps(payload) + "\n")
    return 0


def _diff_against(expected: DirectedGraph, got: DirectedGraph, out) -> bool:
    """Print a structural diff; True when the graphs match."""
    ok = True
    if expected.order != got.order:
        out.write(f"  order differs: expected {expected.order}, file has {got.order}\n")
        ok = False
    missing = sorted(expected.arcs - got.arcs)
    extra = sorted(got.arcs - expected.arcs)
    for label, arcs in (("missing", missing), ("unexpected", extra)):
        if arcs:
            ok = False
            shown = ", ".join(map(str, arcs[:_DIFF_LIMIT]))
            more = "" if len(arcs) <= _DIFF_LIMIT else f" (+{len(arcs) - _DIFF_LIMIT} more)"
            out.write(f"  {label} arcs: {shown}{more}\n")
    return ok


def _cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    spec = _broken_spec(args, parser)
    built: BrokenCrown = build_broken_crown(spec)
    out = sys.stdout
    failures = 0

    out.write(
        f"instance broken_n{spec.n}_k{spec.k}: order {built.graph.order}, "
        f"arcs {built.graph.arc_count}\n"
    )

    if args.infile is not None:
        graph, _ = _read_input(args.infile, parser)
        if isinstance(graph, UndirectedGraph):
            expected_u, _ = to_undirected_karp(built.graph)
            same = (
                expected_u.order == graph.order and expected_u.edges == graph.edges
            )
            if not same:
                out.write(f"  undirected image differs from {args.infile}\n")
            ok = same
        else:
            ok = _diff_against(built.graph, graph, out)
        out.write(f"file structure: {_mark(ok, out)}\n")
        failures += 0 if ok else 1

    report = count_hc_directed(built.graph, collect=True)
    count_ok = report.count == spec.k
    out.write(
        f"hamiltonian cycles: {report.count} (expected {spec.k}) {_mark(count_ok, out)}\n"
    )
    failures += 0 if count_ok else 1

    try:
        analysis = analyze_labels(report, built.attachment, built.hub)
        label_ok = analysis.ok
        survivors = ",".join(str(i) for i, _ in sorted(analysis.pairs))
        detail = f"matched={analysis.matched} distinct={analysis.distinct} labels={survivors}"
    except BrokenCrownError as exc:
        label_ok = False
        detail = str(exc)
    out.write(f"hub labels: {detail} {_mark(label_ok, out)}\n")
    failures += 0 if label_ok else 1

    out.write(("PASS" if not failures else "FAIL") + "\n")
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brokencrown",
        description="Generate, convert, count, and verify Hamiltonian cycle "
        "benchmark instances with a prescribed cycle count.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a benchmark instance")
    gen_sub = gen.add_subparsers(dest="family", required=True)

    crown = gen_sub.add_parser("crown", help="directed crown ring")
    crown.add_argument("--n", type=int, required=True)
    crown.add_argument("--out", default=None)
    crown.add_argument("--format", choices=["dhc", "json"], default="dhc")
    crown.set_defaults(_subparser=crown)

    def add_broken_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument(
            "--remove",
            choices=[policy.value for policy in RemovalPolicy],
            default=RemovalPolicy.OUTGOING_ONLY.value,
            help="which hub arcs to delete per removed label (default outgoing)",
        )
        p.add_argument("--labels", default=None, help="removed labels (default: the n-k largest)")
        p.add_argument("--contract", action="store_true")
        p.add_argument("--hub-path", type=int, default=1, metavar="M")

    broken = gen_sub.add_parser("broken", help="broken crown with k cycles")
    add_broken_flags(broken)
    broken.add_argument("--out", default=None)
    broken.add_argument("--format", choices=["dhc", "json"], default="dhc")
    broken.set_defaults(_subparser=broken)

    wheel = gen_sub.add_parser("wheel", help="wheel graph fixture")
    wheel.add_argument("--n", type=int, required=True)
    wheel.add_argument("--spokes", default=None, help="rim ids keeping their spoke")
    wheel.add_argument("--out", default=None)
    wheel.add_argument("--format", choices=["tsplib", "json"], default="tsplib")
    wheel.set_defaults(_subparser=wheel)

    gp2 = gen_sub.add_parser("gp2", help="generalized Petersen GP(n,2) fixture")
    gp2.add_argument("--n", type=int, required=True)
    gp2.add_argument("--out", default=None)
    gp2.add_argument("--format", choices=["tsplib", "json"], default="tsplib")
    gp2.set_defaults(_subparser=gp2)

    convert = sub.add_parser("convert", help="vertex-split a directed instance to TSPLIB HCP")
    convert.add_argument("--in", dest="infile", default="-")
    convert.add_argument("--out", default=None)
    convert.set_defaults(_subparser=convert)

    count = sub.add_parser("count", help="enumerate Hamiltonian cycles, JSON to stdout")
    count.add_argument("--in", dest="infile", default="-")
    count.add_argument("--undirected", action="store_true",
                       help="count the orientation-blind image of a directed instance")
    count.add_argument("--cap", type=int, default=None)
    count.add_argument("--cycles", action="store_true")
    count.set_defaults(_subparser=count)

    verify = sub.add_parser("verify", help="check an instance has exactly k cycles")
    add_broken_flags(verify)
    verify.add_argument("--in", dest="infile", default=None,
                        help="also compare this file against the construction")
    verify.set_defaults(_subparser=verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    parser = getattr(args, "_subparser", parser)
    try:
        if args.command == "gen":
            return _cmd_gen(args, parser)
        if args.command == "convert":
            return _cmd_convert(args, parser)
        if args.command == "count":
            return _cmd_count(args, parser)
        return _cmd_verify(args, parser)
    except BrokenCrownError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
