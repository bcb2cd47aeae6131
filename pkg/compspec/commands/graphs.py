"""construct, spectrum and enumerate subcommands."""

import argparse
import json
import sys
from typing import Any, TextIO

from compspec.errors import GraphError, ParameterError
from compspec.schemas.graph import Graph
from compspec.schemas.params import BBParams, BParams, ClassFilter, DiameterRule
from compspec.services.constructions import (
    build_B,
    build_BB,
    build_calB,
    vertex_classes_B,
    vertex_classes_BB,
    vertex_classes_calB,
)
from compspec.services.enumeration import dedup_isomorphs, enumerate_class
from compspec.services.graphcore import (
    complement,
    from_edgelist,
    graph6_decode,
    graph6_encode,
    to_edgelist,
)
from compspec.services.spectra import eigen_symmetric

DIAMETER_CHOICES: dict[str, DiameterRule] = {
    "any": "any",
    "2": "exactly-2",
    "ge3": "at-least-3",
}


def number(value: float) -> float:
    """Round to the 12 significant digits printed everywhere."""
    return float(f"{value:.12g}")


def emit_json(document: Any, out: TextIO | None = None) -> None:
    out = out or sys.stdout
    json.dump(document, out, indent=2)
    out.write("\n")


def add_graph_commands(subparsers: argparse._SubParsersAction) -> None:
    construct = subparsers.add_parser("construct", help="Build an extremal graph")
    construct.add_argument("--family", choices=["calB", "B", "BB"], required=True)
    construct.add_argument("--s", type=int)
    construct.add_argument("--t", type=int)
    construct.add_argument("--k", type=int, required=True, help="Cut size kappa")
    construct.add_argument("--n1", type=int)
    construct.add_argument("--n2", type=int)
    construct.add_argument("--variant", choices=["join", "matching"])
    construct.add_argument("--complement", action="store_true")
    construct.add_argument(
        "--format", choices=["graph6", "edgelist", "json"], default="graph6"
    )
    construct.set_defaults(handler=run_construct)

    spectrum = subparsers.add_parser("spectrum", help="Adjacency spectrum of graphs")
    spectrum.add_argument("--input", default="-", help="File with one graph per line, - for stdin")
    spectrum.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    spectrum.add_argument("--complement", action="store_true", help="Spectrum of the complement")
    spectrum.set_defaults(handler=run_spectrum)

    enumerate_cmd = subparsers.add_parser("enumerate", help="List a connectivity class")
    enumerate_cmd.add_argument("--n", type=int, required=True)
    enumerate_cmd.add_argument("--kappa", type=int, required=True)
    enumerate_cmd.add_argument("--diameter", choices=list(DIAMETER_CHOICES), default="any")
    enumerate_cmd.add_argument("--count-only", action="store_true")
    enumerate_cmd.add_argument("--dedup", action="store_true", help="One graph per isomorphism class")
    enumerate_cmd.add_argument("--allow-large", action="store_true")
    enumerate_cmd.set_defaults(handler=run_enumerate)


def _constructed(args: argparse.Namespace) -> tuple[Graph, dict[str, Any], dict[str, tuple[int, ...]]]:
    if args.family == "BB":
        if args.s is not None or args.t is not None:
            raise ParameterError("--s/--t do not apply to family BB")
        if args.n1 is None or args.n2 is None:
            raise ParameterError("family BB needs --n1 and --n2")
        params = BBParams.build(args.n1, args.n2, args.k, args.variant or "join")
        return build_BB(params), params.model_dump(), vertex_classes_BB(params)

    if args.n1 is not None or args.n2 is not None or args.variant is not None:
        raise ParameterError(f"--n1/--n2/--variant do not apply to family {args.family}")
    if args.s is None or args.t is None:
        raise ParameterError(f"family {args.family} needs --s and --t")
    if args.family == "calB":
        p = BParams.for_calB(args.s, args.t, args.k)
        return build_calB(p), p.model_dump(), vertex_classes_calB(p)
    p = BParams.for_B(args.s, args.t, args.k)
    return build_B(p), p.model_dump(), vertex_classes_B(p)


def run_construct(args: argparse.Namespace) -> int:
    g, params, classes = _constructed(args)
    if args.complement:
        g = complement(g)
    if args.format == "graph6":
        sys.stdout.write(graph6_encode(g).decode("ascii") + "\n")
    elif args.format == "edgelist":
        sys.stdout.write(to_edgelist(g))
    else:
        emit_json(
            {
                "family": args.family,
                "params": params,
                "complement": args.complement,
                "n": g.n,
                "edges": [list(e) for e in g.edges()],
                "graph6": graph6_encode(g).decode("ascii"),
                "classes": {name: list(vs) for name, vs in classes.items()},
            }
        )
    return 0


def _read_graphs(source: str, fmt: str) -> list[Graph]:
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, encoding="ascii") as handle:
            text = handle.read()
    if fmt == "edgelist":
        return [from_edgelist(text)]
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise GraphError("no graph6 input")
    return [graph6_decode(line) for line in lines]


def _spectrum_record(g: Graph) -> dict[str, Any]:
    spectrum = eigen_symmetric(g, with_vectors=False)
    return {
        "n": g.n,
        "values": [number(v) for v in spectrum.values],
        "lambda_1": number(spectrum.spectral_radius),
        "lambda_n": number(spectrum.least),
        "residual": spectrum.residual,
    }


def run_spectrum(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args.input, args.format)
    if args.complement:
        graphs = [complement(g) for g in graphs]
    records = [_spectrum_record(g) for g in graphs]
    emit_json(records[0] if len(records) == 1 else records)
    return 0


def run_enumerate(args: argparse.Namespace) -> int:
    class_filter = ClassFilter.build(args.n, args.kappa, DIAMETER_CHOICES[args.diameter])
    graphs = enumerate_class(class_filter, allow_large=args.allow_large)
    if args.dedup:
        graphs = dedup_isomorphs(graphs)
    if args.count_only:
        emit_json(
            {
                "n": args.n,
                "kappa": args.kappa,
                "diameter": class_filter.diameter_rule,
                "dedup": args.dedup,
                "count": sum(1 for _ in graphs),
            }
        )
        return 0
    for g in graphs:
        sys.stdout.write(graph6_encode(g).decode("ascii") + "\n")
    return 0
