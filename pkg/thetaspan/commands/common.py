# thetaspan/commands/common.py
import argparse
import sys
from pathlib import Path

from pydantic import BaseModel

from thetaspan import config
from thetaspan.engine.graph_build import build_for_points
from thetaspan.errors import DegenerateInputError, GraphIntegrityError
from thetaspan.models.graph import ThetaGraph
from thetaspan.utils.export import parse_dot
from thetaspan.utils.point_io import load_points


def add_graph_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", type=Path, help="dot file written by `build --format dot`")
    source.add_argument("--points", type=Path, help="point file; the graph is rebuilt")
    parser.add_argument("--k", type=int, default=config.THETA_K, help="cone count when using --points")
    parser.add_argument("--tolerance", type=float, default=None, help="absolute degeneracy tolerance")


def add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")


def resolve_graph(args: argparse.Namespace) -> ThetaGraph:
    """Build from --points, or rebuild from a dot file and check its edges"""
    if args.points is not None:
        return build_for_points(load_points(args.points), k=args.k, tolerance=args.tolerance)
    k, points, edges = parse_dot(args.graph.read_text(encoding="utf-8"))
    if not points:
        raise DegenerateInputError("graph file has no vertices")
    graph = build_for_points(points, k=k, tolerance=args.tolerance)
    if set(graph.edges) != edges:
        missing = sorted(set(graph.edges) - edges)[:5]
        extra = sorted(edges - set(graph.edges))[:5]
        raise GraphIntegrityError(
            "edges in the graph file differ from the rebuilt θ-graph", missing=missing, extra=extra
        )
    return graph


def emit(args: argparse.Namespace, payload: str | bytes | BaseModel) -> None:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump_json(indent=2) + "\n"
    data = payload.encode("utf-8") if isinstance(payload, str) else payload
    if args.out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        args.out.write_bytes(data)


def status(message: str) -> None:
    print(message, file=sys.stderr)
