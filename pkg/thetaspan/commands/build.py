# thetaspan/commands/build.py
from pathlib import Path

from thetaspan import config
from thetaspan.commands.common import emit, status
from thetaspan.engine.analysis import shortest_path
from thetaspan.engine.graph_build import build_for_points
from thetaspan.errors import DegenerateInputError
from thetaspan.utils.export import FORMATS, export_graph
from thetaspan.utils.point_io import load_points


def register(subparsers) -> None:
    parser = subparsers.add_parser("build", help="build a θ-graph and export it")
    parser.add_argument("--k", type=int, default=config.THETA_K)
    parser.add_argument("--points", type=Path, required=True)
    parser.add_argument("--out", type=Path, default=None)
    parser.add_argument("--tolerance", type=float, default=None)
    parser.add_argument("--format", choices=FORMATS, default="edge-list")
    parser.add_argument("--highlight-path", type=int, nargs=2, metavar=("SOURCE", "DEST"),
                        help="overlay the shortest path between two ids (svg)")
    parser.set_defaults(handler=run)


def run(args) -> int:
    graph = build_for_points(load_points(args.points), k=args.k, tolerance=args.tolerance)
    highlight = None
    if args.highlight_path:
        s, t = args.highlight_path
        if not (0 <= s < graph.n and 0 <= t < graph.n):
            raise DegenerateInputError("highlight ids out of range", source=s, dest=t, n=graph.n)
        path = shortest_path(graph, s, t)
        highlight = path.vertices if path is not None else None
    emit(args, export_graph(graph, args.format, highlight))
    status(f"✅ Built θ{graph.k}-graph: n={graph.n}, edges={len(graph.edges)}")
    return 0
