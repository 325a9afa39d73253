# thetaspan/commands/path.py
from thetaspan.commands.common import add_graph_source, add_output, emit, resolve_graph
from thetaspan.engine.analysis import shortest_path
from thetaspan.engine.path_construct import spanning_path
from thetaspan.errors import DegenerateInputError


def register(subparsers) -> None:
    parser = subparsers.add_parser("path", help="constructive or shortest path between two ids")
    add_graph_source(parser)
    add_output(parser)
    parser.add_argument("--source", type=int, required=True)
    parser.add_argument("--dest", type=int, required=True)
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--constructive", dest="mode", action="store_const", const="constructive")
    mode.add_argument("--shortest", dest="mode", action="store_const", const="shortest")
    parser.set_defaults(handler=run, mode="constructive")


def run(args) -> int:
    graph = resolve_graph(args)
    for vertex in (args.source, args.dest):
        if not 0 <= vertex < graph.n:
            raise DegenerateInputError(f"vertex id {vertex} out of range", n=graph.n)
    if args.mode == "shortest":
        result = shortest_path(graph, args.source, args.dest)
        if result is None:
            emit(args, '{"path": null, "reason": "disconnected"}\n')
            return 1
    else:
        result = spanning_path(graph, args.source, args.dest)
    emit(args, result)
    return 0
