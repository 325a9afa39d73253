# thetaspan/commands/ratio.py
from thetaspan.commands.common import add_graph_source, add_output, emit, resolve_graph
from thetaspan.engine.analysis import spanning_ratio


def register(subparsers) -> None:
    parser = subparsers.add_parser("ratio", help="exact spanning ratio of a θ-graph")
    add_graph_source(parser)
    add_output(parser)
    parser.add_argument("--matrix", action="store_true", help="include the per-pair ratio matrix")
    parser.set_defaults(handler=run)


def run(args) -> int:
    emit(args, spanning_ratio(resolve_graph(args), include_matrix=args.matrix))
    return 0
