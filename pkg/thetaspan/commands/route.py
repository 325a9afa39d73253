# thetaspan/commands/route.py
from thetaspan.commands.common import add_graph_source, add_output, emit, resolve_graph
from thetaspan.engine.routing import competitiveness_sweep, theta_route
from thetaspan.errors import DegenerateInputError


def register(subparsers) -> None:
    parser = subparsers.add_parser("route", help="θ-routing between two ids, or over all pairs")
    add_graph_source(parser)
    add_output(parser)
    parser.add_argument("--source", type=int)
    parser.add_argument("--dest", type=int)
    parser.add_argument("--step-cap", type=int, default=None)
    parser.add_argument("--all", action="store_true", help="competitiveness over every ordered pair")
    parser.set_defaults(handler=run)


def run(args) -> int:
    graph = resolve_graph(args)
    if args.all:
        emit(args, competitiveness_sweep(graph, args.step_cap))
        return 0
    if args.source is None or args.dest is None:
        raise DegenerateInputError("--source and --dest are required unless --all is given")
    for vertex in (args.source, args.dest):
        if not 0 <= vertex < graph.n:
            raise DegenerateInputError(f"vertex id {vertex} out of range", n=graph.n)
    outcome = theta_route(graph, args.source, args.dest, args.step_cap)
    emit(args, outcome)
    return 0 if outcome.reached else 1
