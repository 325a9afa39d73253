# thetaspan/commands/verify.py
from pathlib import Path

from thetaspan import config
from thetaspan.commands.common import emit, status
from thetaspan.engine.analysis import verify_bounds
from thetaspan.engine.graph_build import build_for_points
from thetaspan.utils.point_io import load_points


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="check the proven bounds on a point set")
    parser.add_argument("--points", type=Path, required=True)
    parser.add_argument("--k", type=int, default=config.THETA_K)
    parser.add_argument("--tolerance", type=float, default=None)
    parser.add_argument("--out", type=Path, default=None)
    parser.set_defaults(handler=run)


def run(args) -> int:
    graph = build_for_points(load_points(args.points), k=args.k, tolerance=args.tolerance)
    report = verify_bounds(graph)
    emit(args, report)
    if report.passed:
        status(f"✅ All {len(report.checks)} checks passed")
        return 0
    status("❌ Failed: " + ", ".join(check.name for check in report.failures()))
    return 1
