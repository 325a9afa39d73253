# thetaspan/main.py
import argparse
import json
import logging
import sys

from thetaspan import __version__, config
from thetaspan.commands import build, gen, path, ratio, route, verify
from thetaspan.errors import ThetaSpanError

logger = logging.getLogger("thetaspan")

COMMANDS = (build, ratio, path, route, gen, verify)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetaspan",
        description="θ-graphs: construction, exact spanning ratios, constructive θ₅ paths and θ-routing",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=config.LOG_LEVEL,
                        choices=("DEBUG", "INFO", "WARNING", "ERROR"), type=str.upper)
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Include commands
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: list[str] | None = None) -> int:
    args = create_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except ThetaSpanError as exc:
        print(json.dumps(exc.to_dict(), default=str), file=sys.stderr)
        return exc.status
    except Exception as exc:
        logger.exception("unhandled error in %s", args.command)
        print(json.dumps({"message": "Internal error", "detail": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
