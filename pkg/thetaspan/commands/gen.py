# thetaspan/commands/gen.py
from thetaspan import config
from thetaspan.commands.common import add_output, emit, status
from thetaspan.engine.constructions import adversary_instance, appendix_instance, theorem3_path
from thetaspan.utils.point_io import format_points


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="generate a lower-bound or routing-adversary point set")
    parser.add_argument("instance", choices=("theorem3", "appendix", "adversary"))
    parser.add_argument("--epsilon", type=float, default=config.DEFAULT_EPSILON)
    parser.add_argument("--cycles", type=int, default=config.DEFAULT_CYCLES)
    add_output(parser)
    parser.set_defaults(handler=run)


def run(args) -> int:
    if args.instance == "theorem3":
        instance = theorem3_path(args.epsilon)
        source, target = instance.source, instance.target
    elif args.instance == "appendix":
        instance = appendix_instance(args.epsilon)
        source, target = instance.source, instance.target
    else:
        instance = adversary_instance(args.cycles, args.epsilon)
        source, target = instance.source, instance.destination
    emit(args, format_points(instance.points))
    status(
        f"✅ Generated {args.instance}: {len(instance.points)} points, "
        f"source={source}, target={target}, build tolerance={instance.tolerance:g}"
    )
    if args.instance == "adversary":
        status(f"   {instance.main_steps} main steps, each longer than |source target|")
    return 0
