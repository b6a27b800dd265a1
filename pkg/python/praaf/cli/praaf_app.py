import argparse
import logging
import sys
from typing import List, Optional

from praaf.cli.commands import COMMANDS
from praaf.config import load_config
from praaf.errors import EXIT_INPUT_ERROR, ConfigurationError
from praaf.models import SemanticsName, WorldMode

logger = logging.getLogger(__name__)


def _common_options() -> argparse.ArgumentParser:
    """Options shared by every subcommand. Unset options fall back to PRAAF_* settings."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=[m.value for m in WorldMode], default=None, help="world construction")
    common.add_argument("--semantics", choices=[s.value for s in SemanticsName], default=None, help="extension semantics")
    common.add_argument("--tol", dest="tolerance", type=float, default=None, help="equivalence tolerance")
    common.add_argument("--max-elements", type=int, default=None, help="cap on probabilistic elements")
    common.add_argument("--max-arguments", type=int, default=None, help="cap on arguments of a realized framework")
    common.add_argument("--output", choices=["table", "csv", "jsonl"], default=None, help="output format")
    common.add_argument("--eta", dest="eta_id", default=None, help="id of the ground-truth argument")
    common.add_argument("--exact", action="store_true", default=None, help="use exact rational arithmetic")
    common.add_argument("-v", "--verbose", action="count", default=0, help="log INFO (-v) or DEBUG (-vv) to stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="praaf",
        description="Exact inference for constellation probabilistic argumentation frameworks"
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    common = _common_options()
    for command in COMMANDS:
        subparser = subparsers.add_parser(command.name, help=command.help, parents=[common])
        command.add_arguments(subparser)
        subparser.set_defaults(command_class=command)
    return parser


def _log_level(verbose: int, configured: str) -> int:
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.getLevelName(configured)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the praaf command"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on bad usage and 0 on --help
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

    try:
        config = load_config().with_overrides(
            mode=args.mode,
            semantics=args.semantics,
            tolerance=args.tolerance,
            max_elements=args.max_elements,
            max_arguments=args.max_arguments,
            output=args.output,
            eta_id=args.eta_id,
            exact=args.exact
        )
    except ConfigurationError as e:
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code

    logging.basicConfig(
        level=_log_level(args.verbose, config.log_level),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True
    )
    logger.debug(f"Configuration: {config.model_dump()}")

    command = args.command_class(config)
    return command.run(args)


if __name__ == "__main__":
    sys.exit(main())
