import argparse
import logging
from collections.abc import Sequence

from bases.platform.logging import configure_logging
from components.cli__argparse.commands import convert_weights, evaluate, predict, synth, tables, train
from components.cli__argparse.exit_codes import EXIT_USAGE, exit_code_for

logger = logging.getLogger(__name__)

COMMANDS = (synth, train, evaluate, predict, tables, convert_weights)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="memefusion", description="Hateful meme classification with inverted image tokens")
    parser.add_argument("--log-level", default="INFO", choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except Exception as exc:
        code = exit_code_for(exc)
        if code is None:
            raise
        logger.error("%s: %s", type(exc).__name__, exc)
        return code
