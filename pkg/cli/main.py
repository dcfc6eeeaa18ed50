"""Точка входа CLI: python -m cli.main {run,bench,demo} ..."""
import argparse
import logging.config
import sys
from typing import List, Optional

from app.utils.error_handler import EXIT_USAGE
from cli.commands import bench, demo, run
from settings.logs import LogsConfig

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="timer-tree",
        description="Verify and benchmark a binary search tree balanced by scheduled rebuilds.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    run.register(subparsers)
    bench.register(subparsers)
    demo.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    # Настраиваем логирование
    logging.config.dictConfig(LogsConfig.LOGGING)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # usage argparse уже напечатал; --help выходит с 0
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logger.debug("Command %s with %s", args.command, vars(args))
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
