"""Команда run: нагрузка плюс проверки инвариантов"""
import argparse
import logging
import sys
from pathlib import Path

from app.services import run_many
from app.utils.error_handler import EXIT_OK, InvariantViolation, handle_cli_errors
from cli.commands.common import add_workload_arguments, config_from_args
from settings.config import AppConfig

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("run", help="Run a workload with invariant checks and write CSV")
    add_workload_arguments(parser)
    parser.add_argument(
        "--check-every",
        type=int,
        default=AppConfig.DEFAULT_CHECK_EVERY,
        help="Run the full check suite every N steps; 0 checks only at the end",
    )
    parser.add_argument("--dot", type=Path, default=None, help="Write the final tree, or the failing one, as DOT")
    parser.add_argument("--jobs", type=int, default=AppConfig.DEFAULT_JOBS, help="Threads for independent (k, seed) runs")
    parser.set_defaults(handler=run_command)


@handle_cli_errors
def run_command(args: argparse.Namespace) -> int:
    """Прогон каждой пары (k, seed); выход 1 на первом нарушенном инварианте"""
    config = config_from_args("run", args)
    try:
        reports = run_many(config)
    except InvariantViolation as e:
        if config.dot is None:
            sys.stderr.write(e.dot)
        raise

    for report in reports:
        print(
            f"[run] OK workload={report.workload} k={report.k} seed={report.seed} "
            f"steps={report.steps} size={report.final_size} max_height={report.max_height} "
            f"bound={report.max_height_bound} rebuilds={report.counters.total_rebuilds} "
            f"rebuilt_nodes={report.counters.total_rebuilt_nodes} decrements={report.counters.total_decrements}"
        )
    return EXIT_OK
