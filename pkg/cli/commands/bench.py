"""Команда bench: дерево с таймерами против наивного BST"""
import argparse

from app.services import bench_many, format_bench
from app.utils.error_handler import EXIT_OK, handle_cli_errors
from cli.commands.common import add_workload_arguments, config_from_args


def register(subparsers) -> None:
    parser = subparsers.add_parser("bench", help="Compare heights and wall time against a baseline")
    add_workload_arguments(parser)
    parser.add_argument(
        "--baseline",
        choices=("none", "naive"),
        default="none",
        help="Also run an unbalanced BST on the same sequence",
    )
    parser.set_defaults(handler=bench_command)


@handle_cli_errors
def bench_command(args: argparse.Namespace) -> int:
    config = config_from_args("bench", args)
    rows = bench_many(config)
    print(format_bench(rows), end="")
    return EXIT_OK
