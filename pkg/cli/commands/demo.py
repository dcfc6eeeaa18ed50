"""Команда demo: пошаговая трассировка таймеров"""
import argparse
import sys

from app.core import parse_k
from app.services import demo_trace
from app.utils.error_handler import EXIT_OK, UsageError, handle_cli_errors
from settings.config import AppConfig


def register(subparsers) -> None:
    parser = subparsers.add_parser("demo", help="Print the tree with timers after each ascending insert")
    parser.add_argument("--n", type=int, default=AppConfig.DEMO_N, help=f"Number of inserts (default: {AppConfig.DEMO_N})")
    parser.add_argument("--k", default=AppConfig.DEFAULT_K, help=f"Rebalance fraction NUM/DEN (default: {AppConfig.DEFAULT_K})")
    parser.set_defaults(handler=demo_command)


@handle_cli_errors
def demo_command(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError(f"n must be non-negative, got {args.n}")
    k_num, k_den = parse_k(args.k)
    demo_trace(args.n, k_num, k_den, sys.stdout)
    return EXIT_OK
