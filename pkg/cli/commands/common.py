"""Флаги, общие для run и bench"""
import argparse
from pathlib import Path

from app.schemas import RunConfig
from app.workload import WORKLOAD_NAMES
from settings.config import AppConfig


def add_workload_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--workload",
        choices=WORKLOAD_NAMES,
        default="ascending",
        help="Built-in operation sequence (default: ascending)",
    )
    parser.add_argument("--n", type=int, default=AppConfig.DEFAULT_N, help=f"Workload size (default: {AppConfig.DEFAULT_N})")
    parser.add_argument(
        "--seed",
        type=int,
        action="append",
        dest="seeds",
        help=f"Generator seed. Repeatable. Default: {AppConfig.DEFAULT_SEED}",
    )
    parser.add_argument(
        "--k",
        action="append",
        dest="ks",
        help=f"Rebalance fraction as NUM/DEN with 0 < NUM < DEN. Repeatable. Default: {AppConfig.DEFAULT_K}",
    )
    parser.add_argument("--p-delete", type=float, default=AppConfig.DEFAULT_P_DELETE, help="Delete probability for random-mixed")
    parser.add_argument("--key-space", type=int, default=0, help="Random keys are drawn from 1..KEY_SPACE (default: 4n)")
    parser.add_argument("--churn-pairs", type=int, default=-1, help="Delete/insert pairs for churn (default: n)")
    parser.add_argument("--replay", type=Path, default=None, help="Replay ops from a file, one 'op key' per line")
    parser.add_argument("--csv", type=Path, default=None, help="Write results as CSV to this path")


def config_from_args(command: str, args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=command,
        workload=args.workload,
        n=args.n,
        seeds=args.seeds or [AppConfig.DEFAULT_SEED],
        ks=args.ks or [AppConfig.DEFAULT_K],
        p_delete=args.p_delete,
        key_space=args.key_space,
        churn_pairs=args.churn_pairs,
        check_every=getattr(args, "check_every", AppConfig.DEFAULT_CHECK_EVERY),
        jobs=getattr(args, "jobs", AppConfig.DEFAULT_JOBS),
        csv=args.csv,
        dot=getattr(args, "dot", None),
        replay=args.replay,
        baseline=getattr(args, "baseline", "none"),
    )
