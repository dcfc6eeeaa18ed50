"""Прогон нагрузок, сравнение с наивным BST и демо"""
import csv
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, List, Optional, Sequence, TextIO, Tuple

from app.baseline import NaiveBST, level_stats
from app.core import TimerTree
from app.dot import render_text, to_dot
from app.metrics import MetricsSink, RebuildTriggered, check_aggregate_amortized, check_credit_bound
from app.models import TreeNode
from app.schemas import (
    BENCH_HEADER,
    CSV_HEADER,
    BenchRow,
    CountersSchema,
    RunConfig,
    RunReport,
    StepSample,
)
from app.utils.error_handler import InvariantViolation
from app.validation import (
    OracleModel,
    check_bst,
    check_children_halved,
    check_height_bound,
    check_perfectly_balanced,
    check_timer_reset_law,
    check_timers,
    height_bound,
)
from app.workload import Workload, gen

logger = logging.getLogger(__name__)

UPDATE_OPS = ("insert", "delete")


class RebuildAudit:
    """Хук on_rebuild: проверяет каждое только что перестроенное поддерево."""

    def __init__(self, k_num: int, k_den: int):
        self.k_num = k_num
        self.k_den = k_den
        self.failure: Optional[str] = None
        self.last_size = 0

    def __call__(self, root: TreeNode, event: RebuildTriggered) -> None:
        self.last_size = event.subtree_size
        if self.failure is not None:
            return
        checks: Sequence[Tuple[str, Callable[[], bool]]] = (
            ("credit_bound", lambda: check_credit_bound(event, self.k_num, self.k_den)),
            ("perfect_balance", lambda: check_perfectly_balanced(root)),
            ("timer_reset_law", lambda: check_timer_reset_law(root, self.k_num, self.k_den)),
            ("children_halved", lambda: check_children_halved(root)),
        )
        for name, check in checks:
            if not check():
                logger.warning("Rebuild check %s failed for %s", name, event)
                self.failure = name
                return


def apply_op(structure, op: str, key: int) -> bool:
    if op == "insert":
        return structure.insert(key)
    if op == "delete":
        return structure.delete(key)
    return structure.contains(key)


def _violation(tree: TimerTree, check: str, step: int) -> InvariantViolation:
    logger.warning("Invariant %s violated at step %d (size=%d)", check, step, tree.count)
    return InvariantViolation(check, step, dot=to_dot(tree.root))


def full_check(tree: TimerTree, model: OracleModel) -> Optional[str]:
    """Имя первого нарушенного инварианта между операциями или None."""
    if not check_bst(tree.root):
        return "bst_order"
    if not check_timers(tree.root):
        return "timer_range"
    if not check_height_bound(tree):
        return "height_bound"
    if not model.equals(tree):
        return "oracle_equal"
    return None


def run_workload(
    workload: Workload,
    k_num: int,
    k_den: int,
    check_every: int = 0,
    record_steps: bool = False,
    dot_path: Optional[Path] = None,
) -> RunReport:
    """Прогоняет ``workload`` на новом дереве рядом с оракулом, проверяя по ходу.

    На каждом шаге результат сверяется с оракулом, а каждая перестройка
    проверяется хуком. Каждые ``check_every`` шагов (0 - только в конце)
    запускается полный набор проверок. Высота снимается на проверяемых шагах,
    на каждом шаге при ``record_steps`` и в конце.
    """
    sink = MetricsSink(keep_log=False)
    audit = RebuildAudit(k_num, k_den)
    tree = TimerTree(k_num, k_den, sink=sink, on_rebuild=audit)
    model = OracleModel()
    counters = sink.counters

    samples: List[StepSample] = []
    max_height = 0
    max_bound = 0
    logger.info(
        "Run started: %s n_ops=%d seed=%d k=%d/%d check_every=%d",
        workload.name, len(workload), workload.seed, k_num, k_den, check_every,
    )

    for step, (op, key) in enumerate(workload.ops, start=1):
        checking = check_every > 0 and step % check_every == 0
        if checking:
            dot_before = to_dot(tree.root)
            height_before = tree.height()
            decrements_before = counters.total_decrements

        audit.last_size = 0
        result = apply_op(tree, op, key)
        if result != model.apply(op, key):
            raise _violation(tree, "oracle_result", step)
        if audit.failure is not None:
            raise _violation(tree, audit.failure, step)

        if checking:
            if (not result or op not in UPDATE_OPS) and to_dot(tree.root) != dot_before:
                raise _violation(tree, "unchanged_on_failure", step)
            if result and op in UPDATE_OPS and counters.total_decrements - decrements_before > height_before:
                raise _violation(tree, "decrements_within_height", step)
            failed = full_check(tree, model)
            if failed is not None:
                raise _violation(tree, failed, step)

        if checking or record_steps:
            height = tree.height()
            bound = height_bound(tree.count, k_num, k_den) if tree.count else 0
            max_height = max(max_height, height)
            max_bound = max(max_bound, bound)
            if record_steps:
                samples.append(StepSample(
                    step=step,
                    op=op,
                    key=key,
                    success=result,
                    size=tree.count,
                    height=height,
                    height_bound=bound,
                    rebuild_size=audit.last_size,
                    total_decrements=counters.total_decrements,
                    total_rebuilt_nodes=counters.total_rebuilt_nodes,
                ))

    final_step = len(workload)
    failed = full_check(tree, model)
    if failed is not None:
        raise _violation(tree, failed, final_step)
    if not check_aggregate_amortized(counters, k_num, k_den):
        raise _violation(tree, "aggregate_amortized", final_step)

    final_height = tree.height()
    final_bound = height_bound(tree.count, k_num, k_den) if tree.count else 0
    if dot_path is not None:
        dot_path.write_text(to_dot(tree.root))

    report = RunReport(
        workload=workload.name,
        seed=workload.seed,
        k=f"{k_num}/{k_den}",
        steps=final_step,
        final_size=tree.count,
        max_height=max(max_height, final_height),
        height_bound_final=final_bound,
        max_height_bound=max(max_bound, final_bound),
        counters=CountersSchema.model_validate(sink.snapshot()),
        samples=samples,
    )
    logger.info(
        "Run finished: %s k=%s size=%d max_height=%d rebuilds=%d",
        report.workload, report.k, report.final_size, report.max_height, report.counters.total_rebuilds,
    )
    return report


def write_csv(path: Path, header: Iterable[str], rows: Iterable[Tuple]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _suffixed(path: Optional[Path], k: Tuple[int, int], seed: int, many: bool) -> Optional[Path]:
    if path is None or not many:
        return path
    return path.with_name(f"{path.stem}_k{k[0]}-{k[1]}_s{seed}{path.suffix}")


def load_workload(config: RunConfig, seed: int) -> Workload:
    if config.replay is not None:
        with config.replay.open() as fh:
            return Workload.from_lines(fh, name=config.replay.stem, seed=seed)
    return gen(
        config.workload,
        config.n,
        seed,
        key_space=config.key_space,
        p_delete=config.p_delete,
        churn_pairs=config.churn_pairs,
    )


def run_many(config: RunConfig) -> List[RunReport]:
    """Запускает каждую пару (k, seed) в пуле из ``config.jobs`` потоков.

    У каждого прогона свое дерево, изменяемого общего состояния нет.
    """
    pairs = [(k, seed) for k in config.fractions() for seed in config.seeds]
    many = len(pairs) > 1

    def job(pair: Tuple[Tuple[int, int], int]) -> RunReport:
        (k_num, k_den), seed = pair
        csv_path = _suffixed(config.csv, (k_num, k_den), seed, many)
        dot_path = _suffixed(config.dot, (k_num, k_den), seed, many)
        try:
            report = run_workload(
                load_workload(config, seed),
                k_num,
                k_den,
                check_every=config.check_every,
                record_steps=csv_path is not None,
                dot_path=dot_path,
            )
        except InvariantViolation as e:
            if dot_path is not None:
                dot_path.write_text(e.dot)
            raise
        if csv_path is not None:
            write_csv(csv_path, CSV_HEADER, (sample.csv_row() for sample in report.samples))
        return report

    with ThreadPoolExecutor(max_workers=config.jobs) as pool:
        return list(pool.map(job, pairs))


def _timed(structure, workload: Workload) -> float:
    started = time.perf_counter()
    for op, key in workload.ops:
        apply_op(structure, op, key)
    return time.perf_counter() - started


def bench_workload(workload: Workload, k_num: int, k_den: int, baseline: str = "none") -> List[BenchRow]:
    """Дерево с таймерами (и, по желанию, наивный BST) на одной последовательности."""
    k = f"{k_num}/{k_den}"
    sink = MetricsSink(keep_log=False)
    tree = TimerTree(k_num, k_den, sink=sink)
    seconds = _timed(tree, workload)
    height, depth_sum, count = level_stats(tree.root)
    bound = height_bound(count, k_num, k_den) if count else 0
    rows = [BenchRow(
        structure="timer-tree",
        workload=workload.name,
        n=len(workload),
        k=k,
        size=count,
        height=height,
        height_bound=bound,
        avg_depth=depth_sum / count if count else 0.0,
        wall_seconds=seconds,
        rebuilds=sink.counters.total_rebuilds,
        rebuilt_nodes_per_update=float(sink.amortized_rebuild_cost()),
    )]

    if baseline == "naive":
        naive = NaiveBST()
        seconds = _timed(naive, workload)
        rows.append(BenchRow(
            structure="naive-bst",
            workload=workload.name,
            n=len(workload),
            k=k,
            size=naive.count,
            height=naive.height(),
            height_bound=bound,
            avg_depth=naive.average_depth(),
            wall_seconds=seconds,
        ))

    logger.info("Bench finished: %s", ", ".join(f"{row.structure} h={row.height}" for row in rows))
    return rows


def bench_many(config: RunConfig) -> List[BenchRow]:
    rows: List[BenchRow] = []
    for k_num, k_den in config.fractions():
        for seed in config.seeds:
            rows.extend(bench_workload(load_workload(config, seed), k_num, k_den, config.baseline))
    if config.csv is not None:
        write_csv(
            config.csv,
            BENCH_HEADER,
            (tuple(row.model_dump().values()) for row in rows),
        )
    return rows


def format_bench(rows: List[BenchRow]) -> str:
    header = f"{'structure':<12} {'k':>5} {'size':>7} {'height':>7} {'bound':>6} {'avg_depth':>9} {'seconds':>9} {'rebuilds':>9}"
    lines = [header, "-" * len(header)]
    for row in rows:
        lines.append(
            f"{row.structure:<12} {row.k:>5} {row.size:>7} {row.height:>7} {row.height_bound:>6} "
            f"{row.avg_depth:>9.2f} {row.wall_seconds:>9.4f} {row.rebuilds:>9}"
        )
    return "\n".join(lines) + "\n"


def demo_trace(n: int, k_num: int, k_den: int, out: TextIO) -> TimerTree:
    """Вставляет 1..n по порядку и печатает дерево с таймерами после каждого шага."""
    fired: List[Tuple[TreeNode, RebuildTriggered]] = []
    tree = TimerTree(k_num, k_den, on_rebuild=lambda root, event: fired.append((root, event)))

    out.write(f"k = {k_num}/{k_den}, ascending inserts 1..{n}\n")
    for key in range(1, n + 1):
        fired.clear()
        tree.insert(key)
        out.write(f"\ninsert {key}")
        marked = None
        if fired:
            root, event = fired[-1]
            marked = root.key
            out.write(f"  -> rebuilt subtree of size {event.subtree_size} at depth {event.depth}")
        out.write("\n")
        out.write(render_text(tree.root, marked_key=marked))
    return tree
