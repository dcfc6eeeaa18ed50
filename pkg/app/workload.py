"""Детерминированные последовательности операций.

Случайность берется только из SplitMix64, поэтому (name, n, seed, params)
дает одну и ту же последовательность на любой платформе и версии Python.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Tuple

from app.utils.error_handler import UnknownWorkload, UsageError

logger = logging.getLogger(__name__)

Op = Tuple[str, int]

OP_KINDS = ("insert", "delete", "contains")
MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: state += 0x9E3779B97F4A7C15, затем два раунда xor-shift-multiply."""

    GOLDEN = 0x9E3779B97F4A7C15
    MIX1 = 0xBF58476D1CE4E5B9
    MIX2 = 0x94D049BB133111EB

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + self.GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * self.MIX1) & MASK64
        z = ((z ^ (z >> 27)) * self.MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Почти равномерное целое из [0, bound) через multiply-shift."""
        return (self.next_u64() * bound) >> 64

    def chance(self, p: float) -> bool:
        # 53-битный порог: сравнение точное для любого double p
        return (self.next_u64() >> 11) < int(p * (1 << 53))


@dataclass
class Workload:
    name: str
    seed: int
    ops: List[Op] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.ops)

    def to_lines(self) -> List[str]:
        return [f"{op} {key}" for op, key in self.ops]

    @classmethod
    def from_lines(cls, lines: Iterable[str], name: str = "replay", seed: int = 0) -> "Workload":
        ops: List[Op] = []
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2 or parts[0] not in OP_KINDS:
                raise UsageError(f"Bad replay line {lineno}: {raw!r}", details={"line": lineno})
            try:
                ops.append((parts[0], int(parts[1])))
            except ValueError as e:
                raise UsageError(f"Bad key on replay line {lineno}: {raw!r}", details={"line": lineno}) from e
        return cls(name=name, seed=seed, ops=ops)


def _ascending(n: int, rng: SplitMix64, **_) -> List[Op]:
    return [("insert", key) for key in range(1, n + 1)]


def _descending(n: int, rng: SplitMix64, **_) -> List[Op]:
    return [("insert", key) for key in range(n, 0, -1)]


def _zigzag(n: int, rng: SplitMix64, **_) -> List[Op]:
    ops: List[Op] = []
    low, high = 1, n
    while low <= high:
        ops.append(("insert", low))
        low += 1
        if low <= high:
            ops.append(("insert", high))
            high -= 1
    return ops


def _random_insert(n: int, rng: SplitMix64, key_space: int, **_) -> List[Op]:
    return [("insert", rng.below(key_space) + 1) for _ in range(n)]


def _pop_random(live: List[int], rng: SplitMix64) -> int:
    i = rng.below(len(live))
    live[i], live[-1] = live[-1], live[i]
    return live.pop()


def _random_mixed(n: int, rng: SplitMix64, key_space: int, p_delete: float, **_) -> List[Op]:
    ops: List[Op] = []
    live: List[int] = []
    present = set()
    for _ in range(n):
        if live and rng.chance(p_delete):
            key = _pop_random(live, rng)
            present.discard(key)
            ops.append(("delete", key))
            continue
        key = rng.below(key_space) + 1
        if key not in present:
            present.add(key)
            live.append(key)
        ops.append(("insert", key))
    return ops


def _churn(n: int, rng: SplitMix64, key_space: int, churn_pairs: int, **_) -> List[Op]:
    ops: List[Op] = [("insert", key) for key in range(1, n + 1)]
    live = list(range(1, n + 1))
    present = set(live)
    for _ in range(churn_pairs):
        if live:
            key = _pop_random(live, rng)
            present.discard(key)
            ops.append(("delete", key))
        key = rng.below(key_space) + 1
        if key not in present:
            present.add(key)
            live.append(key)
        ops.append(("insert", key))
    return ops


GENERATORS: Dict[str, Callable[..., List[Op]]] = {
    "ascending": _ascending,
    "descending": _descending,
    "zigzag": _zigzag,
    "random-insert": _random_insert,
    "random-mixed": _random_mixed,
    "churn": _churn,
}

WORKLOAD_NAMES = tuple(GENERATORS)


def gen(
    name: str,
    n: int,
    seed: int = 1,
    *,
    key_space: int = 0,
    p_delete: float = 0.4,
    churn_pairs: int = -1,
) -> Workload:
    """Строит нагрузку по имени.

    По умолчанию ``key_space`` = 4n, ``churn_pairs`` = n.
    """
    generator = GENERATORS.get(name)
    if generator is None:
        raise UnknownWorkload(
            f"Unknown workload: {name}. Must be one of {', '.join(WORKLOAD_NAMES)}",
            details={"workload": name},
        )
    if n < 0:
        raise UsageError(f"n must be non-negative, got {n}")
    if not 0.0 <= p_delete <= 1.0:
        raise UsageError(f"p_delete must be within [0, 1], got {p_delete}")

    ops = generator(
        n,
        SplitMix64(seed),
        key_space=key_space or max(1, 4 * n),
        p_delete=p_delete,
        churn_pairs=n if churn_pairs < 0 else churn_pairs,
    )
    logger.debug("Generated workload %s: n=%d seed=%d ops=%d", name, n, seed, len(ops))
    return Workload(name=name, seed=seed, ops=ops)
