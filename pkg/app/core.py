"""Упорядоченное множество, которое держат в балансе таймеры перестройки в узлах.

Ни критерия баланса, ни поворотов: каждая успешная вставка или удаление
уменьшает таймеры на пути поиска, а поддерево самого верхнего узла с нулевым
таймером перестраивается идеально сбалансированным.
"""
import logging
import re
from fractions import Fraction
from typing import Callable, Iterator, Optional, Tuple, Union

from app.metrics import MetricsSink, RebuildTriggered
from app.models import Direction, TreeNode, UpdateContext, timer_reset_value
from app.rebuild import NodeArray, rebuild
from app.utils.error_handler import InvalidRebalanceFraction

logger = logging.getLogger(__name__)

__all__ = [
    "TimerTree",
    "timer_reset_value",
    "parse_k",
    "get_min",
    "decrement_and_mark",
    "insert_rec",
    "delete_rec",
    "apply_rebuild",
    "node_height",
    "iter_keys",
]

RebuildHook = Callable[[TreeNode, RebuildTriggered], None]

_FRACTION_RE = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


def validate_k(k_num: int, k_den: int) -> None:
    if not (0 < k_num < k_den):
        raise InvalidRebalanceFraction(
            f"k must satisfy 0 < NUM < DEN, got {k_num}/{k_den}",
            details={"k_num": k_num, "k_den": k_den},
        )


def parse_k(text: str) -> Tuple[int, int]:
    """Разбирает ``"NUM/DEN"`` в точную пару; дробь не сокращается."""
    match = _FRACTION_RE.match(text)
    if match is None:
        raise InvalidRebalanceFraction(f"k must look like NUM/DEN, got {text!r}", details={"k": text})
    k_num, k_den = int(match.group(1)), int(match.group(2))
    validate_k(k_num, k_den)
    return k_num, k_den


def get_min(node: TreeNode) -> TreeNode:
    while node.left is not None:
        node = node.left
    return node


def node_height(node: Optional[TreeNode]) -> int:
    """Число узлов на самом длинном пути вниз; 0 для пустого поддерева."""
    height = 0
    level = [node] if node is not None else []
    while level:
        height += 1
        level = [child for n in level for child in (n.left, n.right) if child is not None]
    return height


def iter_keys(node: Optional[TreeNode]) -> Iterator[int]:
    stack = []
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            node = node.left
        node = stack.pop()
        yield node.key
        node = node.right


def decrement_and_mark(
    node: TreeNode,
    ctx: UpdateContext,
    depth: int,
    sink: Optional[MetricsSink] = None,
) -> None:
    """Списывает единицу таймера ``node`` на обратном ходе рекурсии.

    Раскрутка идет от глубоких кадров к корню, поэтому последний обнулившийся
    узел - самый верхний, он и становится целью.
    """
    node.timer -= 1
    if sink is not None:
        sink.record_decrement()

    if node.timer == 0:
        ctx.mark_target(node, depth)
    elif ctx.rebuild_target is not None and ctx.target_parent is None:
        if node.left is ctx.rebuild_target:
            ctx.target_parent = node
            ctx.target_dir = Direction.LEFT
        elif node.right is ctx.rebuild_target:
            ctx.target_parent = node
            ctx.target_dir = Direction.RIGHT


def insert_rec(
    node: Optional[TreeNode],
    key: int,
    ctx: UpdateContext,
    depth: int = 1,
    sink: Optional[MetricsSink] = None,
) -> TreeNode:
    if node is None:
        ctx.succeeded = True
        return TreeNode(key)
    elif key < node.key:
        node.left = insert_rec(node.left, key, ctx, depth + 1, sink)
    elif key > node.key:
        node.right = insert_rec(node.right, key, ctx, depth + 1, sink)
    else:
        ctx.succeeded = False
        return node

    if ctx.succeeded:
        decrement_and_mark(node, ctx, depth, sink)
    return node


def delete_rec(
    node: Optional[TreeNode],
    key: int,
    ctx: UpdateContext,
    depth: int = 1,
    sink: Optional[MetricsSink] = None,
) -> Optional[TreeNode]:
    if node is None:
        ctx.succeeded = False
        return None
    elif key < node.key:
        node.left = delete_rec(node.left, key, ctx, depth + 1, sink)
    elif key > node.key:
        node.right = delete_rec(node.right, key, ctx, depth + 1, sink)
    elif node.left is not None and node.right is not None:
        # забираем ключ преемника, сам преемник удаляется ниже
        node.key = get_min(node.right).key
        node.right = delete_rec(node.right, node.key, ctx, depth + 1, sink)
    else:
        ctx.succeeded = True
        return node.left if node.left is not None else node.right

    if ctx.succeeded:
        decrement_and_mark(node, ctx, depth, sink)
    return node


def apply_rebuild(tree: "TimerTree", ctx: UpdateContext, sink: Optional[MetricsSink] = None) -> None:
    """Перестраивает поддерево ``ctx.rebuild_target`` и подвешивает его на место."""
    target = ctx.rebuild_target
    timer0 = target.timer_start

    flattened: NodeArray = []
    new_root = rebuild(target, tree.k_num, tree.k_den, sink, array=flattened)
    size = len(flattened)
    if sink is not None:
        event = sink.record_trigger(size, timer0, ctx.target_depth)
    else:
        event = RebuildTriggered(size, timer0, ctx.target_depth)

    if ctx.target_dir is Direction.ROOT:
        tree.root = new_root
    elif ctx.target_dir is Direction.LEFT:
        ctx.target_parent.left = new_root
    else:
        ctx.target_parent.right = new_root

    logger.debug(
        "Rebuilt subtree of size %d at depth %d (timer0=%d, dir=%s)",
        size, ctx.target_depth, timer0, ctx.target_dir.value,
    )
    if tree.on_rebuild is not None:
        tree.on_rebuild(new_root, event)


class TimerTree:
    """Упорядоченное множество уникальных ключей с плановыми частичными перестройками.

    Конкурентные изменения не поддерживаются. Чтение из нескольких потоков
    допустимо, пока не идет обновление.
    """

    def __init__(
        self,
        k_num: int = 1,
        k_den: int = 2,
        sink: Optional[MetricsSink] = None,
        on_rebuild: Optional[RebuildHook] = None,
    ):
        validate_k(k_num, k_den)
        self.root: Optional[TreeNode] = None
        self.k_num = k_num
        self.k_den = k_den
        self.count = 0
        self.sink = sink
        self.on_rebuild = on_rebuild

    @classmethod
    def from_fraction(cls, k: Union[str, Fraction], **kwargs) -> "TimerTree":
        if isinstance(k, Fraction):
            return cls(k.numerator, k.denominator, **kwargs)
        k_num, k_den = parse_k(k)
        return cls(k_num, k_den, **kwargs)

    @property
    def k(self) -> Fraction:
        return Fraction(self.k_num, self.k_den)

    def insert(self, key: int) -> bool:
        ctx = UpdateContext()
        self.root = insert_rec(self.root, key, ctx, 1, self.sink)
        return self._finish_update(ctx, +1)

    def delete(self, key: int) -> bool:
        ctx = UpdateContext()
        self.root = delete_rec(self.root, key, ctx, 1, self.sink)
        return self._finish_update(ctx, -1)

    def _finish_update(self, ctx: UpdateContext, delta: int) -> bool:
        if not ctx.succeeded:
            return False
        self.count += delta
        if self.sink is not None:
            self.sink.record_update()
        if ctx.rebuild_target is not None:
            apply_rebuild(self, ctx, self.sink)
        return True

    def contains(self, key: int) -> bool:
        node = self.root
        while node is not None:
            if key < node.key:
                node = node.left
            elif key > node.key:
                node = node.right
            else:
                return True
        return False

    def size(self) -> int:
        return self.count

    def height(self) -> int:
        return node_height(self.root)

    def in_order(self) -> Iterator[int]:
        return iter_keys(self.root)

    def __len__(self) -> int:
        return self.count

    def __bool__(self) -> bool:
        return self.count > 0

    def __contains__(self, key: object) -> bool:
        return self.contains(key)  # type: ignore[arg-type]

    def __iter__(self) -> Iterator[int]:
        return iter_keys(self.root)

    def __repr__(self) -> str:
        return f"TimerTree(k={self.k_num}/{self.k_den}, size={self.count})"
