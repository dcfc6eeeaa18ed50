"""Структурные проверки и оракул на отсортированном списке.

Каждая проверка - O(n) по неизменяемому в этот момент дереву и возвращает bool;
что считать отказом, решает вызывающий.
"""
from bisect import bisect_left
from fractions import Fraction
from typing import TYPE_CHECKING, Dict, Iterator, List, Optional

from app.core import iter_keys, node_height
from app.metrics import credit_multiplier
from app.models import TreeNode, timer_reset_value

if TYPE_CHECKING:
    from app.core import TimerTree


def _postorder(node: Optional[TreeNode]) -> Iterator[TreeNode]:
    stack: List[TreeNode] = []
    last: Optional[TreeNode] = None
    while stack or node is not None:
        if node is not None:
            stack.append(node)
            node = node.left
            continue
        peek = stack[-1]
        if peek.right is not None and last is not peek.right:
            node = peek.right
        else:
            last = stack.pop()
            yield last


def subtree_sizes(node: Optional[TreeNode]) -> Dict[int, int]:
    """Размер каждого поддерева по ``id`` его корня."""
    sizes: Dict[int, int] = {}
    for n in _postorder(node):
        sizes[id(n)] = (
            1
            + (sizes[id(n.left)] if n.left is not None else 0)
            + (sizes[id(n.right)] if n.right is not None else 0)
        )
    return sizes


def subtree_size(node: Optional[TreeNode]) -> int:
    return sum(1 for _ in _postorder(node))


def check_bst(node: Optional[TreeNode]) -> bool:
    previous = None
    for key in iter_keys(node):
        if previous is not None and not previous < key:
            return False
        previous = key
    return True


def check_perfectly_balanced(node: Optional[TreeNode]) -> bool:
    sizes = subtree_sizes(node)
    for n in _postorder(node):
        left = sizes[id(n.left)] if n.left is not None else 0
        right = sizes[id(n.right)] if n.right is not None else 0
        if abs(left - right) > 1:
            return False
    return True


def check_timers(node: Optional[TreeNode]) -> bool:
    """1 <= timer <= timer_start во всех узлах."""
    return all(1 <= n.timer <= n.timer_start for n in _postorder(node))


def height_bound(n: int, k_num: int, k_den: int) -> int:
    """floor(log_b(n / (2 - 2k))) + 1 при b = (2 + 2k) / (1 + 2k), точно.

    При k = p/q: b = (2q + 2p) / (q + 2p) и n / (2 - 2k) = n*q / (2q - 2p).
    Наибольшее d с b**d <= n*q / (2q - 2p) ищется сравнением целых степеней,
    округления на границах нет.
    """
    p, q = k_num, k_den
    b_num, b_den = 2 * q + 2 * p, q + 2 * p
    x_num, x_den = n * q, 2 * q - 2 * p
    if x_num < x_den:
        return 1

    d = 0
    pow_num, pow_den = b_num, b_den
    # b**(d+1) <= x  <=>  b_num**(d+1) * x_den <= x_num * b_den**(d+1)
    while pow_num * x_den <= x_num * pow_den:
        d += 1
        pow_num *= b_num
        pow_den *= b_den
    return d + 1


def amortized_ceiling(n: int, k_num: int, k_den: int) -> Fraction:
    """(2/k + 1) * height_bound(n, k), бюджет перестроек на одно обновление."""
    return credit_multiplier(k_num, k_den) * height_bound(n, k_num, k_den)


def check_height_bound(tree: "TimerTree") -> bool:
    """Ребер на самом длинном пути <= height_bound(size, k).

    Оценка считает ребра (глубина корня 0, у идеально сбалансированного
    дерева высота floor(log2 n)); в узлах она не выполняется уже для
    двухузлового дерева при k = 1/4.
    """
    if tree.root is None:
        return True
    return node_height(tree.root) - 1 <= height_bound(tree.count, tree.k_num, tree.k_den)


def check_timer_reset_law(node: Optional[TreeNode], k_num: int, k_den: int) -> bool:
    """Сразу после перестройки: timer == timer_start == значение сброса для своего размера.

    У поддеревьев меньше 2/k таймер равен 1: следующее обновление через них
    снова их перестраивает.
    """
    sizes = subtree_sizes(node)
    for n in _postorder(node):
        size = sizes[id(n)]
        expected = timer_reset_value(size, k_num, k_den)
        if n.timer != expected or n.timer_start != expected:
            return False
        if size * k_num < 2 * k_den and n.timer != 1:
            return False
    return True


def check_children_halved(node: Optional[TreeNode]) -> bool:
    """У идеально сбалансированного корня в каждом ребенке не больше floor(n/2) ключей."""
    if node is None:
        return True
    sizes = subtree_sizes(node)
    half = sizes[id(node)] // 2
    return all(sizes[id(child)] <= half for child in (node.left, node.right) if child is not None)


class OracleModel:
    """Отсортированные уникальные ключи, эталон для сравнения черным ящиком."""

    def __init__(self):
        self.keys: List[int] = []

    def apply(self, op: str, key: int) -> bool:
        i = bisect_left(self.keys, key)
        present = i < len(self.keys) and self.keys[i] == key
        if op == "insert":
            if present:
                return False
            self.keys.insert(i, key)
            return True
        if op == "delete":
            if not present:
                return False
            del self.keys[i]
            return True
        if op == "contains":
            return present
        raise ValueError(f"Unknown operation: {op}")

    def equals(self, tree: "TimerTree") -> bool:
        return len(self.keys) == tree.count and list(tree.in_order()) == self.keys


def oracle_apply(model: OracleModel, op: str, key: int) -> bool:
    return model.apply(op, key)


def oracle_equal(model: OracleModel, tree: "TimerTree") -> bool:
    return model.equals(tree)
