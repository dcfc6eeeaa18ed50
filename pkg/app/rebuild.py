"""Частичная перестройка: поддерево сплющивается по порядку и собирается идеально сбалансированным.

Узлы переподвешиваются, а не копируются. Каждый узел получает новый таймер
по размеру диапазона, который он возглавляет.
"""
from typing import List, Optional

from app.metrics import MetricsSink
from app.models import TreeNode, timer_reset_value

NodeArray = List[TreeNode]


def copy_to_array(node: Optional[TreeNode], array: NodeArray) -> None:
    """Дописывает узлы поддерева в ``array`` по возрастанию ключей."""
    if node is not None:
        copy_to_array(node.left, array)
        array.append(node)
        copy_to_array(node.right, array)


def build_tree(
    array: NodeArray,
    begin: int,
    end: int,
    k_num: int,
    k_den: int,
    sink: Optional[MetricsSink] = None,
) -> Optional[TreeNode]:
    """Корень диапазона array[begin..end] включительно - нижняя медиана."""
    if begin > end:
        return None

    m = (begin + end) // 2
    root = array[m]
    root.left = build_tree(array, begin, m - 1, k_num, k_den, sink)
    root.right = build_tree(array, m + 1, end, k_num, k_den, sink)

    size = end - begin + 1
    timer = timer_reset_value(size, k_num, k_den)
    root.reset_timer(timer)
    if sink is not None:
        sink.record_reset(size, timer)
    return root


def rebuild(
    node: TreeNode,
    k_num: int,
    k_den: int,
    sink: Optional[MetricsSink] = None,
    array: Optional[NodeArray] = None,
) -> TreeNode:
    """Те же узлы, собранные идеально сбалансированно, с новыми таймерами.

    Если передан пустой ``array``, в нем остаются узлы по порядку ключей:
    вызывающему так доступен размер перестроенного поддерева.
    """
    if array is None:
        array = []
    copy_to_array(node, array)
    return build_tree(array, 0, len(array) - 1, k_num, k_den, sink)
