from pathlib import Path
import sys

_parent_dir = str(Path(__file__).resolve().parent.parent)
if _parent_dir not in sys.path:
    sys.path.insert(0, _parent_dir)

import pytest

from app.core import TimerTree
from app.metrics import MetricsSink


@pytest.fixture
def sink() -> MetricsSink:
    """Пустой sink с полным журналом событий"""
    return MetricsSink()


@pytest.fixture
def tree(sink) -> TimerTree:
    """Дерево с k = 1/2 и подключенным sink"""
    return TimerTree(1, 2, sink=sink)


@pytest.fixture
def make_tree():
    """Фабрика деревьев: make_tree(keys, k_num=1, k_den=2)"""
    def factory(keys=(), k_num: int = 1, k_den: int = 2, sink=None) -> TimerTree:
        tree = TimerTree(k_num, k_den, sink=sink)
        for key in keys:
            tree.insert(key)
        return tree

    return factory


@pytest.fixture
def make_balanced():
    """Идеально сбалансированное дерево на ключах 1..n со свежими таймерами"""
    from app.models import TreeNode
    from app.rebuild import build_tree

    def factory(n: int, k_num: int = 1, k_den: int = 2, sink=None) -> TimerTree:
        nodes = [TreeNode(key) for key in range(1, n + 1)]
        tree = TimerTree(k_num, k_den, sink=sink)
        tree.root = build_tree(nodes, 0, n - 1, k_num, k_den)
        tree.count = n
        return tree

    return factory
