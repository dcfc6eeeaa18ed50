"""Тесты дерева с таймерами: политика таймеров, раскрутка insert/delete, переподвешивание"""
from fractions import Fraction

import pytest

from app.core import (
    TimerTree,
    apply_rebuild,
    decrement_and_mark,
    get_min,
    parse_k,
    timer_reset_value,
)
from app.dot import to_dot
from app.metrics import Decrement, MetricsSink, RebuildTriggered
from app.models import Direction, TreeNode, UpdateContext
from app.utils.error_handler import InvalidRebalanceFraction, UsageError


def shape(node):
    """Вложенные кортежи (key, timer, timer_start, left, right)"""
    if node is None:
        return None
    return (node.key, node.timer, node.timer_start, shape(node.left), shape(node.right))


pytestmark = pytest.mark.unit


@pytest.mark.parametrize(
    "n, k_num, k_den, expected",
    [
        (1, 1, 2, 1),
        (10, 1, 2, 5),
        (7, 1, 4, 1),
        (15, 3, 4, 11),
        (8, 1, 4, 2),
    ],
)
def test_timer_reset_value(n, k_num, k_den, expected):
    assert timer_reset_value(n, k_num, k_den) == expected


def test_insert_into_empty_tree(tree):
    assert tree.insert(5) is True
    assert shape(tree.root) == (5, 1, 1, None, None)
    assert tree.size() == 1


def test_duplicate_insert_changes_nothing(make_tree, sink):
    tree = make_tree([5, 3, 8, 1], sink=sink)
    before = to_dot(tree.root)
    events_before = len(sink.events)

    assert tree.insert(5) is False
    assert tree.insert(1) is False

    assert to_dot(tree.root) == before
    assert len(sink.events) == events_before
    assert tree.size() == 4


def test_ascending_three_rebuilds_whole_tree(tree, sink):
    """Тест: k=1/2, 1,2,3 - на последней вставке обнуляются оба предка, побеждает корень"""
    for key in (1, 2, 3):
        assert tree.insert(key)

    assert shape(tree.root) == (2, 1, 1, (1, 1, 1, None, None), (3, 1, 1, None, None))
    assert tree.height() == 2
    # вставка 2 уже перестроила {1, 2}; вставка 3 перестраивает все дерево
    assert sink.triggers == [RebuildTriggered(2, 1, 1), RebuildTriggered(3, 1, 1)]
    assert sink.counters.total_decrements == 3


def test_insert_decrements_every_ancestor_once(make_balanced):
    sink = MetricsSink()
    tree = make_balanced(15, 3, 4, sink=sink)
    # путь 8 -> 12 -> 14 -> 15, таймеры 11, 5, 2, 1
    assert tree.insert(16)

    root = tree.root
    assert (root.key, root.timer, root.timer_start) == (8, 10, 11)
    assert (root.right.key, root.right.timer) == (12, 4)
    node14 = root.right.right
    assert (node14.key, node14.timer, node14.timer_start) == (14, 1, 2)
    # обнулился только 15: перестроено лишь {15, 16}, подвешено под 14
    assert shape(node14.right) == (15, 1, 1, None, (16, 1, 1, None, None))
    assert sink.counters.total_decrements == 4
    assert sink.triggers == [RebuildTriggered(2, 1, 4)]
    # нетронутая сторона сохраняет таймеры
    assert root.left.timer == root.left.timer_start == 5


def test_delete_from_empty_tree(tree):
    assert tree.delete(5) is False
    assert tree.root is None


def test_delete_only_key(tree):
    tree.insert(5)
    assert tree.delete(5) is True
    assert tree.root is None
    assert tree.size() == 0


def test_delete_root_of_balanced_three(tree, sink):
    for key in (1, 2, 3):
        tree.insert(key)
    triggers_before = len(sink.triggers)

    assert tree.delete(2) is True

    assert shape(tree.root) == (1, 1, 1, None, (3, 1, 1, None, None))
    assert sink.triggers[triggers_before:] == [RebuildTriggered(2, 1, 1)]


def test_delete_two_children_decrements_replaced_node_once(make_balanced):
    sink = MetricsSink()
    tree = make_balanced(15, 3, 4, sink=sink)

    assert tree.delete(12) is True

    replaced = tree.root.right
    assert (replaced.key, replaced.timer, replaced.timer_start) == (13, 4, 5)
    assert (replaced.right.key, replaced.right.timer) == (14, 1)
    assert replaced.right.left is None
    assert tree.root.timer == 10
    assert sink.counters.total_decrements == 3
    assert sink.triggers == []
    assert list(tree.in_order()) == [k for k in range(1, 16) if k != 12]


def test_delete_one_child_keeps_child_timer(make_balanced):
    tree = make_balanced(15, 3, 4)
    assert tree.delete(15)
    assert tree.delete(14)

    node12 = tree.root.right
    assert node12.timer == 3
    assert shape(node12.right) == (13, 1, 1, None, None)
    assert tree.root.timer == 9


def test_delete_missing_key_changes_nothing(make_tree):
    tree = make_tree(range(1, 20))
    before = to_dot(tree.root)
    assert tree.delete(100) is False
    assert tree.delete(0) is False
    assert to_dot(tree.root) == before


def test_contains(make_tree):
    assert TimerTree().contains(7) is False
    tree = make_tree([1, 2, 3])
    assert tree.contains(2) is True
    assert tree.contains(4) is False
    assert tree.insert(40) and tree.contains(40)


@pytest.mark.parametrize(
    "root, expected",
    [
        (TreeNode(5), 5),
        (TreeNode(4, left=TreeNode(2), right=TreeNode(6)), 2),
        (TreeNode(1, right=TreeNode(2, right=TreeNode(3))), 1),
    ],
)
def test_get_min(root, expected):
    assert get_min(root).key == expected


def test_decrement_without_reaching_zero():
    node = TreeNode(1, timer=3)
    ctx = UpdateContext()
    ctx.succeeded = True
    decrement_and_mark(node, ctx, depth=1)
    assert node.timer == 2
    assert ctx.rebuild_target is None


def test_decrement_to_zero_marks_target():
    node = TreeNode(1)
    ctx = UpdateContext()
    ctx.succeeded = True
    decrement_and_mark(node, ctx, depth=3)
    assert node.timer == 0
    assert ctx.rebuild_target is node
    assert ctx.target_depth == 3
    assert ctx.target_dir is Direction.ROOT


def test_shallower_zero_overrides_deeper_target():
    child = TreeNode(1)
    parent = TreeNode(2, left=child)
    ctx = UpdateContext()
    ctx.succeeded = True
    decrement_and_mark(child, ctx, depth=2)
    decrement_and_mark(parent, ctx, depth=1)
    assert ctx.rebuild_target is parent
    assert ctx.target_parent is None
    assert ctx.target_dir is Direction.ROOT


def test_parent_of_target_is_recorded():
    child = TreeNode(5)
    parent = TreeNode(2, timer=3, right=child)
    ctx = UpdateContext()
    ctx.succeeded = True
    decrement_and_mark(child, ctx, depth=2)
    decrement_and_mark(parent, ctx, depth=1)
    assert ctx.rebuild_target is child
    assert ctx.target_parent is parent
    assert ctx.target_dir is Direction.RIGHT


def test_decrement_is_recorded_in_sink(sink):
    ctx = UpdateContext()
    decrement_and_mark(TreeNode(1, timer=2), ctx, depth=1, sink=sink)
    assert sink.events == [Decrement()]
    assert sink.counters.total_decrements == 1


def test_apply_rebuild_on_whole_tree(sink):
    n1, n2, n3 = TreeNode(1), TreeNode(2), TreeNode(3)
    n1.right, n2.right = n2, n3
    n1.timer = 0
    tree = TimerTree(1, 2)
    tree.root, tree.count = n1, 3
    ctx = UpdateContext()
    ctx.mark_target(n1, depth=1)

    apply_rebuild(tree, ctx, sink)

    assert tree.root is n2
    assert shape(tree.root) == (2, 1, 1, (1, 1, 1, None, None), (3, 1, 1, None, None))
    assert sink.triggers == [RebuildTriggered(3, 1, 1)]


def test_apply_rebuild_relinks_left_child_only(sink):
    spine = TreeNode(1, right=TreeNode(2, right=TreeNode(3)))
    spine.timer = 0
    right = TreeNode(20, timer=2)
    root = TreeNode(10, timer=4, left=spine, right=right)
    tree = TimerTree(1, 2)
    tree.root, tree.count = root, 5
    ctx = UpdateContext()
    ctx.mark_target(spine, depth=2)
    ctx.target_parent, ctx.target_dir = root, Direction.LEFT

    apply_rebuild(tree, ctx, sink)

    assert tree.root is root
    assert root.timer == 4
    assert root.right is right and right.timer == 2
    assert shape(root.left) == (2, 1, 1, (1, 1, 1, None, None), (3, 1, 1, None, None))
    assert sink.triggers == [RebuildTriggered(3, 1, 2)]


def test_apply_rebuild_goes_through_rebuild(monkeypatch, sink):
    """Тест: перестройка цели делегируется app.rebuild.rebuild"""
    import app.core
    from app.rebuild import rebuild

    calls = []

    def spy(node, *args, **kwargs):
        calls.append(node.key)
        return rebuild(node, *args, **kwargs)

    monkeypatch.setattr(app.core, "rebuild", spy)
    tree = TimerTree(1, 2, sink=sink)
    for key in (1, 2, 3):
        tree.insert(key)

    assert calls == [1, 1]
    assert sink.triggers == [RebuildTriggered(2, 1, 1), RebuildTriggered(3, 1, 1)]


def test_rebuild_hook_sees_new_subtree():
    seen = []
    tree = TimerTree(1, 2, on_rebuild=lambda root, event: seen.append((root.key, event.subtree_size)))
    for key in (1, 2, 3):
        tree.insert(key)
    assert seen == [(1, 2), (2, 3)]


def test_size_height_in_order(make_tree, make_balanced):
    empty = TimerTree()
    assert (empty.size(), empty.height(), list(empty.in_order())) == (0, 0, [])

    single = make_tree([9])
    assert (single.size(), single.height()) == (1, 1)

    balanced = make_balanced(7)
    assert balanced.height() == 3
    assert list(balanced.in_order()) == list(range(1, 8))


def test_python_protocol(make_tree):
    tree = make_tree([3, 1, 2])
    assert len(tree) == 3
    assert 2 in tree and 7 not in tree
    assert list(tree) == [1, 2, 3]
    assert bool(tree) and not TimerTree()


@pytest.mark.parametrize("text, expected", [("1/2", (1, 2)), (" 3 / 4 ", (3, 4)), ("2/4", (2, 4))])
def test_parse_k(text, expected):
    assert parse_k(text) == expected


@pytest.mark.parametrize("text", ["5/3", "0/2", "1/1", "abc", "1/2/3", "-1/2", "0.5"])
def test_parse_k_rejects(text):
    with pytest.raises(InvalidRebalanceFraction):
        parse_k(text)


def test_bad_k_is_a_usage_error():
    with pytest.raises(UsageError):
        TimerTree(2, 1)


def test_from_fraction():
    assert TimerTree.from_fraction(Fraction(1, 3)).k == Fraction(1, 3)
    tree = TimerTree.from_fraction("3/4")
    assert (tree.k_num, tree.k_den) == (3, 4)
