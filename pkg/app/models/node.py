"""Узел дерева с обратным отсчетом до перестройки"""
from typing import Optional


def timer_reset_value(n: int, k_num: int, k_den: int) -> int:
    """max(1, floor(k * n)) при k = k_num / k_den, точно."""
    return max(1, (k_num * n) // k_den)


class TreeNode:
    """Один ключ упорядоченного множества.

    ``timer`` - сколько успешных обновлений осталось поддереву до перестройки;
    ``timer_start`` - значение при последней установке или сбросе.
    """
    __slots__ = ("key", "left", "right", "timer", "timer_start")

    def __init__(
        self,
        key: int,
        timer: int = 1,
        left: Optional["TreeNode"] = None,
        right: Optional["TreeNode"] = None,
    ):
        self.key = key
        self.left = left
        self.right = right
        self.timer = timer
        self.timer_start = timer

    def reset_timer(self, value: int) -> None:
        self.timer = value
        self.timer_start = value

    def __repr__(self) -> str:
        return f"TreeNode(key={self.key!r}, timer={self.timer}/{self.timer_start})"
