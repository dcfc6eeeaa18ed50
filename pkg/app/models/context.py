"""Рабочее состояние одной операции insert/delete"""
from enum import Enum
from typing import Optional

from app.models.node import TreeNode


class Direction(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    ROOT = "root"


class UpdateContext:
    """Заполняется при раскрутке рекурсии, один раз читается деревом.

    Если ``rebuild_target`` задан, а ``target_parent`` равен None, цель -
    все дерево и ``target_dir`` равен ROOT.
    """
    __slots__ = ("succeeded", "rebuild_target", "target_parent", "target_dir", "target_depth")

    def __init__(self):
        self.succeeded: bool = False
        self.rebuild_target: Optional[TreeNode] = None
        self.target_parent: Optional[TreeNode] = None
        self.target_dir: Direction = Direction.ROOT
        self.target_depth: int = 0

    def mark_target(self, node: TreeNode, depth: int) -> None:
        # более высокий узел вытесняет записанную ранее глубокую цель
        self.rebuild_target = node
        self.target_parent = None
        self.target_dir = Direction.ROOT
        self.target_depth = depth
