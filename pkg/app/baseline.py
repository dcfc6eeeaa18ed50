"""Наивный BST без балансировки, база для bench.

Все итеративно: возрастающие вставки вытягивают дерево в линию длиной во все множество.
"""
from typing import Optional


class _Node:
    __slots__ = ("key", "left", "right")

    def __init__(self, key: int):
        self.key = key
        self.left: Optional["_Node"] = None
        self.right: Optional["_Node"] = None


class NaiveBST:
    def __init__(self):
        self.root: Optional[_Node] = None
        self.count = 0

    def insert(self, key: int) -> bool:
        if self.root is None:
            self.root = _Node(key)
            self.count += 1
            return True
        node = self.root
        while True:
            if key < node.key:
                if node.left is None:
                    node.left = _Node(key)
                    break
                node = node.left
            elif key > node.key:
                if node.right is None:
                    node.right = _Node(key)
                    break
                node = node.right
            else:
                return False
        self.count += 1
        return True

    def delete(self, key: int) -> bool:
        parent, node = None, self.root
        while node is not None and node.key != key:
            parent, node = node, (node.left if key < node.key else node.right)
        if node is None:
            return False

        if node.left is not None and node.right is not None:
            succ_parent, succ = node, node.right
            while succ.left is not None:
                succ_parent, succ = succ, succ.left
            node.key = succ.key
            parent, node = succ_parent, succ

        child = node.left if node.left is not None else node.right
        if parent is None:
            self.root = child
        elif parent.left is node:
            parent.left = child
        else:
            parent.right = child
        self.count -= 1
        return True

    def contains(self, key: int) -> bool:
        node = self.root
        while node is not None:
            if key == node.key:
                return True
            node = node.left if key < node.key else node.right
        return False

    def height(self) -> int:
        return level_stats(self.root)[0]

    def average_depth(self) -> float:
        height, depth_sum, count = level_stats(self.root)
        return depth_sum / count if count else 0.0


def level_stats(root) -> tuple:
    """(высота, сумма глубин, число узлов) обходом по уровням; глубина корня 1."""
    height = depth_sum = count = 0
    level = [root] if root is not None else []
    while level:
        height += 1
        depth_sum += height * len(level)
        count += len(level)
        level = [child for n in level for child in (n.left, n.right) if child is not None]
    return height, depth_sum, count
