"""Выгрузка в Graphviz DOT и текстовый рендер небольших деревьев.

Картинка из дампа:

    dot -Tpng -O tree.gv
"""
from typing import List, Optional

from app.models import TreeNode


def to_dot(root: Optional[TreeNode], name: str = "timer_tree") -> str:
    """DOT в прямом порядке обхода; одинаковые деревья дают побайтово одинаковый вывод."""
    lines = [f"digraph {name} {{", "    node [shape=box];"]
    stack = [root] if root is not None else []
    while stack:
        node = stack.pop()
        lines.append(f'    "{node.key}" [label="{node.key}\\nt={node.timer}/{node.timer_start}"];')
        for child, label in ((node.left, "L"), (node.right, "R")):
            if child is not None:
                lines.append(f'    "{node.key}" -> "{child.key}" [label="{label}"];')
        # правый кладем первым, чтобы левое поддерево вышло раньше
        for child in (node.right, node.left):
            if child is not None:
                stack.append(child)
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_text(root: Optional[TreeNode], marked_key: Optional[int] = None) -> str:
    """Дерево на боку: правое поддерево сверху, по строке ``key t=timer/start`` на узел."""
    if root is None:
        return "(empty)\n"
    lines: List[str] = []
    stack = [(root, 0, False)]
    while stack:
        node, depth, expanded = stack.pop()
        if node is None:
            continue
        if expanded:
            mark = " *" if node.key == marked_key else ""
            lines.append(f"{'    ' * depth}{node.key} t={node.timer}/{node.timer_start}{mark}")
            continue
        stack.append((node.left, depth + 1, False))
        stack.append((node, depth, True))
        stack.append((node.right, depth + 1, False))
    return "\n".join(lines) + "\n"
