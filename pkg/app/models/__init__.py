"""Модели дерева"""
from app.models.node import TreeNode, timer_reset_value
from app.models.context import Direction, UpdateContext

__all__ = ["TreeNode", "Direction", "UpdateContext", "timer_reset_value"]
