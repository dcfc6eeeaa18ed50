"""Подкоманды: run, bench, demo"""
from cli.commands import bench, demo, run

__all__ = ["bench", "demo", "run"]
