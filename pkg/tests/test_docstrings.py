"""Тест: docstring'и пакетов написаны по-русски"""
import ast
import re
from pathlib import Path

import pytest

pytestmark = pytest.mark.unit

ROOT = Path(__file__).resolve().parent.parent
CYRILLIC = re.compile(r"[а-яА-ЯёЁ]")
NODES = (ast.Module, ast.ClassDef, ast.FunctionDef, ast.AsyncFunctionDef)


def _sources():
    for package in ("app", "cli", "settings"):
        yield from sorted((ROOT / package).rglob("*.py"))


@pytest.mark.parametrize("path", list(_sources()), ids=lambda p: str(p.relative_to(ROOT)))
def test_docstrings_are_russian(path):
    """Тест: у каждого docstring'а модуля, класса и функции есть кириллица"""
    tree = ast.parse(path.read_text(encoding="utf-8"))
    english = [
        getattr(node, "name", "<module>")
        for node in ast.walk(tree)
        if isinstance(node, NODES)
        and (doc := ast.get_docstring(node))
        and not CYRILLIC.search(doc)
    ]
    assert english == []
