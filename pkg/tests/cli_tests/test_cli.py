"""CLI тесты: коды выхода, CSV и DOT"""
import pytest

from cli.main import main
from app.schemas import CSV_HEADER

pytestmark = pytest.mark.integration


def test_run_ascending_thousand_with_csv(tmp_path, capsys):
    """Тест прогона с проверкой на каждом шаге"""
    csv_path = tmp_path / "run.csv"

    code = main(["run", "--workload", "ascending", "--n", "1000", "--k", "1/2", "--check-every", "1", "--csv", str(csv_path)])

    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "step,op,key,success,size,height,height_bound,rebuild_size,total_decrements,total_rebuilt_nodes"
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 1001
    assert lines[-1].startswith("1000,insert,1000,true,1000,")

    out = capsys.readouterr().out
    assert out.startswith("[run] OK workload=ascending k=1/2 seed=1 steps=1000 size=1000")


@pytest.mark.parametrize("k", ["5/3", "0/4", "half"])
def test_run_rejects_bad_k(k):
    """Тест неверной дроби k"""
    assert main(["run", "--n", "10", "--k", k]) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--bogus"],
        ["run", "--workload", "sawtooth"],
        ["run", "--n", "ten"],
        ["run", "--n", "-5"],
        ["run", "--jobs", "0"],
        ["bench", "--baseline", "avl"],
        [],
    ],
)
def test_usage_errors_exit_two(argv):
    """Тест ошибок использования"""
    assert main(argv) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "run" in capsys.readouterr().out


def test_run_writes_dot(tmp_path):
    """Тест выгрузки финального дерева в DOT"""
    dot_path = tmp_path / "tree.gv"

    assert main(["run", "--workload", "zigzag", "--n", "15", "--dot", str(dot_path)]) == 0

    text = dot_path.read_text()
    assert text.startswith("digraph timer_tree {\n    node [shape=box];\n")
    assert text.endswith("}\n")
    assert text.count("[label=") - text.count("->") == 15


def test_run_many_k_values(tmp_path, capsys):
    """Тест нескольких k и seed в одном запуске"""
    csv_path = tmp_path / "run.csv"

    code = main([
        "run", "--workload", "random-mixed", "--n", "300",
        "--k", "1/4", "--k", "3/4", "--seed", "1", "--seed", "2",
        "--jobs", "2", "--check-every", "50", "--csv", str(csv_path),
    ])

    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == [
        "run_k1-4_s1.csv", "run_k1-4_s2.csv", "run_k3-4_s1.csv", "run_k3-4_s2.csv",
    ]
    assert capsys.readouterr().out.count("[run] OK") == 4


def test_run_violation_exits_one(monkeypatch, tmp_path, capsys):
    """Тест нарушения инварианта: код 1 и дамп дерева"""
    monkeypatch.setattr("app.services.check_bst", lambda root: False)
    dot_path = tmp_path / "fail.gv"

    assert main(["run", "--n", "20", "--check-every", "10", "--dot", str(dot_path)]) == 1
    assert dot_path.read_text().startswith("digraph")

    assert main(["run", "--n", "20", "--check-every", "10"]) == 1
    assert "digraph timer_tree" in capsys.readouterr().err


def test_run_replay(tmp_path, capsys):
    ops = tmp_path / "ops.txt"
    ops.write_text("# churn sample\ninsert 5\ninsert 3\ncontains 3\ndelete 5\ndelete 9\n")

    assert main(["run", "--replay", str(ops), "--check-every", "1"]) == 0
    assert "steps=5 size=1" in capsys.readouterr().out


def test_run_bad_replay_exits_two(tmp_path):
    ops = tmp_path / "ops.txt"
    ops.write_text("insert 1\nupsert 2\n")
    assert main(["run", "--replay", str(ops)]) == 2


def test_bench_with_naive_baseline(tmp_path, capsys):
    """Тест сравнения с наивным BST"""
    csv_path = tmp_path / "bench.csv"

    assert main(["bench", "--workload", "ascending", "--n", "500", "--baseline", "naive", "--csv", str(csv_path)]) == 0

    out = capsys.readouterr().out
    assert "timer-tree" in out and "naive-bst" in out
    assert len(csv_path.read_text().splitlines()) == 3


def test_demo(capsys):
    """Тест демо-трассировки"""
    assert main(["demo", "--n", "4", "--k", "1/2"]) == 0

    out = capsys.readouterr().out
    assert out.startswith("k = 1/2, ascending inserts 1..4\n")
    assert out.count("\ninsert ") == 4


def test_demo_rejects_negative_n():
    assert main(["demo", "--n", "-1"]) == 2
