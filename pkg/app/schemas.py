"""Pydantic схемы для CLI и отчетов"""
from pathlib import Path
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field as PydanticField, field_validator

from app.core import parse_k
from app.workload import WORKLOAD_NAMES
from settings.config import AppConfig


CSV_HEADER = (
    "step",
    "op",
    "key",
    "success",
    "size",
    "height",
    "height_bound",
    "rebuild_size",
    "total_decrements",
    "total_rebuilt_nodes",
)


# Конфиг CLI
class RunConfig(BaseModel):
    """Разобранные аргументы командной строки"""
    model_config = ConfigDict(frozen=True)

    command: Literal["run", "bench", "demo"]
    workload: str = "ascending"
    n: int = PydanticField(default=AppConfig.DEFAULT_N, ge=0)
    seeds: List[int] = PydanticField(default_factory=lambda: [AppConfig.DEFAULT_SEED])
    ks: List[str] = PydanticField(default_factory=lambda: [AppConfig.DEFAULT_K])
    p_delete: float = PydanticField(default=AppConfig.DEFAULT_P_DELETE, ge=0.0, le=1.0)
    key_space: int = PydanticField(default=0, ge=0)
    churn_pairs: int = PydanticField(default=-1, ge=-1)
    check_every: int = PydanticField(default=AppConfig.DEFAULT_CHECK_EVERY, ge=0)
    jobs: int = PydanticField(default=AppConfig.DEFAULT_JOBS, ge=1)
    csv: Optional[Path] = None
    dot: Optional[Path] = None
    replay: Optional[Path] = None
    baseline: Literal["none", "naive"] = "none"

    @field_validator("workload")
    @classmethod
    def _known_workload(cls, value: str) -> str:
        if value not in WORKLOAD_NAMES:
            raise ValueError(f"workload must be one of {', '.join(WORKLOAD_NAMES)}")
        return value

    @field_validator("ks")
    @classmethod
    def _valid_fractions(cls, value: List[str]) -> List[str]:
        for text in value:
            parse_k(text)
        return value

    def fractions(self) -> List[Tuple[int, int]]:
        return [parse_k(text) for text in self.ks]


# Отчеты прогонов
class CountersSchema(BaseModel):
    """Счетчики метрик в конце прогона"""
    model_config = ConfigDict(from_attributes=True)

    total_decrements: int = 0
    total_rebuilds: int = 0
    total_rebuilt_nodes: int = 0
    updates_succeeded: int = 0


class StepSample(BaseModel):
    """Одна строка CSV: состояние после операции"""
    step: int
    op: str
    key: int
    success: bool
    size: int
    height: int
    height_bound: int
    rebuild_size: int = 0
    total_decrements: int
    total_rebuilt_nodes: int

    def csv_row(self) -> Tuple:
        return (
            self.step,
            self.op,
            self.key,
            "true" if self.success else "false",
            self.size,
            self.height,
            self.height_bound,
            self.rebuild_size,
            self.total_decrements,
            self.total_rebuilt_nodes,
        )


class RunReport(BaseModel):
    """Итог прогона одной нагрузки"""
    workload: str
    seed: int
    k: str
    steps: int
    final_size: int
    max_height: int
    height_bound_final: int
    max_height_bound: int
    counters: CountersSchema
    samples: List[StepSample] = []


# Отчеты bench
class BenchRow(BaseModel):
    """Строка сравнения структур"""
    structure: str
    workload: str
    n: int
    k: str
    size: int
    height: int
    height_bound: int
    avg_depth: float
    wall_seconds: float
    rebuilds: int = 0
    rebuilt_nodes_per_update: float = 0.0


BENCH_HEADER = tuple(BenchRow.model_fields)
