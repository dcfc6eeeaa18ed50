"""Учет жизненного цикла таймеров и проверки кредита перестроек.

Все сравнения с оценками - перекрестное умножение целых, без float.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import List, Union


@dataclass(frozen=True, slots=True)
class TimerReset:
    subtree_size: int
    timer0: int


@dataclass(frozen=True, slots=True)
class Decrement:
    pass


@dataclass(frozen=True, slots=True)
class RebuildTriggered:
    subtree_size: int
    timer0: int
    depth: int


Event = Union[TimerReset, Decrement, RebuildTriggered]

_DECREMENT = Decrement()


@dataclass(slots=True)
class Counters:
    total_decrements: int = 0
    total_rebuilds: int = 0
    total_rebuilt_nodes: int = 0
    updates_succeeded: int = 0


@dataclass
class MetricsSink:
    """Журнал событий (только дописывание) и счетчики одного дерева.

    При ``keep_log=False`` хранятся только счетчики и события перестроек.
    """
    keep_log: bool = True
    counters: Counters = field(default_factory=Counters)
    events: List[Event] = field(default_factory=list)
    triggers: List[RebuildTriggered] = field(default_factory=list)

    def record_reset(self, size: int, timer0: int) -> None:
        if self.keep_log:
            self.events.append(TimerReset(size, timer0))

    def record_decrement(self) -> None:
        self.counters.total_decrements += 1
        if self.keep_log:
            self.events.append(_DECREMENT)

    def record_trigger(self, size: int, timer0: int, depth: int) -> RebuildTriggered:
        event = RebuildTriggered(size, timer0, depth)
        self.counters.total_rebuilds += 1
        self.counters.total_rebuilt_nodes += size
        self.triggers.append(event)
        if self.keep_log:
            self.events.append(event)
        return event

    def record_update(self) -> None:
        self.counters.updates_succeeded += 1

    def snapshot(self) -> Counters:
        return replace(self.counters)

    def amortized_rebuild_cost(self) -> Fraction:
        """Перестроенных узлов на успешное обновление; только для отчета."""
        if not self.counters.updates_succeeded:
            return Fraction(0)
        return Fraction(self.counters.total_rebuilt_nodes, self.counters.updates_succeeded)


def credit_multiplier(k_num: int, k_den: int) -> Fraction:
    """Множитель кредита 2/k + 1"""
    return Fraction(2 * k_den + k_num, k_num)


def check_credit_bound(event: RebuildTriggered, k_num: int, k_den: int) -> bool:
    """Перестройка стоит меньше (2/k + 1) обновлений, отсчитанных ее таймером."""
    return event.subtree_size * k_num < (2 * k_den + k_num) * event.timer0


def check_aggregate_amortized(counters: Counters, k_num: int, k_den: int) -> bool:
    """Суммарный кредит: перестроенных узлов < (2/k + 1) * декрементов."""
    if counters.total_rebuilds == 0:
        return True
    return counters.total_rebuilt_nodes * k_num < (2 * k_den + k_num) * counters.total_decrements

