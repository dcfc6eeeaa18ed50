"""Универсальный обработчик ошибок для CLI"""
import logging
from functools import wraps
from typing import Any, Callable, Dict, Optional

from pydantic import ValidationError as PydanticValidationError


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class TimerTreeError(Exception):
    """Базовый класс для ошибок"""
    def __init__(self, message: str, exit_code: int = EXIT_VIOLATION, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class UsageError(TimerTreeError):
    """Неверные аргументы командной строки"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, exit_code=EXIT_USAGE, details=details)


class InvalidRebalanceFraction(UsageError):
    """k должно быть целой дробью строго между 0 и 1"""


class UnknownWorkload(UsageError):
    """Нагрузки с таким именем нет среди встроенных генераторов"""


class InvariantViolation(TimerTreeError):
    """Во время прогона не прошла структурная проверка или оценка"""
    def __init__(self, check: str, step: int, dot: str = "", details: Optional[Dict[str, Any]] = None):
        details = {**(details or {}), "check": check, "step": step, "dot": dot}
        super().__init__(f"{check} violated at step {step}", exit_code=EXIT_VIOLATION, details=details)
        self.check = check
        self.step = step
        self.dot = dot


def _is_usage_error(error: Exception) -> bool:
    return isinstance(error, (UsageError, PydanticValidationError))


def log_error(error: Exception, context: Optional[Dict[str, Any]] = None) -> None:
    """Логирует ошибку с контекстом"""
    context = dict(context or {})

    # Ошибки использования - WARNING, все остальное - ERROR
    if _is_usage_error(error):
        log_level = logging.WARNING
    else:
        log_level = logging.ERROR

    if isinstance(error, TimerTreeError):
        # DOT пишется отдельно, в лог не попадает
        context.update({key: value for key, value in error.details.items() if key != "dot"})

    log_message = f"{error.__class__.__name__}: {error}"
    if context:
        log_message += f" | Context: {context}"

    expected = isinstance(error, TimerTreeError) or _is_usage_error(error)
    logger.log(log_level, log_message, exc_info=not expected)


def exit_code_for(error: Exception) -> int:
    """Возвращает код выхода для исключения"""
    if isinstance(error, TimerTreeError):
        return error.exit_code
    if isinstance(error, PydanticValidationError):
        return EXIT_USAGE
    # Внутренние ошибки, в том числе голый ValueError
    return EXIT_VIOLATION


def handle_cli_errors(func: Callable[..., int]) -> Callable[..., int]:
    """Декоратор для обработки ошибок в командах CLI"""
    @wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except Exception as e:  # noqa: BLE001
            log_error(e)
            return exit_code_for(e)

    return wrapper
