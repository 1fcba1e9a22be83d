from typing import Any, Dict, Optional


class WorkbenchError(Exception):
    """
    Базовое исключение рабочего места: код выхода + подробность для пользователя
    """

    exit_code: int = 2

    def __init__(self, detail: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(detail)
        self.detail = detail
        self.context = context or {}


class InputError(WorkbenchError):
    """Некорректные файлы, таблицы или аргументы"""

    exit_code = 2


class DomainError(WorkbenchError):
    """Нарушено предусловие операции"""

    exit_code = 2


class NonConstantRequiredError(DomainError):
    def __init__(self, context: Optional[Dict[str, Any]] = None):
        super().__init__("non-constant required", context)


class CapacityError(WorkbenchError):
    """Превышен лимит перебора"""

    exit_code = 2


class QuarantineError(WorkbenchError):
    exit_code = 2


class AxiomError(WorkbenchError):
    """
    Таблицы не задают полукольцо; исключение несёт полный отчёт о проверке аксиом
    """

    exit_code = 1

    def __init__(self, report: Any):
        first = report.violations[0] if report.violations else None
        detail = "axiom check failed"
        if first is not None:
            detail = f"axiom check failed: {first.describe()}"
        super().__init__(detail, {"violations": len(report.violations)})
        self.report = report


class OracleMismatchError(WorkbenchError):
    exit_code = 1
