from typing import Iterable, List, Optional, Sequence, Tuple

from app.models.hemiring import Hemiring
from app.models.theorems import FAILS, Diagnostic, SuiteSummary, TheoremReport, run_diagnostics, run_suite
from app.utils.config import WorkbenchConfig
from app.utils.errors import QuarantineError
from app.utils.logger import get_logger


class TheoremService:
    """
    Прогон каталога утверждений по корпусу структур
    """

    def __init__(self, config: Optional[WorkbenchConfig] = None):
        self.logger = get_logger(__name__)
        self.config = config or WorkbenchConfig()

    def check(
        self,
        corpus: Sequence[Hemiring],
        statements: Optional[Iterable[str]] = None,
        allow_quarantined: bool = False,
    ) -> Tuple[List[TheoremReport], SuiteSummary]:
        """
        Args:
            corpus: Структуры
            statements: Идентификаторы утверждений (None или "all": весь каталог)
            allow_quarantined: Разрешить структуры в карантине (их отчёты не входят в сводку)

        Raises:
            QuarantineError: в корпусе есть структура в карантине, а разрешения нет
            InputError: неизвестный идентификатор или пустой корпус
        """
        quarantined = [h.name for h in corpus if h.quarantined]
        if quarantined and not allow_quarantined:
            self.logger.warning("Структуры в карантине отклонены", structures=quarantined)
            raise QuarantineError(
                f"quarantined structures {', '.join(quarantined)} need --allow-quarantined",
                {"structures": quarantined},
            )
        self.logger.info("Начало проверки утверждений", structures=len(corpus),
                         grid=self.config.denominator)
        reports, summary = run_suite(corpus, statements, self.config)
        if summary.fails:
            failing = sorted({(r.statement, r.structure) for r in reports if r.status == FAILS and not r.quarantined})
            self.logger.warning("Найдены контрпримеры", count=summary.fails, sample=[list(f) for f in failing[:3]])
        return reports, summary

    def diagnostics(self, corpus: Sequence[Hemiring]) -> List[Diagnostic]:
        found: List[Diagnostic] = []
        for hemiring in corpus:
            found.extend(run_diagnostics(hemiring, self.config))
        return found
