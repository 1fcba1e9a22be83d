from pathlib import Path
from typing import Optional

from app.models.fuzzy import FuzzySubset, Grid, join, meet
from app.models.fuzzy_families import (
    FuzzyClassification,
    FuzzyIdealFamily,
    FuzzyLattice,
    classify_fuzzy,
    enumerate_fuzzy_ideals,
)
from app.models.fuzzy_products import FuzzyOp, cross_check, level_cut_product
from app.models.hemiring import Hemiring
from app.models.lattice import enumerate_ideals
from app.models.schemas import FuzzyDocument, parse_document
from app.models.subsets import IdealKind
from app.utils.config import WorkbenchConfig
from app.utils.errors import InputError
from app.utils.logger import get_logger

OPERATIONS = ("product", "intrinsic", "sum", "meet", "join")


class FuzzyService:
    """
    Нечёткие подмножества: чтение файлов, операции, перечисление и классификация
    """

    def __init__(self, config: Optional[WorkbenchConfig] = None):
        self.logger = get_logger(__name__)
        self.config = config or WorkbenchConfig()
        self.grid = Grid(self.config.denominator)

    def load(self, path: Path, parent: Hemiring) -> FuzzySubset:
        """
        Raises:
            InputError: файл недоступен, относится к другой структуре или значения вне сетки
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            self.logger.warning("Файл недоступен", path=str(path), error_message=str(e))
            raise InputError(f"cannot read {path}: {e.strerror}", {"path": str(path)})
        fuzzy = parse_document(FuzzyDocument, text, str(path)).to_fuzzy(parent, self.grid)
        self.logger.debug("Нечёткое подмножество прочитано", path=str(path), structure=parent.name)
        return fuzzy

    def combine(self, operation: str, left: FuzzySubset, right: FuzzySubset, oracle: bool = False) -> FuzzySubset:
        """
        Args:
            operation: product, intrinsic, sum, meet или join
            left: λ
            right: μ
            oracle: Сверить сведение к уровням с прямым перебором представлений

        Raises:
            InputError: неизвестная операция
            OracleMismatchError: результаты разошлись
        """
        if operation not in OPERATIONS:
            raise InputError(f"unknown operation {operation!r}; expected one of {', '.join(OPERATIONS)}")
        if left.parent.quarantined:
            self.logger.warning("Операция над структурой в карантине", structure=left.parent.name,
                                operation=operation)
        if operation == "meet":
            return meet(left, right)
        if operation == "join":
            return join(left, right)
        op = FuzzyOp(operation)
        if oracle:
            result = cross_check(left, right, op)
            self.logger.info("Сверка с прямым перебором пройдена", operation=operation)
            return result
        return level_cut_product(left, right, op)

    def ideals(self, parent: Hemiring, kind: IdealKind = IdealKind.H) -> FuzzyIdealFamily:
        crisp = enumerate_ideals(parent, kind, self.config.brute_force_cap, self.config.closure_system_cap)
        family = enumerate_fuzzy_ideals(crisp, self.grid, self.config.fuzzy_family_budget,
                                        self.config.fuzzy_family_limit)
        self.logger.info("Нечёткие идеалы перечислены", structure=parent.name, grid=self.grid.denominator,
                         count=len(family))
        return family

    def classify(self, delta: FuzzySubset, family: Optional[FuzzyIdealFamily] = None) -> FuzzyClassification:
        if family is None:
            family = self.ideals(delta.parent)
        return classify_fuzzy(delta, FuzzyLattice(family))
