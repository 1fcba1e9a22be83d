from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from app.models.classification import Classification, classify_h_ideal
from app.models.hemiring import AxiomReport, CayleyTables, Hemiring, build_hemiring, verify_axioms
from app.models.lattice import IdealFamily, enumerate_ideals
from app.models.schemas import HemiringDocument, parse_document
from app.models.subsets import (
    HemiregularityReport,
    IdealKind,
    Subset,
    generated_ideal,
    h_closure,
    is_h_hemiregular,
    is_ideal_of_kind,
)
from app.utils.config import WorkbenchConfig
from app.utils.errors import DomainError, InputError
from app.utils.logger import get_logger


class HemiringService:
    """
    Загрузка структур из файлов и чёткие операции над ними
    """

    def __init__(self, config: Optional[WorkbenchConfig] = None):
        self.logger = get_logger(__name__)
        self.config = config or WorkbenchConfig()

    def read_tables(self, path: Path) -> CayleyTables:
        """
        Читает файл полукольца без проверки аксиом

        Raises:
            InputError: файл не найден или не соответствует формату
        """
        path = Path(path)
        self.logger.debug("Чтение таблиц", path=str(path))
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            self.logger.warning("Файл недоступен", path=str(path), error_message=str(e))
            raise InputError(f"cannot read {path}: {e.strerror}", {"path": str(path)})
        document = parse_document(HemiringDocument, text, str(path))
        return document.to_tables()

    def verify(self, path: Path) -> AxiomReport:
        tables = self.read_tables(path)
        report = verify_axioms(tables)
        self.logger.info("Аксиомы проверены", structure=tables.name, order=tables.order, valid=report.valid)
        return report

    def load(self, path: Path, quarantine: bool = False) -> Hemiring:
        """
        Args:
            path: Файл полукольца
            quarantine: Принять таблицы, нарушающие аксиомы, с пометкой карантина

        Raises:
            InputError: файл некорректен
            AxiomError: аксиомы нарушены, а карантин не разрешён
        """
        hemiring = build_hemiring(self.read_tables(path), quarantine=quarantine)
        if hemiring.quarantined:
            self.logger.warning("Структура в карантине: таблицы нарушают аксиомы",
                                structure=hemiring.name, violations=len(hemiring.violations))
        return hemiring

    def save(self, hemiring: Hemiring, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        document = HemiringDocument.from_hemiring(hemiring)
        path.write_text(document.model_dump_json(indent=2) + "\n", encoding="utf-8")
        self.logger.debug("Структура записана", structure=hemiring.name, path=str(path))
        return path

    def ideals(self, hemiring: Hemiring, kind: IdealKind) -> IdealFamily:
        family = enumerate_ideals(hemiring, kind, self.config.brute_force_cap, self.config.closure_system_cap)
        self.logger.info("Идеалы перечислены", structure=hemiring.name, kind=IdealKind(kind).value,
                         count=len(family), strategy=family.strategy)
        return family

    def closure(self, hemiring: Hemiring, elements: str) -> Tuple[Subset, Subset]:
        subset = Subset.parse(hemiring, elements)
        return subset, h_closure(subset)

    def generate(self, hemiring: Hemiring, elements: str, kind: IdealKind = IdealKind.H) -> Subset:
        return generated_ideal(Subset.parse(hemiring, elements), kind)

    def check_kind(self, hemiring: Hemiring, elements: str, kind: IdealKind) -> Dict[str, Any]:
        subset = Subset.parse(hemiring, elements)
        verdict = is_ideal_of_kind(subset, kind)
        return {"set": subset.format(), "kind": IdealKind(kind).value, "holds": verdict.holds,
                "witness": list(verdict.witness) if verdict.witness else None}

    def classify(self, hemiring: Hemiring, elements: str) -> Classification:
        """
        Raises:
            DomainError: множество не является h-идеалом
        """
        ideal = Subset.parse(hemiring, elements)
        family = self.ideals(hemiring, IdealKind.H)
        try:
            result = classify_h_ideal(ideal, family)
        except DomainError as e:
            self.logger.warning("Классификация отклонена", structure=hemiring.name, ideal=ideal.format(),
                                detail=e.detail)
            raise
        self.logger.info("h-идеал классифицирован", structure=hemiring.name, ideal=ideal.format(),
                         prime=result.is_prime, semiprime=result.is_semiprime)
        return result

    def hemiregularity(self, hemiring: Hemiring) -> HemiregularityReport:
        return is_h_hemiregular(hemiring)

    def describe_family(self, family: IdealFamily) -> List[Dict[str, Any]]:
        return [{"ideal": member.format(), "proper": not member.is_whole} for member in family]
