"""
Форматы файлов: полукольцо, нечёткое подмножество, манифест корпуса, карантинная аннотация
"""
from typing import Any, Dict, List, Optional, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from app.models.fuzzy import FuzzySubset, Grid
from app.models.hemiring import CayleyTables, Hemiring
from app.utils.errors import InputError

Document = TypeVar("Document", bound=BaseModel)


class HemiringDocument(BaseModel):
    """Таблицы, записанные именами элементов; ноль: первый элемент"""

    model_config = ConfigDict(extra="forbid")

    name: str = "unnamed"
    elements: List[str] = Field(min_length=1)
    add: List[List[str]]
    mul: List[List[str]]

    def to_tables(self) -> CayleyTables:
        return CayleyTables.from_named(self.elements, self.add, self.mul, self.name)

    @classmethod
    def from_hemiring(cls, hemiring: Hemiring) -> "HemiringDocument":
        tables = hemiring.tables
        return cls(
            name=hemiring.name,
            elements=list(hemiring.elements),
            add=tables.named(tables.add),
            mul=tables.named(tables.mul),
        )


class FuzzyDocument(BaseModel):
    """{"hemiring": имя, "values": {элемент: "p/q"}}"""

    model_config = ConfigDict(extra="forbid")

    hemiring: str
    values: Dict[str, str]

    def to_fuzzy(self, parent: Hemiring, grid: Grid) -> FuzzySubset:
        """
        Raises:
            InputError: имя структуры не совпадает, значение вне сетки или элементы не совпадают
        """
        if self.hemiring != parent.name:
            raise InputError(f"fuzzy subset refers to {self.hemiring!r}, loaded structure is {parent.name!r}")
        return FuzzySubset.from_mapping(parent, {x: grid.parse(v) for x, v in self.values.items()})

    @classmethod
    def from_fuzzy(cls, fuzzy: FuzzySubset) -> "FuzzyDocument":
        return cls(hemiring=fuzzy.parent.name, values=fuzzy.as_dict())


class CorpusManifest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    counts: Dict[str, int] = Field(default_factory=dict)
    files: List[str] = Field(default_factory=list)
    strategy: Optional[str] = None


class QuarantineAnnotation(BaseModel):
    """
    Запись о структуре в карантине: отчёт об аксиомах, заявленные и вычисленные значения
    """

    model_config = ConfigDict(extra="forbid")

    structure: str
    axiom_report: Dict[str, Any]
    fuzzy_sets: Dict[str, Dict[str, str]] = Field(default_factory=dict)
    claimed: Dict[str, Dict[str, str]] = Field(default_factory=dict)
    computed: Dict[str, Dict[str, str]] = Field(default_factory=dict)
    differing_elements: List[str] = Field(default_factory=list)
    note: str = ""


def parse_document(model: Type[Document], text: str, source: str = "<input>") -> Document:
    """
    Raises:
        InputError: некорректный JSON или схема
    """
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "document"
        raise InputError(f"{source}: {location}: {first['msg']}", {"source": source})
