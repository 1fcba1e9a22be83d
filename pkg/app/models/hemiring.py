"""
Конечные полукольца с нулём (hemiring), заданные таблицами Кэли, и проверка аксиом
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from app.models.bitset import full_mask, iter_bits
from app.utils.errors import AxiomError, InputError

Table = Tuple[Tuple[int, ...], ...]

ADD_ASSOCIATIVE = "add_associative"
ADD_COMMUTATIVE = "add_commutative"
ZERO_ADDITIVE_IDENTITY = "zero_additive_identity"
MUL_ASSOCIATIVE = "mul_associative"
ZERO_ABSORBING = "zero_absorbing"
LEFT_DISTRIBUTIVE = "left_distributive"
RIGHT_DISTRIBUTIVE = "right_distributive"

AXIOMS = (
    ADD_ASSOCIATIVE,
    ADD_COMMUTATIVE,
    ZERO_ADDITIVE_IDENTITY,
    MUL_ASSOCIATIVE,
    ZERO_ABSORBING,
    LEFT_DISTRIBUTIVE,
    RIGHT_DISTRIBUTIVE,
)


@dataclass(frozen=True)
class CayleyTables:
    """
    Проверенные по форме таблицы сложения и умножения (индексы элементов)
    """

    name: str
    elements: Tuple[str, ...]
    add: Table
    mul: Table

    @property
    def order(self) -> int:
        return len(self.elements)

    @classmethod
    def create(
        cls,
        elements: Sequence[str],
        add: Sequence[Sequence[Any]],
        mul: Sequence[Sequence[Any]],
        name: str = "unnamed",
    ) -> "CayleyTables":
        """
        Проверяет форму таблиц: квадратные, одного порядка, индексы в диапазоне

        Args:
            elements: Имена элементов, индекс 0: ноль
            add: Таблица сложения (индексы элементов)
            mul: Таблица умножения (индексы элементов)
            name: Имя структуры

        Returns:
            CayleyTables

        Raises:
            InputError: таблицы некорректны
        """
        names = tuple(elements)
        n = len(names)
        if n == 0:
            raise InputError("element list is empty")
        if any(not isinstance(x, str) or not x for x in names):
            raise InputError("element names must be non-empty strings")
        if len(set(names)) != n:
            duplicates = sorted({x for x in names if names.count(x) > 1})
            raise InputError(f"duplicate element names: {', '.join(duplicates)}")
        if any("," in x for x in names):
            raise InputError("element names must not contain commas")
        return cls(name, names, _check_table("add", add, n), _check_table("mul", mul, n))

    @classmethod
    def from_named(
        cls,
        elements: Sequence[str],
        add: Sequence[Sequence[str]],
        mul: Sequence[Sequence[str]],
        name: str = "unnamed",
    ) -> "CayleyTables":
        """Таблицы, записанные именами элементов (формат файлов)"""
        names = list(elements)
        lookup = {x: i for i, x in enumerate(names)}

        def convert(label: str, rows: Sequence[Sequence[str]]) -> List[List[int]]:
            converted = []
            for row in rows:
                converted_row = []
                for entry in row:
                    if entry not in lookup:
                        raise InputError(f"{label} table refers to unknown element {entry!r}")
                    converted_row.append(lookup[entry])
                converted.append(converted_row)
            return converted

        if len(set(names)) != len(names):
            duplicates = sorted({x for x in names if names.count(x) > 1})
            raise InputError(f"duplicate element names: {', '.join(duplicates)}")
        return cls.create(names, convert("add", add), convert("mul", mul), name)

    def named(self, table: Table) -> List[List[str]]:
        return [[self.elements[v] for v in row] for row in table]


def _check_table(label: str, table: Sequence[Sequence[Any]], n: int) -> Table:
    if len(table) != n:
        raise InputError(f"{label} table has {len(table)} rows, expected {n}")
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise InputError(f"{label} table row {i} has {len(row)} entries, expected {n}")
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, int) or not 0 <= entry < n:
                raise InputError(f"{label} table row {i} has out-of-range entry {entry!r}")
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class AxiomViolation:
    """
    Нарушение аксиомы: имя аксиомы, свидетели и две различающиеся стороны равенства
    """

    axiom: str
    indices: Tuple[int, ...]
    witness: Tuple[str, ...]
    lhs: str
    rhs: str

    def describe(self) -> str:
        return f"{self.axiom} at ({', '.join(self.witness)}): {self.lhs} != {self.rhs}"

    def reproduces(self, tables: CayleyTables) -> bool:
        """Повторно вычисляет обе стороны по таблицам и подтверждает нарушение"""
        sides = _AXIOM_SIDES[self.axiom](tables.add, tables.mul, *self.indices)
        return sides[0] != sides[1]

    def to_dict(self) -> Dict[str, Any]:
        return {"axiom": self.axiom, "witness": list(self.witness), "lhs": self.lhs, "rhs": self.rhs}


# каждая функция возвращает пару значений, которые обязаны совпадать
def _add_assoc(a: Table, m: Table, x: int, y: int, z: int) -> Tuple[int, int]:
    return a[a[x][y]][z], a[x][a[y][z]]


def _add_comm(a: Table, m: Table, x: int, y: int) -> Tuple[int, int]:
    return a[x][y], a[y][x]


def _zero_identity(a: Table, m: Table, x: int, side: int) -> Tuple[int, int]:
    return (a[0][x] if side == 0 else a[x][0]), x


def _mul_assoc(a: Table, m: Table, x: int, y: int, z: int) -> Tuple[int, int]:
    return m[m[x][y]][z], m[x][m[y][z]]


def _zero_absorbing(a: Table, m: Table, x: int, side: int) -> Tuple[int, int]:
    return (m[0][x] if side == 0 else m[x][0]), 0


def _left_dist(a: Table, m: Table, x: int, y: int, z: int) -> Tuple[int, int]:
    return m[x][a[y][z]], a[m[x][y]][m[x][z]]


def _right_dist(a: Table, m: Table, x: int, y: int, z: int) -> Tuple[int, int]:
    return m[a[y][z]][x], a[m[y][x]][m[z][x]]


_AXIOM_SIDES = {
    ADD_ASSOCIATIVE: _add_assoc,
    ADD_COMMUTATIVE: _add_comm,
    ZERO_ADDITIVE_IDENTITY: _zero_identity,
    MUL_ASSOCIATIVE: _mul_assoc,
    ZERO_ABSORBING: _zero_absorbing,
    LEFT_DISTRIBUTIVE: _left_dist,
    RIGHT_DISTRIBUTIVE: _right_dist,
}

_EXPRESSIONS = {
    ADD_ASSOCIATIVE: ("({0}+{1})+{2}", "{0}+({1}+{2})"),
    ADD_COMMUTATIVE: ("{0}+{1}", "{1}+{0}"),
    MUL_ASSOCIATIVE: ("({0}·{1})·{2}", "{0}·({1}·{2})"),
    LEFT_DISTRIBUTIVE: ("{0}·({1}+{2})", "{0}·{1}+{0}·{2}"),
    RIGHT_DISTRIBUTIVE: ("({1}+{2})·{0}", "{1}·{0}+{2}·{0}"),
}


def _witness_tuples(axiom: str, n: int) -> Iterator[Tuple[int, ...]]:
    if axiom in (ZERO_ADDITIVE_IDENTITY, ZERO_ABSORBING):
        for x in range(n):
            for side in (0, 1):
                yield (x, side)
    elif axiom == ADD_COMMUTATIVE:
        for x in range(n):
            for y in range(x + 1, n):
                yield (x, y)
    else:
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    yield (x, y, z)


def _violation(tables: CayleyTables, axiom: str, indices: Tuple[int, ...], sides: Tuple[int, int]) -> AxiomViolation:
    names = tables.elements
    lhs, rhs = names[sides[0]], names[sides[1]]
    if axiom in (ZERO_ADDITIVE_IDENTITY, ZERO_ABSORBING):
        x, side = indices
        op = "+" if axiom == ZERO_ADDITIVE_IDENTITY else "·"
        expr = f"{names[0]}{op}{names[x]}" if side == 0 else f"{names[x]}{op}{names[0]}"
        return AxiomViolation(axiom, indices, (names[x],), f"{expr}={lhs}", rhs)
    left, right = _EXPRESSIONS[axiom]
    witness = tuple(names[i] for i in indices)
    return AxiomViolation(
        axiom, indices, witness, f"{left.format(*witness)}={lhs}", f"{right.format(*witness)}={rhs}"
    )


@dataclass(frozen=True)
class AxiomReport:
    """
    Результат проверки аксиом: valid ⟺ нарушений нет
    """

    valid: bool
    violations: Tuple[AxiomViolation, ...]
    commutative_mul: bool
    identity: Optional[str]
    exhaustive: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "valid": self.valid,
            "violations": [v.to_dict() for v in self.violations],
            "commutative_mul": self.commutative_mul,
            "identity": self.identity,
            "exhaustive": self.exhaustive,
        }


def detect_identity(mul: Table) -> Optional[int]:
    rn = range(len(mul))
    for e in rn:
        if all(mul[e][x] == x == mul[x][e] for x in rn):
            return e
    return None


def is_commutative(table: Table) -> bool:
    n = len(table)
    return all(table[x][y] == table[y][x] for x in range(n) for y in range(x + 1, n))


def verify_axioms(tables: CayleyTables, exhaustive: bool = False) -> AxiomReport:
    """
    Проверяет все аксиомы полукольца с нулём в позиции 0

    Args:
        tables: Таблицы Кэли
        exhaustive: Перечислить все нарушения, а не первое для каждой аксиомы

    Returns:
        AxiomReport со свидетелями нарушений
    """
    n = tables.order
    violations: List[AxiomViolation] = []
    for axiom in AXIOMS:
        sides_of = _AXIOM_SIDES[axiom]
        for indices in _witness_tuples(axiom, n):
            sides = sides_of(tables.add, tables.mul, *indices)
            if sides[0] != sides[1]:
                violations.append(_violation(tables, axiom, indices, sides))
                if not exhaustive:
                    break
    identity = detect_identity(tables.mul)
    return AxiomReport(
        valid=not violations,
        violations=tuple(violations),
        commutative_mul=is_commutative(tables.mul),
        identity=None if identity is None else tables.elements[identity],
        exhaustive=exhaustive,
    )


class TableKernel:
    """
    Операции над масками подмножеств по таблицам одной структуры.
    Кэши только запоминают чистые функции масок.
    """

    def __init__(self, add: Table, mul: Table):
        self.add = add
        self.mul = mul
        self.order = len(add)
        self.full = full_mask(self.order)
        n = self.order
        # fibres[u][v]: маска x, для которых x+u = v
        self.fibres = [[0] * n for _ in range(n)]
        for x in range(n):
            for u in range(n):
                self.fibres[u][add[x][u]] |= 1 << x
        self._h_closure: Dict[int, int] = {}
        self._additive: Dict[int, int] = {}
        self._products: Dict[Tuple[int, int], int] = {}

    def sum_set(self, left: int, right: int) -> int:
        add = self.add
        result = 0
        rights = list(iter_bits(right))
        for a in iter_bits(left):
            row = add[a]
            for b in rights:
                result |= 1 << row[b]
        return result

    def pairwise_products(self, left: int, right: int) -> int:
        mul = self.mul
        result = 0
        rights = list(iter_bits(right))
        for a in iter_bits(left):
            row = mul[a]
            for b in rights:
                result |= 1 << row[b]
        return result

    def additive_closure(self, mask: int) -> int:
        cached = self._additive.get(mask)
        if cached is not None:
            return cached
        closed = mask
        while True:
            grown = closed | self.sum_set(closed, mask)
            if grown == closed:
                break
            closed = grown
        self._additive[mask] = closed
        return closed

    def product(self, left: int, right: int) -> int:
        """Все непустые конечные суммы попарных произведений"""
        key = (left, right)
        cached = self._products.get(key)
        if cached is None:
            cached = self.additive_closure(self.pairwise_products(left, right))
            self._products[key] = cached
        return cached

    def h_closure(self, mask: int) -> int:
        """{x : x+a+y = b+y для некоторых a, b из маски и y из R}"""
        cached = self._h_closure.get(mask)
        if cached is not None:
            return cached
        add, fibres = self.add, self.fibres
        members = list(iter_bits(mask))
        result = 0
        for y in range(self.order):
            targets = 0
            for b in members:
                targets |= 1 << add[b][y]
            target_values = list(iter_bits(targets))
            for a in members:
                fibre = fibres[add[a][y]]
                for v in target_values:
                    result |= fibre[v]
        self._h_closure[mask] = result
        return result


@dataclass(frozen=True)
class Hemiring:
    """
    Неизменяемая конечная структура; quarantined помечает таблицы, не прошедшие аксиомы
    """

    name: str
    elements: Tuple[str, ...]
    add: Table
    mul: Table
    identity: Optional[int] = None
    commutative_mul: bool = False
    quarantined: bool = False
    violations: Tuple[AxiomViolation, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def zero(self) -> int:
        return 0

    @property
    def has_identity(self) -> bool:
        return self.identity is not None

    @property
    def commutative_with_identity(self) -> bool:
        return self.commutative_mul and self.identity is not None

    @property
    def tables(self) -> CayleyTables:
        return CayleyTables(self.name, self.elements, self.add, self.mul)

    @cached_property
    def kernel(self) -> TableKernel:
        return TableKernel(self.add, self.mul)

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise InputError(f"unknown element {element!r} in {self.name}")

    def plus(self, x: int, y: int) -> int:
        return self.add[x][y]

    def times(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "order": self.order,
            "identity": None if self.identity is None else self.elements[self.identity],
            "commutative_mul": self.commutative_mul,
            "quarantined": self.quarantined,
        }


def build_hemiring(tables: CayleyTables, quarantine: bool = False) -> Hemiring:
    """
    Строит неизменяемое полукольцо из проверенных таблиц

    Args:
        tables: Таблицы Кэли
        quarantine: Разрешить таблицы, нарушающие аксиомы (с пометкой карантина)

    Returns:
        Hemiring

    Raises:
        AxiomError: аксиомы нарушены, а карантин не разрешён
    """
    report = verify_axioms(tables, exhaustive=quarantine)
    if not report.valid and not quarantine:
        raise AxiomError(report)
    identity = detect_identity(tables.mul)
    return Hemiring(
        name=tables.name,
        elements=tables.elements,
        add=tables.add,
        mul=tables.mul,
        identity=identity,
        commutative_mul=report.commutative_mul,
        quarantined=not report.valid,
        violations=report.violations,
    )
