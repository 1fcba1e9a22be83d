"""
Перечисление всех полуколец малого порядка с точностью до изоморфизма
"""
import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from app.models.hemiring import CayleyTables, Hemiring, Table, build_hemiring, verify_axioms
from app.utils.errors import CapacityError, DomainError
from app.utils.logger import get_logger

logger = get_logger(__name__)

ELEMENT_NAMES = ("0", "a", "b", "c", "d", "e", "f", "g")

PLAIN = "plain"
BACKTRACKING = "backtracking"

UNSET = -1


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Лексикографически минимальная пара таблиц по перестановкам, фиксирующим ноль"""

    order: int
    add: Table
    mul: Table

    def key(self) -> Tuple[int, ...]:
        return tuple(v for row in self.add for v in row) + tuple(v for row in self.mul for v in row)


def _relabel(table: Table, perm: Sequence[int]) -> Table:
    n = len(table)
    result = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            result[perm[i]][perm[j]] = perm[table[i][j]]
    return tuple(tuple(row) for row in result)


def _zero_fixing_permutations(n: int) -> Iterator[Tuple[int, ...]]:
    for rest in itertools.permutations(range(1, n)):
        yield (0,) + rest


def canonical_tables(add: Table, mul: Table) -> CanonicalForm:
    n = len(add)
    best: Optional[CanonicalForm] = None
    for perm in _zero_fixing_permutations(n):
        candidate = CanonicalForm(n, _relabel(add, perm), _relabel(mul, perm))
        if best is None or candidate.key() < best.key():
            best = candidate
    return best


def canonical_form(hemiring: Hemiring) -> CanonicalForm:
    return canonical_tables(hemiring.add, hemiring.mul)


def are_isomorphic(first: Hemiring, second: Hemiring) -> bool:
    """
    Raises:
        DomainError: порядки различаются
    """
    if first.order != second.order:
        raise DomainError(f"orders differ: {first.order} != {second.order}")
    return canonical_form(first) == canonical_form(second)


def _is_associative(table: Sequence[Sequence[int]], n: int) -> bool:
    return all(
        table[table[x][y]][z] == table[x][table[y][z]]
        for x in range(n) for y in range(n) for z in range(n)
    )


def additive_monoids(n: int) -> List[Table]:
    """
    Коммутативные моноиды на {0..n-1} с нейтральным 0, по одному на класс изоморфизма
    """
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    representatives: Dict[Table, None] = {}
    for values in itertools.product(range(n), repeat=len(cells)):
        table = [[0] * n for _ in range(n)]
        for x in range(n):
            table[0][x] = table[x][0] = x
        for (i, j), v in zip(cells, values):
            table[i][j] = table[j][i] = v
        if not _is_associative(table, n):
            continue
        frozen = tuple(tuple(row) for row in table)
        canonical = min(_relabel(frozen, p) for p in _zero_fixing_permutations(n))
        representatives.setdefault(canonical)
    return sorted(representatives)


def _plain_multiplications(add: Table) -> Iterator[Table]:
    """Перебор по строкам: после каждой заполненной строки проверяются все определённые экземпляры"""
    n = len(add)
    mul = [[0] * n for _ in range(n)]
    for i in range(1, n):
        for j in range(1, n):
            mul[i][j] = UNSET

    def rows(i: int) -> Iterator[Table]:
        if i == n:
            frozen = tuple(tuple(row) for row in mul)
            if verify_axioms(CayleyTables("candidate", ELEMENT_NAMES[:n], add, frozen)).valid:
                yield frozen
            return
        for values in itertools.product(range(n), repeat=n - 1):
            mul[i][1:] = values
            if _consistent(add, mul, n):
                yield from rows(i + 1)
        mul[i][1:] = [UNSET] * (n - 1)

    yield from rows(1)


def _consistent(add: Table, mul: List[List[int]], n: int) -> bool:
    """Все полностью определённые экземпляры ассоциативности и дистрибутивности"""
    for x in range(n):
        row = mul[x]
        for y in range(n):
            xy = row[y]
            for z in range(n):
                yz = mul[y][z]
                if xy != UNSET and yz != UNSET:
                    left, right = mul[xy][z], row[yz]
                    if left != UNSET and right != UNSET and left != right:
                        return False
                xz = row[z]
                x_sum = row[add[y][z]]
                if xy != UNSET and xz != UNSET and x_sum != UNSET and x_sum != add[xy][xz]:
                    return False
                yx, zx, sum_x = mul[y][x], mul[z][x], mul[add[y][z]][x]
                if yx != UNSET and zx != UNSET and sum_x != UNSET and sum_x != add[yx][zx]:
                    return False
    return True


def _backtracking_multiplications(add: Table) -> Iterator[Table]:
    n = len(add)
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    mul = [[0] * n for _ in range(n)]
    for i, j in cells:
        mul[i][j] = UNSET

    def search(position: int) -> Iterator[Table]:
        if position == len(cells):
            yield tuple(tuple(row) for row in mul)
            return
        i, j = cells[position]
        for v in range(n):
            mul[i][j] = v
            if _consistent(add, mul, n):
                yield from search(position + 1)
        mul[i][j] = UNSET

    yield from search(0)


def enumerate_canonical_forms(n: int, strategy: Optional[str] = None, cap: int = 4) -> List[CanonicalForm]:
    """
    Канонические формы всех полуколец порядка n

    Args:
        n: Порядок
        strategy: plain или backtracking (по умолчанию plain до порядка 3)
        cap: Предельный порядок

    Raises:
        CapacityError: n вне [1, cap]
    """
    if not 1 <= n <= cap:
        raise CapacityError(f"order {n} outside the generator range 1..{cap}", {"order": n, "cap": cap})
    strategy = strategy or (PLAIN if n <= 3 else BACKTRACKING)
    search = _plain_multiplications if strategy == PLAIN else _backtracking_multiplications
    forms = set()
    for add in additive_monoids(n):
        found = 0
        for mul in search(add):
            forms.add(canonical_tables(add, mul))
            found += 1
        logger.debug("Умножения для аддитивного моноида", order=n, strategy=strategy, found=found)
    return sorted(forms, key=CanonicalForm.key)


def _build(form: CanonicalForm, index: int) -> Hemiring:
    n = form.order
    name = f"order{n}_{index}"
    return build_hemiring(CayleyTables.create(ELEMENT_NAMES[:n], form.add, form.mul, name))


def enumerate_hemirings(n: int, strategy: Optional[str] = None, cap: int = 4) -> List[Hemiring]:
    """
    Все полукольца порядка n, по одному на класс изоморфизма, в порядке канонических форм
    """
    forms = enumerate_canonical_forms(n, strategy, cap)
    logger.info("Полукольца перечислены", order=n, count=len(forms))
    return [_build(form, i) for i, form in enumerate(forms)]


def scan_all_tables(n: int) -> List[CanonicalForm]:
    """
    Независимая проверка полноты: все пары таблиц порядка n ≤ 2 без отсечений
    """
    if not 1 <= n <= 2:
        raise CapacityError(f"full table scan supports orders 1..2, got {n}", {"order": n})
    names = ELEMENT_NAMES[:n]
    tables = [
        tuple(tuple(values[i * n:(i + 1) * n]) for i in range(n))
        for values in itertools.product(range(n), repeat=n * n)
    ]
    forms = set()
    for add in tables:
        for mul in tables:
            if verify_axioms(CayleyTables("scan", names, add, mul)).valid:
                forms.add(canonical_tables(add, mul))
    return sorted(forms, key=CanonicalForm.key)
