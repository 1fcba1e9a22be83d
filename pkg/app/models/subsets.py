"""
Чёткие подмножества: h-замыкание, аддитивное замыкание, произведения, предикаты идеалов
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Optional, Tuple

from app.models.bitset import bits_to_mask, is_subset, iter_bits, popcount
from app.models.hemiring import Hemiring
from app.utils.errors import DomainError, InputError


@dataclass(frozen=True)
class Subset:
    """
    Подмножество носителя, хранимое маской
    """

    parent: Hemiring
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask <= self.parent.kernel.full:
            raise InputError(f"mask {self.mask} does not fit order {self.parent.order}")

    @classmethod
    def of(cls, parent: Hemiring, indices: Iterable[int]) -> "Subset":
        return cls(parent, bits_to_mask(indices))

    @classmethod
    def parse(cls, parent: Hemiring, text: str) -> "Subset":
        """Разбирает список имён через запятую ("0,a"); пустая строка: пустое множество"""
        names = [x.strip() for x in text.split(",") if x.strip()]
        return cls.of(parent, (parent.index(x) for x in names))

    @classmethod
    def whole(cls, parent: Hemiring) -> "Subset":
        return cls(parent, parent.kernel.full)

    @classmethod
    def empty(cls, parent: Hemiring) -> "Subset":
        return cls(parent, 0)

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self.parent.elements[i] for i in iter_bits(self.mask))

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_whole(self) -> bool:
        return self.mask == self.parent.kernel.full

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __len__(self) -> int:
        return popcount(self.mask)

    def issubset(self, other: "Subset") -> bool:
        _same_parent(self, other)
        return is_subset(self.mask, other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        _same_parent(self, other)
        return Subset(self.parent, self.mask & other.mask)

    def __or__(self, other: "Subset") -> "Subset":
        _same_parent(self, other)
        return Subset(self.parent, self.mask | other.mask)

    def format(self) -> str:
        return ",".join(self.names)

    def __str__(self) -> str:
        return "{" + self.format() + "}"

    def __repr__(self) -> str:
        return f"Subset({self.parent.name}, {self})"


def _same_parent(*subsets: Subset) -> None:
    first = subsets[0].parent
    for other in subsets[1:]:
        if other.parent is not first and other.parent != first:
            raise DomainError("subsets belong to different hemirings")


def _require_nonempty(operation: str, *subsets: Subset) -> None:
    for subset in subsets:
        if subset.is_empty:
            raise DomainError(f"{operation} requires a non-empty subset")


def h_closure(subset: Subset) -> Subset:
    """
    h-замыкание: {x : x+a+y = b+y для некоторых a, b ∈ A, y ∈ R}

    Args:
        subset: Непустое подмножество A

    Returns:
        Подмножество Ā
    """
    _require_nonempty("h_closure", subset)
    return Subset(subset.parent, subset.parent.kernel.h_closure(subset.mask))


def additive_closure(subset: Subset) -> Subset:
    """Все непустые конечные суммы элементов P"""
    _require_nonempty("additive_closure", subset)
    return Subset(subset.parent, subset.parent.kernel.additive_closure(subset.mask))


def sum_set(left: Subset, right: Subset) -> Subset:
    """Поэлементные суммы {a+b}"""
    _same_parent(left, right)
    _require_nonempty("sum_set", left, right)
    return Subset(left.parent, left.parent.kernel.sum_set(left.mask, right.mask))


def product_set(left: Subset, right: Subset) -> Subset:
    """
    Произведение AB: все непустые конечные суммы попарных произведений a·b
    """
    _same_parent(left, right)
    _require_nonempty("product_set", left, right)
    return Subset(left.parent, left.parent.kernel.product(left.mask, right.mask))


class IdealKind(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"
    K = "k"
    H = "h"
    LEFT_H = "left-h"
    RIGHT_H = "right-h"


# условия замкнутости для каждого вида идеала, в порядке проверки
_CONDITIONS: Dict[IdealKind, Tuple[str, ...]] = {
    IdealKind.LEFT: ("sum", "left_mul"),
    IdealKind.RIGHT: ("sum", "right_mul"),
    IdealKind.TWO_SIDED: ("sum", "left_mul", "right_mul"),
    IdealKind.K: ("sum", "left_mul", "right_mul", "k"),
    IdealKind.H: ("sum", "left_mul", "right_mul", "h"),
    IdealKind.LEFT_H: ("sum", "left_mul", "h"),
    IdealKind.RIGHT_H: ("sum", "right_mul", "h"),
}


def conditions_of(kind: IdealKind) -> Tuple[str, ...]:
    return _CONDITIONS[IdealKind(kind)]


@dataclass(frozen=True)
class CheckResult:
    """Вердикт предиката и кортеж-свидетель при отказе"""

    holds: bool
    witness: Optional[Tuple[str, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


def _find_violation(parent: Hemiring, mask: int, condition: str) -> Optional[Tuple[int, ...]]:
    add, mul, n = parent.add, parent.mul, parent.order
    members = list(iter_bits(mask))
    outside = [x for x in range(n) if not mask >> x & 1]
    if condition == "sum":
        for a in members:
            for b in members:
                if not mask >> add[a][b] & 1:
                    return (a, b)
    elif condition == "left_mul":
        for r in range(n):
            for a in members:
                if not mask >> mul[r][a] & 1:
                    return (r, a)
    elif condition == "right_mul":
        for a in members:
            for r in range(n):
                if not mask >> mul[a][r] & 1:
                    return (a, r)
    elif condition == "k":
        for x in outside:
            for a in members:
                if mask >> add[x][a] & 1:
                    return (x, a, add[x][a])
    elif condition == "h":
        if is_subset(parent.kernel.h_closure(mask), mask):
            return None
        for x in outside:
            for y in range(n):
                for a in members:
                    left = add[add[x][a]][y]
                    for b in members:
                        if left == add[b][y]:
                            return (x, a, b, y)
    return None


def is_ideal_of_kind(subset: Subset, kind: IdealKind) -> CheckResult:
    """
    Проверяет, является ли подмножество идеалом заданного вида

    Args:
        subset: Непустое подмножество
        kind: left, right, two-sided, k, h, left-h, right-h

    Returns:
        CheckResult; свидетель: (условие, элементы...), например ("h", x, a, b, y)
    """
    _require_nonempty("is_ideal_of_kind", subset)
    parent = subset.parent
    for condition in conditions_of(kind):
        found = _find_violation(parent, subset.mask, condition)
        if found is not None:
            return CheckResult(False, (condition,) + tuple(parent.elements[i] for i in found))
    return CheckResult(True)


def is_ideal_mask(parent: Hemiring, mask: int, kind: IdealKind) -> bool:
    if mask == 0:
        return False
    return all(_find_violation(parent, mask, c) is None for c in conditions_of(kind))


def _closure_step(parent: Hemiring, mask: int, condition: str) -> int:
    kernel = parent.kernel
    if condition == "sum":
        return kernel.sum_set(mask, mask)
    if condition == "left_mul":
        return kernel.pairwise_products(kernel.full, mask)
    if condition == "right_mul":
        return kernel.pairwise_products(mask, kernel.full)
    if condition == "k":
        fibres = kernel.fibres
        members = list(iter_bits(mask))
        grown = 0
        for a in members:
            for b in members:
                grown |= fibres[a][b]
        return grown
    return kernel.h_closure(mask)


def generated_mask(parent: Hemiring, mask: int, kind: IdealKind) -> int:
    """Наименьший идеал вида kind, содержащий маску (ноль входит всегда)"""
    conditions = conditions_of(kind)
    current = mask | 1
    while True:
        grown = current
        for condition in conditions:
            grown |= _closure_step(parent, grown, condition)
        if grown == current:
            return current
        current = grown


def generated_ideal(generators: Subset, kind: IdealKind) -> Subset:
    return Subset(generators.parent, generated_mask(generators.parent, generators.mask, kind))


def generated_h_ideal(generators: Subset) -> Subset:
    """
    Наименьший h-идеал, содержащий X (для пустого X: h-замыкание {0})

    Неподвижная точка: ноль и X, замыкание по сумме, умножению на R слева и справа
    и h-условию.
    """
    return generated_ideal(generators, IdealKind.H)


@dataclass(frozen=True)
class HemiregularityReport:
    """
    h-регулярность: для каждого a найдены x, y, z с a + axa + z = aya + z
    """

    regular: bool
    witnesses: Dict[str, Tuple[str, str, str]]
    failing: Tuple[str, ...]


def hemiregular_witness(parent: Hemiring, a: int) -> Optional[Tuple[int, int, int]]:
    add, mul, n = parent.add, parent.mul, parent.order
    for x in range(n):
        left_core = add[a][mul[mul[a][x]][a]]
        for y in range(n):
            right_core = mul[mul[a][y]][a]
            for z in range(n):
                if add[left_core][z] == add[right_core][z]:
                    return (x, y, z)
    return None


def is_h_hemiregular(parent: Hemiring) -> HemiregularityReport:
    names = parent.elements
    witnesses: Dict[str, Tuple[str, str, str]] = {}
    failing = []
    for a in range(parent.order):
        found = hemiregular_witness(parent, a)
        if found is None:
            failing.append(names[a])
        else:
            witnesses[names[a]] = tuple(names[i] for i in found)
    return HemiregularityReport(regular=not failing, witnesses=witnesses, failing=tuple(failing))
