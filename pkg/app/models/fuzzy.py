"""
Нечёткие подмножества на рациональной сетке {0, 1/D, ..., 1}
"""
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from app.models.bitset import is_subset
from app.models.hemiring import Hemiring
from app.models.subsets import CheckResult, IdealKind, Subset, conditions_of, is_ideal_mask, is_ideal_of_kind
from app.utils.errors import DomainError, InputError

GridValue = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Grid:
    """Сетка значений принадлежности с общим знаменателем D"""

    denominator: int = 20

    def __post_init__(self):
        if self.denominator < 1:
            raise InputError("grid denominator must be positive")

    @property
    def values(self) -> Tuple[GridValue, ...]:
        return tuple(Fraction(k, self.denominator) for k in range(self.denominator + 1))

    def contains(self, value: Fraction) -> bool:
        return 0 <= value <= 1 and self.denominator % value.denominator == 0

    def parse(self, text: str) -> GridValue:
        """Разбирает "p/q" (допускаются также целые и десятичные записи)"""
        try:
            value = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"invalid membership value {text!r}")
        if not self.contains(value):
            raise InputError(f"membership value {text} is not on the grid 1/{self.denominator}")
        return value


@dataclass(frozen=True)
class FuzzySubset:
    """
    Отображение носителя в [0, 1]; значения хранятся точными дробями
    """

    parent: Hemiring
    values: Tuple[GridValue, ...]

    def __post_init__(self):
        if len(self.values) != self.parent.order:
            raise InputError(f"expected {self.parent.order} membership values, got {len(self.values)}")
        for value in self.values:
            if not isinstance(value, Fraction) or not 0 <= value <= 1:
                raise InputError(f"membership value {value!r} outside [0, 1]")

    @classmethod
    def of(cls, parent: Hemiring, values: Sequence) -> "FuzzySubset":
        return cls(parent, tuple(Fraction(v) for v in values))

    @classmethod
    def from_mapping(cls, parent: Hemiring, values: Mapping[str, Fraction]) -> "FuzzySubset":
        unknown = set(values) - set(parent.elements)
        if unknown:
            raise InputError(f"unknown elements {sorted(unknown)} in {parent.name}")
        missing = [x for x in parent.elements if x not in values]
        if missing:
            raise InputError(f"missing membership values for {missing}")
        return cls(parent, tuple(Fraction(values[x]) for x in parent.elements))

    @classmethod
    def constant(cls, parent: Hemiring, value) -> "FuzzySubset":
        return cls(parent, (Fraction(value),) * parent.order)

    @classmethod
    def characteristic(cls, subset: Subset) -> "FuzzySubset":
        return two_valued_indicator(subset, ONE, ZERO)

    def __getitem__(self, index: int) -> GridValue:
        return self.values[index]

    @cached_property
    def image(self) -> Tuple[GridValue, ...]:
        """Различные значения по убыванию"""
        return tuple(sorted(set(self.values), reverse=True))

    @property
    def is_constant(self) -> bool:
        return len(self.image) == 1

    def level_mask(self, t: Fraction) -> int:
        mask = 0
        for i, value in enumerate(self.values):
            if value >= t:
                mask |= 1 << i
        return mask

    def on_grid(self, grid: Grid) -> bool:
        return all(grid.contains(v) for v in self.values)

    def as_dict(self) -> Dict[str, str]:
        return {x: str(v) for x, v in zip(self.parent.elements, self.values)}

    def __str__(self) -> str:
        return "(" + ", ".join(f"{x}:{v}" for x, v in self.as_dict().items()) + ")"


def same_parent(left: FuzzySubset, right: FuzzySubset) -> None:
    if left.parent is not right.parent and left.parent != right.parent:
        raise DomainError("fuzzy subsets belong to different hemirings")


def level_set(fuzzy: FuzzySubset, t: Fraction) -> Subset:
    """U(λ;t) = {x : λ(x) ≥ t}"""
    return Subset(fuzzy.parent, fuzzy.level_mask(Fraction(t)))


def two_valued_indicator(subset: Subset, t: Fraction, s: Fraction) -> FuzzySubset:
    """
    λ_A(x) = t на A и s вне A

    Raises:
        DomainError: s ≥ t
    """
    t, s = Fraction(t), Fraction(s)
    if not 0 <= s < t <= 1:
        raise DomainError(f"two-valued indicator requires 0 <= s < t <= 1, got t={t}, s={s}")
    return FuzzySubset(subset.parent, tuple(t if i in subset else s for i in range(subset.parent.order)))


def meet(left: FuzzySubset, right: FuzzySubset) -> FuzzySubset:
    same_parent(left, right)
    return FuzzySubset(left.parent, tuple(min(a, b) for a, b in zip(left.values, right.values)))


def join(left: FuzzySubset, right: FuzzySubset) -> FuzzySubset:
    same_parent(left, right)
    return FuzzySubset(left.parent, tuple(max(a, b) for a, b in zip(left.values, right.values)))


def leq(left: FuzzySubset, right: FuzzySubset) -> bool:
    same_parent(left, right)
    return all(a <= b for a, b in zip(left.values, right.values))


@dataclass(frozen=True)
class LevelChain:
    """
    Строго убывающие пороги с вложенными множествами уровня
    """

    parent: Hemiring
    levels: Tuple[Tuple[GridValue, int], ...]

    def __post_init__(self):
        previous: Optional[Tuple[GridValue, int]] = None
        for t, mask in self.levels:
            if previous is not None:
                if t >= previous[0]:
                    raise DomainError("level thresholds must strictly decrease")
                if not is_subset(previous[1], mask):
                    raise DomainError("level sets must be nested")
            previous = (t, mask)

    @classmethod
    def of(cls, fuzzy: FuzzySubset) -> "LevelChain":
        return cls(fuzzy.parent, tuple((t, fuzzy.level_mask(t)) for t in fuzzy.image))

    def subsets(self) -> List[Tuple[GridValue, Subset]]:
        return [(t, Subset(self.parent, mask)) for t, mask in self.levels]

    def to_fuzzy(self) -> FuzzySubset:
        """Значение элемента: наибольший порог, в множестве уровня которого он лежит"""
        values = []
        for x in range(self.parent.order):
            value = ZERO
            for t, mask in self.levels:
                if mask >> x & 1:
                    value = t
                    break
            values.append(value)
        return FuzzySubset(self.parent, tuple(values))


def _direct_violation(fuzzy: FuzzySubset, condition: str) -> Optional[Tuple[int, ...]]:
    parent = fuzzy.parent
    add, mul, n = parent.add, parent.mul, parent.order
    v = fuzzy.values
    if condition == "sum":
        for a in range(n):
            for b in range(n):
                if v[add[a][b]] < min(v[a], v[b]):
                    return (a, b)
    elif condition == "left_mul":
        for r in range(n):
            for a in range(n):
                if v[mul[r][a]] < v[a]:
                    return (r, a)
    elif condition == "right_mul":
        for a in range(n):
            for r in range(n):
                if v[mul[a][r]] < v[a]:
                    return (a, r)
    elif condition == "k":
        for x in range(n):
            for a in range(n):
                b = add[x][a]
                if v[x] < min(v[a], v[b]):
                    return (x, a, b)
    elif condition == "h":
        for x in range(n):
            for y in range(n):
                for a in range(n):
                    left = add[add[x][a]][y]
                    for b in range(n):
                        if left == add[b][y] and v[x] < min(v[a], v[b]):
                            return (x, a, b, y)
    return None


def is_fuzzy_ideal_of_kind(fuzzy: FuzzySubset, kind: IdealKind, method: str = "direct") -> CheckResult:
    """
    Нечёткий идеал заданного вида

    Args:
        fuzzy: Нечёткое подмножество λ
        kind: Вид идеала
        method: "direct": неравенства по определению, "levels": все множества уровня t ∈ Im λ

    Returns:
        CheckResult; для "levels" свидетель начинается с ("level", t)
    """
    names = fuzzy.parent.elements
    if method == "direct":
        for condition in conditions_of(kind):
            found = _direct_violation(fuzzy, condition)
            if found is not None:
                return CheckResult(False, (condition,) + tuple(names[i] for i in found))
        return CheckResult(True)
    if method == "levels":
        for t in fuzzy.image:
            verdict = is_ideal_of_kind(level_set(fuzzy, t), kind)
            if not verdict:
                return CheckResult(False, ("level", str(t)) + verdict.witness)
        return CheckResult(True)
    raise InputError(f"unknown method {method!r}")


def is_fuzzy_ideal_mask(fuzzy: FuzzySubset, kind: IdealKind = IdealKind.H) -> bool:
    """Быстрая проверка через множества уровня, без свидетеля"""
    return all(is_ideal_mask(fuzzy.parent, fuzzy.level_mask(t), kind) for t in fuzzy.image)


def all_fuzzy_subsets(parent: Hemiring, grid: Grid) -> Iterator[FuzzySubset]:
    for values in itertools.product(grid.values, repeat=parent.order):
        yield FuzzySubset(parent, values)


def random_fuzzy_subset(parent: Hemiring, grid: Grid, rng: random.Random) -> FuzzySubset:
    values = grid.values
    return FuzzySubset(parent, tuple(rng.choice(values) for _ in range(parent.order)))
