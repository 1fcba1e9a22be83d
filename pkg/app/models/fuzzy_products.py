"""
Нечёткие h-произведение, h-внутреннее произведение и h-сумма

Основной алгоритм: сведение к множествам уровня; oracle_product вычисляет
sup-min по представлениям напрямую и служит независимой проверкой.
"""
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Set, Tuple

from app.models.fuzzy import ZERO, FuzzySubset, same_parent
from app.models.hemiring import TableKernel
from app.utils.errors import OracleMismatchError


class FuzzyOp(str, Enum):
    PRODUCT = "product"
    INTRINSIC = "intrinsic"
    SUM = "sum"


SYMBOLS = {FuzzyOp.PRODUCT: "∘", FuzzyOp.INTRINSIC: "⊙", FuzzyOp.SUM: "+"}


def _cut_product(kernel: TableKernel, left: int, right: int) -> int:
    return kernel.h_closure(kernel.pairwise_products(left, right))


def _cut_intrinsic(kernel: TableKernel, left: int, right: int) -> int:
    return kernel.h_closure(kernel.product(left, right))


def _cut_sum(kernel: TableKernel, left: int, right: int) -> int:
    return kernel.h_closure(kernel.sum_set(left, right))


_CUTS: Dict[FuzzyOp, Callable[[TableKernel, int, int], int]] = {
    FuzzyOp.PRODUCT: _cut_product,
    FuzzyOp.INTRINSIC: _cut_intrinsic,
    FuzzyOp.SUM: _cut_sum,
}


def level_cut_product(left: FuzzySubset, right: FuzzySubset, op: FuzzyOp) -> FuzzySubset:
    """
    Значение в x: наибольший порог t > 0 из Im λ ∪ Im μ, при котором x
    представим через элементы множеств уровня U(λ;t), U(μ;t); иначе 0

    Args:
        left: λ
        right: μ
        op: product (∘), intrinsic (⊙) или sum (+)

    Returns:
        Нечёткое подмножество
    """
    same_parent(left, right)
    parent = left.parent
    kernel = parent.kernel
    cut = _CUTS[FuzzyOp(op)]
    thresholds = sorted((set(left.image) | set(right.image)) - {ZERO}, reverse=True)
    values: List[Fraction] = [ZERO] * parent.order
    assigned = 0
    for t in thresholds:
        lower, upper = left.level_mask(t), right.level_mask(t)
        if not lower or not upper:
            continue
        reached = cut(kernel, lower, upper) & ~assigned
        for x in range(parent.order):
            if reached >> x & 1:
                values[x] = t
        assigned |= reached
        if assigned == kernel.full:
            break
    return FuzzySubset(parent, tuple(values))


def h_product(left: FuzzySubset, right: FuzzySubset) -> FuzzySubset:
    """λ ∘_h μ: представления x + a₁b₁ + y = a₂b₂ + y"""
    return level_cut_product(left, right, FuzzyOp.PRODUCT)


def h_intrinsic_product(left: FuzzySubset, right: FuzzySubset) -> FuzzySubset:
    """λ ⊙_h μ: представления x + Σaᵢbᵢ + z = Σa′ⱼb′ⱼ + z"""
    return level_cut_product(left, right, FuzzyOp.INTRINSIC)


def h_sum(left: FuzzySubset, right: FuzzySubset) -> FuzzySubset:
    """λ +_h μ: представления x + (a₁+b₁) + z = (a₂+b₂) + z"""
    return level_cut_product(left, right, FuzzyOp.SUM)


def _side_terms(left: FuzzySubset, right: FuzzySubset, op: FuzzyOp) -> List[Tuple[int, Fraction]]:
    parent = left.parent
    table = parent.add if op == FuzzyOp.SUM else parent.mul
    return [
        (table[a][b], min(left[a], right[b]))
        for a in range(parent.order)
        for b in range(parent.order)
    ]


def _best_sides(left: FuzzySubset, right: FuzzySubset, op: FuzzyOp) -> Dict[int, Fraction]:
    """
    Для каждого значения s одной стороны уравнения: наибольший минимум
    принадлежностей среди её представлений
    """
    terms = _side_terms(left, right, op)
    states: Set[Tuple[int, Fraction]] = set(terms)
    if op == FuzzyOp.INTRINSIC:
        add = left.parent.add
        frontier = set(states)
        while frontier:
            fresh = set()
            for s, m in frontier:
                for p, w in terms:
                    state = (add[s][p], min(m, w))
                    if state not in states:
                        fresh.add(state)
            states |= fresh
            frontier = fresh
    best: Dict[int, Fraction] = {}
    for s, m in states:
        if m > best.get(s, -1):
            best[s] = m
    return best


def oracle_product(left: FuzzySubset, right: FuzzySubset, op: FuzzyOp) -> FuzzySubset:
    """
    sup-min по всем представлениям x + s₁ + z = s₂ + z, где s₁, s₂: значения
    сторон (одно произведение, непустая сумма произведений или одна сумма)
    """
    same_parent(left, right)
    parent = left.parent
    add, n = parent.add, parent.order
    best = _best_sides(left, right, FuzzyOp(op))
    sides = list(best.items())
    values = []
    for x in range(n):
        value = ZERO
        for s1, m1 in sides:
            for s2, m2 in sides:
                candidate = min(m1, m2)
                if candidate <= value:
                    continue
                if any(add[add[x][s1]][z] == add[s2][z] for z in range(n)):
                    value = candidate
        values.append(value)
    return FuzzySubset(parent, tuple(values))


def cross_check(left: FuzzySubset, right: FuzzySubset, op: FuzzyOp) -> FuzzySubset:
    """
    Raises:
        OracleMismatchError: сведение к уровням и прямой перебор разошлись
    """
    computed = level_cut_product(left, right, op)
    expected = oracle_product(left, right, op)
    if computed != expected:
        names = left.parent.elements
        x = next(i for i in range(left.parent.order) if computed[i] != expected[i])
        raise OracleMismatchError(
            f"level-cut {FuzzyOp(op).value} differs from oracle at {names[x]}: "
            f"{computed[x]} != {expected[x]}",
            {"element": names[x], "level_cut": str(computed[x]), "oracle": str(expected[x])},
        )
    return computed
