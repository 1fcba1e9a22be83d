"""
Перечисление идеалов и решётка h-идеалов
"""
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from app.models.bitset import is_subset
from app.models.hemiring import Hemiring
from app.models.subsets import IdealKind, Subset, generated_mask, is_ideal_mask
from app.utils.errors import CapacityError, DomainError
from app.utils.logger import get_logger

logger = get_logger(__name__)

BRUTE_FORCE = "brute-force"
CLOSURE_SYSTEM = "closure-system"


@dataclass(frozen=True)
class IdealFamily:
    """
    Перечисленные идеалы одного вида, упорядоченные по маске
    """

    parent: Hemiring
    kind: IdealKind
    members: Tuple[Subset, ...]
    complete: bool = True
    strategy: str = BRUTE_FORCE

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    @property
    def masks(self) -> Tuple[int, ...]:
        return tuple(m.mask for m in self.members)

    @property
    def proper(self) -> Tuple[Subset, ...]:
        return tuple(m for m in self.members if not m.is_whole)

    def contains(self, subset: Subset) -> bool:
        return subset.mask in self.masks

    def smallest_containing(self, subset: Subset) -> Optional[Subset]:
        """Наименьший член семейства, содержащий подмножество"""
        candidates = [m for m in self.members if is_subset(subset.mask, m.mask)]
        for candidate in candidates:
            if all(is_subset(candidate.mask, other.mask) for other in candidates):
                return candidate
        return None

    def format(self) -> List[str]:
        return [m.format() for m in self.members]


def enumerate_ideals(
    parent: Hemiring,
    kind: IdealKind = IdealKind.H,
    brute_force_cap: int = 16,
    closure_system_cap: int = 32,
) -> IdealFamily:
    """
    Все идеалы заданного вида

    Args:
        parent: Полукольцо
        kind: Вид идеала
        brute_force_cap: До этого порядка перебираются все маски с нулём
        closure_system_cap: До этого порядка строится система замыканий из главных идеалов

    Returns:
        Полное семейство, отсортированное по маске

    Raises:
        CapacityError: порядок выше обоих лимитов
    """
    kind = IdealKind(kind)
    n = parent.order
    if n <= brute_force_cap:
        # каждый идеал содержит 0 = 0·a, поэтому перебираются только нечётные маски
        masks = [m for m in range(1, parent.kernel.full + 1, 2) if is_ideal_mask(parent, m, kind)]
        strategy = BRUTE_FORCE
    elif n <= closure_system_cap:
        masks = sorted(_closure_system(parent, kind))
        strategy = CLOSURE_SYSTEM
    else:
        raise CapacityError(
            f"order {n} exceeds ideal enumeration cap {closure_system_cap}",
            {"order": n, "brute_force_cap": brute_force_cap, "closure_system_cap": closure_system_cap},
        )
    logger.debug("Идеалы перечислены", structure=parent.name, kind=kind.value,
                 count=len(masks), strategy=strategy)
    return IdealFamily(parent, kind, tuple(Subset(parent, m) for m in masks), True, strategy)


def _closure_system(parent: Hemiring, kind: IdealKind) -> set:
    # каждый идеал: объединение главных идеалов своих элементов
    principal = {generated_mask(parent, 1 << x, kind) for x in range(parent.order)}
    family = set(principal)
    frontier = set(principal)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in principal:
                joined = generated_mask(parent, a | b, kind)
                if joined not in family:
                    fresh.add(joined)
        family |= fresh
        frontier = fresh
    return family


def enumerate_h_ideals(parent: Hemiring, brute_force_cap: int = 16, closure_system_cap: int = 32) -> IdealFamily:
    return enumerate_ideals(parent, IdealKind.H, brute_force_cap, closure_system_cap)


class IdealLattice:
    """
    Решётка полного семейства: join = замыкание суммы, meet = пересечение
    """

    def __init__(self, family: IdealFamily):
        if not family.complete:
            raise DomainError("lattice operations require a complete family")
        self.family = family
        self.parent = family.parent
        self._masks = set(family.masks)

    def _check(self, *subsets: Subset) -> None:
        for subset in subsets:
            if subset.mask not in self._masks:
                raise DomainError(f"{subset} is not a member of the family")

    def join(self, left: Subset, right: Subset) -> Subset:
        self._check(left, right)
        kernel = self.parent.kernel
        if self.family.kind == IdealKind.H:
            mask = kernel.h_closure(kernel.sum_set(left.mask, right.mask))
        else:
            mask = generated_mask(self.parent, left.mask | right.mask, self.family.kind)
        return Subset(self.parent, mask)

    def meet(self, left: Subset, right: Subset) -> Subset:
        self._check(left, right)
        return Subset(self.parent, left.mask & right.mask)

    def residual(self, left: Subset, right: Subset) -> Optional[Subset]:
        """Наибольший I семейства с A∩I ⊆ B; None, если его нет"""
        self._check(left, right)
        candidates = [m for m in self.family.members if is_subset(left.mask & m.mask, right.mask)]
        for candidate in candidates:
            if all(is_subset(other.mask, candidate.mask) for other in candidates):
                return candidate
        return None

    def closure_violation(self) -> Optional[Tuple[str, Subset, Subset]]:
        """Первая пара, чьё пересечение или join выпадает из семейства"""
        members = self.family.members
        for a in members:
            for b in members:
                if a.mask & b.mask not in self._masks:
                    return ("meet", a, b)
                if self.join(a, b).mask not in self._masks:
                    return ("join", a, b)
        return None

    def distributivity_witness(self) -> Optional[Tuple[Subset, Subset, Subset]]:
        members = self.family.members
        for a in members:
            for b in members:
                for c in members:
                    lhs = self.meet(a, self.join(b, c))
                    rhs = self.join(self.meet(a, b), self.meet(a, c))
                    if lhs != rhs:
                        return (a, b, c)
        return None

    def is_distributive(self) -> bool:
        return self.distributivity_witness() is None

    def brouwerian_witness(self) -> Optional[Tuple[Subset, Subset]]:
        members = self.family.members
        for a in members:
            for b in members:
                if self.residual(a, b) is None:
                    return (a, b)
        return None

    def is_brouwerian(self) -> bool:
        return self.brouwerian_witness() is None
