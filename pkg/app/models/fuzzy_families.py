"""
Семейства нечётких h-идеалов на сетке и их классификация
"""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Dict, Iterator, List, Optional, Tuple

from app.models.classification import prime_element_witness, semiprime_element_witness
from app.models.fuzzy import FuzzySubset, Grid, LevelChain, is_fuzzy_ideal_mask, leq, meet
from app.models.fuzzy_products import h_intrinsic_product
from app.models.hemiring import Hemiring
from app.models.lattice import IdealFamily
from app.models.subsets import IdealKind
from app.utils.errors import CapacityError, DomainError, NonConstantRequiredError
from app.utils.logger import get_logger

logger = get_logger(__name__)

GRID_RELATIVE = "grid-relative"


@dataclass(frozen=True)
class FuzzyIdealFamily:
    """
    Все нечёткие идеалы вида kind со значениями на сетке
    """

    parent: Hemiring
    kind: IdealKind
    grid: Grid
    members: Tuple[FuzzySubset, ...]
    crisp_size: int

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[FuzzySubset]:
        return iter(self.members)

    @property
    def non_constant(self) -> Tuple[FuzzySubset, ...]:
        return tuple(m for m in self.members if not m.is_constant)

    def scope(self) -> Dict[str, Any]:
        return {
            "grid": self.grid.denominator,
            "kind": self.kind.value,
            "crisp_ideals": self.crisp_size,
            "fuzzy_ideals": len(self.members),
            "label": GRID_RELATIVE,
        }


def _chains(family: IdealFamily) -> Iterator[Tuple[int, ...]]:
    """Строгие цепочки I₁ ⊊ … ⊊ I_k = R (маски по возрастанию)"""
    masks = family.masks
    full = family.parent.kernel.full

    def extend(chain: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        yield chain
        smallest = chain[0]
        for m in masks:
            if m != smallest and m & smallest == m:
                yield from extend((m,) + chain)

    if full in masks:
        yield from extend((full,))


def count_chains(family: IdealFamily) -> Dict[int, int]:
    """Число строгих цепочек, оканчивающихся в R, по длине"""
    masks = sorted(family.masks, key=lambda m: -bin(m).count("1"))
    full = family.parent.kernel.full
    # by_length[m][k]: цепочки длины k с наименьшим элементом m
    by_length: Dict[int, Dict[int, int]] = {}
    for m in masks:
        counts: Dict[int, int] = {}
        if m == full:
            counts[1] = 1
        for bigger, bigger_counts in by_length.items():
            if bigger != m and m & bigger == m:
                for k, c in bigger_counts.items():
                    counts[k + 1] = counts.get(k + 1, 0) + c
        by_length[m] = counts
    totals: Dict[int, int] = {}
    for counts in by_length.values():
        for k, c in counts.items():
            totals[k] = totals.get(k, 0) + c
    return totals


def expected_size(family: IdealFamily, grid: Grid) -> int:
    return sum(c * comb(grid.denominator + 1, k) for k, c in count_chains(family).items())


def enumerate_fuzzy_ideals(
    family: IdealFamily,
    grid: Grid,
    budget: int = 100_000,
    limit: int = 50_000,
) -> FuzzyIdealFamily:
    """
    Нечёткие идеалы на сетке как убывающие пороги на цепочках чётких идеалов

    Args:
        family: Полное семейство чётких идеалов (h, left-h или right-h)
        grid: Сетка значений
        budget: Предел D × |family|
        limit: Предел числа порождаемых нечётких идеалов

    Returns:
        FuzzyIdealFamily, упорядоченное по значениям

    Raises:
        CapacityError: превышен бюджет или предел
    """
    if not family.complete:
        raise DomainError("fuzzy enumeration requires a complete crisp family")
    if grid.denominator * len(family) > budget:
        raise CapacityError(
            f"grid {grid.denominator} x {len(family)} ideals exceeds budget {budget}",
            {"denominator": grid.denominator, "ideals": len(family), "budget": budget},
        )
    size = expected_size(family, grid)
    if size > limit:
        raise CapacityError(
            f"{size} fuzzy ideals exceed the limit {limit}",
            {"expected": size, "limit": limit},
        )
    parent = family.parent
    descending = sorted(grid.values, reverse=True)
    members: List[FuzzySubset] = []
    for chain in _chains(family):
        for thresholds in itertools.combinations(descending, len(chain)):
            members.append(LevelChain(parent, tuple(zip(thresholds, chain))).to_fuzzy())
    members.sort(key=lambda m: m.values)
    logger.debug("Нечёткие идеалы перечислены", structure=parent.name, kind=family.kind.value,
                 grid=grid.denominator, count=len(members))
    return FuzzyIdealFamily(parent, family.kind, grid, tuple(members), len(family))


class FuzzyLattice:
    """
    Индексированное семейство: кэш ⊙-произведений для кванторов первого рода
    """

    def __init__(self, family: FuzzyIdealFamily):
        self.family = family
        self.members = family.members
        self._index = {m.values: i for i, m in enumerate(self.members)}
        self._odot: Dict[Tuple[int, int], FuzzySubset] = {}

    def index(self, fuzzy: FuzzySubset) -> Optional[int]:
        return self._index.get(fuzzy.values)

    def odot(self, i: int, j: int) -> FuzzySubset:
        key = (i, j)
        cached = self._odot.get(key)
        if cached is None:
            cached = h_intrinsic_product(self.members[i], self.members[j])
            self._odot[key] = cached
        return cached

    def h_prime_witness(self, delta: FuzzySubset) -> Optional[Tuple[FuzzySubset, FuzzySubset]]:
        """λ, μ семейства с λ⊙μ ≤ δ, λ ≰ δ, μ ≰ δ"""
        outside = [i for i, m in enumerate(self.members) if not leq(m, delta)]
        for i in outside:
            for j in outside:
                if leq(self.odot(i, j), delta):
                    return (self.members[i], self.members[j])
        return None

    def h_semiprime_witness(self, delta: FuzzySubset) -> Optional[FuzzySubset]:
        for i, m in enumerate(self.members):
            if not leq(m, delta) and leq(self.odot(i, i), delta):
                return m
        return None

    def irreducible_witness(self, delta: FuzzySubset) -> Optional[Tuple[FuzzySubset, FuzzySubset]]:
        # λ∧μ = δ только при λ, μ ≥ δ
        others = [m for m in self.members if m.values != delta.values and leq(delta, m)]
        for a in others:
            for b in others:
                if meet(a, b).values == delta.values:
                    return (a, b)
        return None

    def is_idempotent(self, delta: FuzzySubset) -> bool:
        i = self.index(delta)
        product = self.odot(i, i) if i is not None else h_intrinsic_product(delta, delta)
        return product == delta


def _sandwich_min(delta: FuzzySubset, a: int, b: int) -> Fraction:
    parent = delta.parent
    mul = parent.mul
    return min(delta[mul[mul[a][x]][b]] for x in range(parent.order))


def prime_second_witness(delta: FuzzySubset) -> Optional[Tuple[int, int, Fraction]]:
    """a, b, t: δ(axb) ≥ t для всех x, но δ(a) < t и δ(b) < t"""
    n = delta.parent.order
    for a in range(n):
        for b in range(n):
            t = _sandwich_min(delta, a, b)
            if max(delta[a], delta[b]) < t:
                return (a, b, t)
    return None


def semiprime_second_witness(delta: FuzzySubset) -> Optional[Tuple[int, Fraction]]:
    for a in range(delta.parent.order):
        t = _sandwich_min(delta, a, a)
        if delta[a] < t:
            return (a, t)
    return None


def prime_levels_witness(delta: FuzzySubset) -> Optional[Tuple[Fraction, int, int]]:
    """Собственное множество уровня, не являющееся простым"""
    full = delta.parent.kernel.full
    for t in delta.image:
        mask = delta.level_mask(t)
        if mask == full:
            continue
        found = prime_element_witness(delta.parent, mask)
        if found is not None:
            return (t,) + found
    return None


def semiprime_levels_witness(delta: FuzzySubset) -> Optional[Tuple[Fraction, int]]:
    full = delta.parent.kernel.full
    for t in delta.image:
        mask = delta.level_mask(t)
        if mask == full:
            continue
        found = semiprime_element_witness(delta.parent, mask)
        if found is not None:
            return (t, found)
    return None


def max_product_witness(delta: FuzzySubset) -> Optional[Tuple[int, int]]:
    """a, b с δ(ab) ≠ δ(a) ∨ δ(b)"""
    mul, n = delta.parent.mul, delta.parent.order
    for a in range(n):
        for b in range(n):
            if delta[mul[a][b]] != max(delta[a], delta[b]):
                return (a, b)
    return None


def square_witness(delta: FuzzySubset) -> Optional[int]:
    """a с δ(a²) ≠ δ(a)"""
    mul = delta.parent.mul
    for a in range(delta.parent.order):
        if delta[mul[a][a]] != delta[a]:
            return a
    return None


@dataclass(frozen=True)
class FuzzyClassification:
    """
    Свойства нечёткого h-идеала δ; вердикты первого рода относительны сетке
    """

    delta: FuzzySubset
    prime_second: bool
    prime_second_levels: bool
    semiprime_second: bool
    semiprime_second_levels: bool
    h_prime: bool
    h_semiprime: bool
    irreducible: bool
    idempotent: bool
    max_product: Optional[bool] = None
    square_preserving: Optional[bool] = None
    witnesses: Dict[str, List[str]] = field(default_factory=dict)
    disagreements: Tuple[str, ...] = ()
    scope: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "delta": self.delta.as_dict(),
            "prime_second": self.prime_second,
            "prime_second_levels": self.prime_second_levels,
            "semiprime_second": self.semiprime_second,
            "semiprime_second_levels": self.semiprime_second_levels,
            "h_prime": self.h_prime,
            "h_semiprime": self.h_semiprime,
            "irreducible": self.irreducible,
            "idempotent": self.idempotent,
            "max_product": self.max_product,
            "square_preserving": self.square_preserving,
            "witnesses": self.witnesses,
            "disagreements": list(self.disagreements),
            "scope": self.scope,
        }


def classify_fuzzy(delta: FuzzySubset, lattice: FuzzyLattice) -> FuzzyClassification:
    """
    Классифицирует непостоянный нечёткий h-идеал

    Args:
        delta: Нечёткий h-идеал δ
        lattice: Семейство нечётких h-идеалов на сетке, содержащей Im δ

    Returns:
        FuzzyClassification

    Raises:
        NonConstantRequiredError: δ постоянна
        DomainError: δ не нечёткий h-идеал или не лежит на сетке семейства
    """
    family = lattice.family
    if family.kind != IdealKind.H:
        raise DomainError("fuzzy classification requires the fuzzy h-ideal family")
    if delta.is_constant:
        raise NonConstantRequiredError({"delta": delta.as_dict()})
    if not is_fuzzy_ideal_mask(delta, IdealKind.H):
        raise DomainError(f"{delta} is not a fuzzy h-ideal")
    if not delta.on_grid(family.grid):
        raise DomainError(f"{delta} is not on the grid 1/{family.grid.denominator}")

    names = delta.parent.elements
    witnesses: Dict[str, List[str]] = {}

    prime = prime_second_witness(delta)
    if prime is not None:
        witnesses["prime_second"] = [names[prime[0]], names[prime[1]], str(prime[2])]
    prime_levels = prime_levels_witness(delta)
    if prime_levels is not None:
        witnesses["prime_second_levels"] = [str(prime_levels[0]), names[prime_levels[1]], names[prime_levels[2]]]
    semiprime = semiprime_second_witness(delta)
    if semiprime is not None:
        witnesses["semiprime_second"] = [names[semiprime[0]], str(semiprime[1])]
    semiprime_levels = semiprime_levels_witness(delta)
    if semiprime_levels is not None:
        witnesses["semiprime_second_levels"] = [str(semiprime_levels[0]), names[semiprime_levels[1]]]

    h_prime = lattice.h_prime_witness(delta)
    if h_prime is not None:
        witnesses["h_prime"] = [str(h_prime[0]), str(h_prime[1])]
    h_semiprime = lattice.h_semiprime_witness(delta)
    if h_semiprime is not None:
        witnesses["h_semiprime"] = [str(h_semiprime)]
    split = lattice.irreducible_witness(delta)
    if split is not None:
        witnesses["irreducible"] = [str(split[0]), str(split[1])]

    disagreements = []
    if (prime is None) != (prime_levels is None):
        disagreements.append("prime_second")
    if (semiprime is None) != (semiprime_levels is None):
        disagreements.append("semiprime_second")

    max_product = square_preserving = None
    if delta.parent.commutative_with_identity:
        found = max_product_witness(delta)
        max_product = found is None
        if found is not None:
            witnesses["max_product"] = [names[found[0]], names[found[1]]]
        single = square_witness(delta)
        square_preserving = single is None
        if single is not None:
            witnesses["square_preserving"] = [names[single]]
        if max_product != (prime is None):
            disagreements.append("max_product")
        if square_preserving != (semiprime is None):
            disagreements.append("square_preserving")

    return FuzzyClassification(
        delta=delta,
        prime_second=prime is None,
        prime_second_levels=prime_levels is None,
        semiprime_second=semiprime is None,
        semiprime_second_levels=semiprime_levels is None,
        h_prime=h_prime is None,
        h_semiprime=h_semiprime is None,
        irreducible=split is None,
        idempotent=lattice.is_idempotent(delta),
        max_product=max_product,
        square_preserving=square_preserving,
        witnesses=witnesses,
        disagreements=tuple(disagreements),
        scope=family.scope(),
    )
