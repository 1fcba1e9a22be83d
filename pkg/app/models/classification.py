"""
Классификация h-идеалов: простые, полупростые, неприводимые, h-идемпотентные
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from app.models.bitset import is_subset
from app.models.hemiring import Hemiring
from app.models.lattice import IdealFamily
from app.models.subsets import IdealKind, Subset, is_ideal_of_kind
from app.utils.errors import DomainError

NOT_PROPER = "not proper"

Witness = Tuple[str, ...]


@dataclass(frozen=True)
class Classification:
    """
    Свойства h-идеала P; prime/semiprime вычислены двумя способами
    """

    ideal: Subset
    is_proper: bool
    is_prime: bool
    prime_elementwise: bool
    is_semiprime: bool
    semiprime_elementwise: bool
    is_irreducible: bool
    is_h_idempotent: bool
    witnesses: Dict[str, Optional[Witness]] = field(default_factory=dict)
    disagreements: Tuple[str, ...] = ()
    reason: Optional[str] = None
    # тесты ab ∈ P и a² ∈ P, только для коммутативных структур с единицей
    prime_commutative: Optional[bool] = None
    semiprime_commutative: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ideal": self.ideal.format(),
            "proper": self.is_proper,
            "prime": self.is_prime,
            "prime_elementwise": self.prime_elementwise,
            "semiprime": self.is_semiprime,
            "semiprime_elementwise": self.semiprime_elementwise,
            "irreducible": self.is_irreducible,
            "h_idempotent": self.is_h_idempotent,
            "prime_commutative": self.prime_commutative,
            "semiprime_commutative": self.semiprime_commutative,
            "witnesses": {k: list(v) for k, v in self.witnesses.items() if v is not None},
            "disagreements": list(self.disagreements),
            "reason": self.reason,
        }


def _sandwich(parent: Hemiring, a: int, b: int) -> int:
    """Маска aRb = {a·r·b : r ∈ R}"""
    mul = parent.mul
    row = mul[a]
    mask = 0
    for r in range(parent.order):
        mask |= 1 << mul[row[r]][b]
    return mask


def prime_pair_witness(family: IdealFamily, mask: int) -> Optional[Tuple[Subset, Subset]]:
    """Пара h-идеалов с AB ⊆ P, A ⊄ P, B ⊄ P"""
    kernel = family.parent.kernel
    for a in family.members:
        if is_subset(a.mask, mask):
            continue
        for b in family.members:
            if is_subset(b.mask, mask):
                continue
            if is_subset(kernel.product(a.mask, b.mask), mask):
                return (a, b)
    return None


def prime_element_witness(parent: Hemiring, mask: int) -> Optional[Tuple[int, int]]:
    """Элементы a, b ∉ P с aRb ⊆ P"""
    outside = [x for x in range(parent.order) if not mask >> x & 1]
    for a in outside:
        for b in outside:
            if is_subset(_sandwich(parent, a, b), mask):
                return (a, b)
    return None


def semiprime_family_witness(family: IdealFamily, mask: int) -> Optional[Subset]:
    kernel = family.parent.kernel
    for b in family.members:
        if not is_subset(b.mask, mask) and is_subset(kernel.product(b.mask, b.mask), mask):
            return b
    return None


def semiprime_element_witness(parent: Hemiring, mask: int) -> Optional[int]:
    for a in range(parent.order):
        if not mask >> a & 1 and is_subset(_sandwich(parent, a, a), mask):
            return a
    return None


def irreducible_witness(family: IdealFamily, mask: int) -> Optional[Tuple[Subset, Subset]]:
    for a in family.members:
        if a.mask == mask:
            continue
        for b in family.members:
            if b.mask != mask and a.mask & b.mask == mask:
                return (a, b)
    return None


def is_h_idempotent_mask(parent: Hemiring, mask: int) -> bool:
    kernel = parent.kernel
    return kernel.h_closure(kernel.product(mask, mask)) == mask


def commutative_prime_witness(parent: Hemiring, mask: int) -> Optional[Tuple[int, int]]:
    """a, b ∉ P с ab ∈ P"""
    mul = parent.mul
    outside = [x for x in range(parent.order) if not mask >> x & 1]
    for a in outside:
        for b in outside:
            if mask >> mul[a][b] & 1:
                return (a, b)
    return None


def commutative_semiprime_witness(parent: Hemiring, mask: int) -> Optional[int]:
    mul = parent.mul
    for a in range(parent.order):
        if not mask >> a & 1 and mask >> mul[a][a] & 1:
            return a
    return None


def classify_h_ideal(ideal: Subset, family: IdealFamily) -> Classification:
    """
    Классифицирует h-идеал относительно полного семейства h-идеалов

    Args:
        ideal: h-идеал P
        family: Полное семейство h-идеалов той же структуры

    Returns:
        Classification; для P = R простота, полупростота и неприводимость ложны
        с причиной "not proper"

    Raises:
        DomainError: P не h-идеал или семейство неполное
    """
    parent = ideal.parent
    if family.kind != IdealKind.H or not family.complete:
        raise DomainError("classification requires the complete h-ideal family")
    if ideal.is_empty or not is_ideal_of_kind(ideal, IdealKind.H):
        raise DomainError(f"{ideal} is not an h-ideal of {parent.name}")

    names = parent.elements
    mask = ideal.mask
    idempotent = is_h_idempotent_mask(parent, mask)
    witnesses: Dict[str, Optional[Witness]] = {}
    if not idempotent:
        product = parent.kernel.h_closure(parent.kernel.product(mask, mask))
        witnesses["h_idempotent"] = (Subset(parent, product).format(),)

    if ideal.is_whole:
        return Classification(
            ideal=ideal,
            is_proper=False,
            is_prime=False,
            prime_elementwise=False,
            is_semiprime=False,
            semiprime_elementwise=False,
            is_irreducible=False,
            is_h_idempotent=idempotent,
            witnesses=witnesses,
            reason=NOT_PROPER,
        )

    pair = prime_pair_witness(family, mask)
    if pair is not None:
        witnesses["prime"] = (pair[0].format(), pair[1].format())
    element_pair = prime_element_witness(parent, mask)
    if element_pair is not None:
        witnesses["prime_elementwise"] = tuple(names[i] for i in element_pair)
    square = semiprime_family_witness(family, mask)
    if square is not None:
        witnesses["semiprime"] = (square.format(),)
    element = semiprime_element_witness(parent, mask)
    if element is not None:
        witnesses["semiprime_elementwise"] = (names[element],)
    split = irreducible_witness(family, mask)
    if split is not None:
        witnesses["irreducible"] = (split[0].format(), split[1].format())

    disagreements: List[str] = []
    if (pair is None) != (element_pair is None):
        disagreements.append("prime")
    if (square is None) != (element is None):
        disagreements.append("semiprime")

    prime_commutative = semiprime_commutative = None
    if parent.commutative_with_identity:
        found = commutative_prime_witness(parent, mask)
        prime_commutative = found is None
        if found is not None:
            witnesses["prime_commutative"] = tuple(names[i] for i in found)
        single = commutative_semiprime_witness(parent, mask)
        semiprime_commutative = single is None
        if single is not None:
            witnesses["semiprime_commutative"] = (names[single],)

    return Classification(
        ideal=ideal,
        is_proper=True,
        is_prime=pair is None,
        prime_elementwise=element_pair is None,
        is_semiprime=square is None,
        semiprime_elementwise=element is None,
        is_irreducible=split is None,
        is_h_idempotent=idempotent,
        witnesses=witnesses,
        disagreements=tuple(disagreements),
        prime_commutative=prime_commutative,
        semiprime_commutative=semiprime_commutative,
    )
