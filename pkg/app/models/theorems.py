"""
Исполняемый каталог утверждений: каждое проверяется как квантор по конечной
структуре (и сетке значений) и даёт holds / fails / vacuous со свидетелем
"""
import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from app.models.classification import (
    Classification,
    classify_h_ideal,
    commutative_prime_witness,
    commutative_semiprime_witness,
    is_h_idempotent_mask,
    irreducible_witness,
    prime_element_witness,
    prime_pair_witness,
    semiprime_element_witness,
    semiprime_family_witness,
)
from app.models.fuzzy import (
    ONE,
    ZERO,
    FuzzySubset,
    Grid,
    is_fuzzy_ideal_mask,
    is_fuzzy_ideal_of_kind,
    join,
    leq,
    meet,
    random_fuzzy_subset,
    all_fuzzy_subsets,
    two_valued_indicator,
)
from app.models.fuzzy_families import (
    FuzzyIdealFamily,
    FuzzyLattice,
    enumerate_fuzzy_ideals,
    max_product_witness,
    prime_second_witness,
    semiprime_second_witness,
    square_witness,
)
from app.models.fuzzy_products import h_intrinsic_product, h_product, h_sum
from app.models.hemiring import Hemiring
from app.models.lattice import IdealFamily, IdealLattice, enumerate_ideals
from app.models.subsets import IdealKind, Subset, is_h_hemiregular, is_ideal_mask
from app.utils.config import WorkbenchConfig
from app.utils.errors import InputError, WorkbenchError
from app.utils.logger import get_logger

logger = get_logger(__name__)

HOLDS = "holds"
FAILS = "fails"
VACUOUS = "vacuous"
ERROR = "error"

H_KINDS = (IdealKind.H, IdealKind.LEFT_H, IdealKind.RIGHT_H)
ALL_KINDS = tuple(IdealKind)
ADDITIVELY_CLOSED = "additively closed"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: Any = None
    scope: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class TheoremReport:
    """
    Результат проверки одного утверждения на одной структуре
    """

    statement: str
    structure: str
    status: str
    witness: Any = None
    scope: Dict[str, Any] = field(default_factory=dict)
    quarantined: bool = False

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "statement": self.statement,
            "structure": self.structure,
            "status": self.status,
            "witness": self.witness,
            "scope": self.scope,
        }
        if self.quarantined:
            data["quarantined"] = True
        return data


def _holds(**scope) -> Verdict:
    return Verdict(HOLDS, None, scope)


def _fails(witness: Any, **scope) -> Verdict:
    return Verdict(FAILS, witness, scope)


def _vacuous(reason: str, **scope) -> Verdict:
    return Verdict(VACUOUS, {"hypothesis": reason}, scope)


def _equivalence(lhs: bool, rhs: bool, witness: Dict[str, Any], **scope) -> Verdict:
    if lhs == rhs:
        return _holds(**scope)
    return _fails(dict(witness, lhs=lhs, rhs=rhs), **scope)


class StructureContext:
    """
    Ленивые перечисления одной структуры, общие для всех утверждений каталога
    """

    def __init__(self, hemiring: Hemiring, config: WorkbenchConfig):
        self.hemiring = hemiring
        self.config = config
        self.grid = Grid(config.denominator)
        self._families: Dict[IdealKind, IdealFamily] = {}
        self._fuzzy: Dict[IdealKind, FuzzyIdealFamily] = {}

    def rng(self, label: str) -> random.Random:
        return random.Random(f"{self.config.sample_seed}:{self.hemiring.name}:{label}")

    def family(self, kind: IdealKind) -> IdealFamily:
        kind = IdealKind(kind)
        if kind not in self._families:
            self._families[kind] = enumerate_ideals(
                self.hemiring, kind, self.config.brute_force_cap, self.config.closure_system_cap
            )
        return self._families[kind]

    @property
    def h_family(self) -> IdealFamily:
        return self.family(IdealKind.H)

    @cached_property
    def lattice(self) -> IdealLattice:
        return IdealLattice(self.h_family)

    @cached_property
    def hemiregular(self):
        return is_h_hemiregular(self.hemiring)

    @cached_property
    def classifications(self) -> Dict[int, Classification]:
        return {m.mask: classify_h_ideal(m, self.h_family) for m in self.h_family}

    def fuzzy_family(self, kind: IdealKind) -> FuzzyIdealFamily:
        kind = IdealKind(kind)
        if kind not in self._fuzzy:
            self._fuzzy[kind] = enumerate_fuzzy_ideals(
                self.family(kind), self.grid, self.config.fuzzy_family_budget, self.config.fuzzy_family_limit
            )
        return self._fuzzy[kind]

    @cached_property
    def fuzzy_lattice(self) -> FuzzyLattice:
        return FuzzyLattice(self.fuzzy_family(IdealKind.H))

    @cached_property
    def non_idempotent_h_ideal(self) -> Optional[Subset]:
        for member in self.h_family:
            if not is_h_idempotent_mask(self.hemiring, member.mask):
                return member
        return None

    @property
    def all_h_idempotent(self) -> bool:
        return self.non_idempotent_h_ideal is None

    @cached_property
    def non_idempotent_fuzzy(self) -> Optional[FuzzySubset]:
        lattice = self.fuzzy_lattice
        for member in lattice.members:
            if not lattice.is_idempotent(member):
                return member
        return None

    @property
    def all_fuzzy_idempotent(self) -> bool:
        return self.non_idempotent_fuzzy is None

    def fuzzy_scope(self, kind: IdealKind = IdealKind.H) -> Dict[str, Any]:
        return self.fuzzy_family(kind).scope()

    def pairs(self, first: Sequence, second: Sequence, label: str) -> Tuple[List[Tuple[Any, Any]], str]:
        """Все пары, либо детерминированная выборка, если их больше max_triples"""
        total = len(first) * len(second)
        cap = self.config.max_triples
        if total <= cap:
            return list(itertools.product(first, second)), "all"
        rng = self.rng(label)
        chosen = [(rng.choice(first), rng.choice(second)) for _ in range(cap)]
        return chosen, f"sampled {cap} of {total}"

    def triples(self, members: Sequence, label: str,
                cap: Optional[int] = None) -> Tuple[Iterable[Tuple[Any, Any, Any]], str]:
        total = len(members) ** 3
        cap = cap or self.config.max_triples
        if total <= cap:
            return itertools.product(members, repeat=3), "all"
        rng = self.rng(label)
        return [tuple(rng.choice(members) for _ in range(3)) for _ in range(cap)], f"sampled {cap} of {total}"

    def fuzzy_samples(self, label: str) -> Tuple[List[FuzzySubset], str]:
        """Все нечёткие подмножества сетки, если их не больше sample_pairs, иначе выборка"""
        total = (self.grid.denominator + 1) ** self.hemiring.order
        cap = self.config.sample_pairs
        if total <= cap:
            return list(all_fuzzy_subsets(self.hemiring, self.grid)), "all"
        rng = self.rng(label)
        return [random_fuzzy_subset(self.hemiring, self.grid, rng) for _ in range(cap)], f"sampled {cap} of {total}"

    def nonempty_subsets(self) -> List[Subset]:
        return [Subset(self.hemiring, m) for m in range(1, self.hemiring.kernel.full + 1)]

    def indicator_parameters(self) -> List[Tuple[Any, Any]]:
        """Пары (t, s) с s < t на сетке; при большой сетке: (1, 0) и детерминированная выборка"""
        values = self.grid.values
        pairs = [(t, s) for t in values for s in values if s < t]
        if len(pairs) <= 45:
            return pairs
        rng = self.rng("indicator")
        return [(ONE, ZERO)] + rng.sample(pairs, 20)


# ---------------------------------------------------------------- чёткие утверждения


def _fmt(subset: Subset) -> str:
    return subset.format()


def check_intersection_closed(ctx: StructureContext) -> Verdict:
    for kind in H_KINDS:
        family = ctx.family(kind)
        masks = set(family.masks)
        for a, b in itertools.combinations_with_replacement(family.members, 2):
            if a.mask & b.mask not in masks:
                return _fails({"kind": kind.value, "A": _fmt(a), "B": _fmt(b), "meet": _fmt(a & b)})
    return _holds(kinds=[k.value for k in H_KINDS])


def check_closure_of_products(ctx: StructureContext) -> Verdict:
    kernel = ctx.hemiring.kernel
    subsets = [s for s in ctx.nonempty_subsets() if kernel.additive_closure(s.mask) == s.mask]
    pairs, coverage = ctx.pairs(subsets, subsets, "L2.2")
    for a, b in pairs:
        lhs = kernel.h_closure(kernel.product(a.mask, b.mask))
        rhs = kernel.h_closure(kernel.product(kernel.h_closure(a.mask), kernel.h_closure(b.mask)))
        if lhs != rhs:
            return _fails({"A": _fmt(a), "B": _fmt(b)}, pairs=coverage, inputs=ADDITIVELY_CLOSED)
    return _holds(pairs=coverage, inputs=ADDITIVELY_CLOSED)


def _one_sided_pairs(ctx: StructureContext, label: str):
    return ctx.pairs(ctx.family(IdealKind.RIGHT_H).members, ctx.family(IdealKind.LEFT_H).members, label)


def check_product_below_meet(ctx: StructureContext) -> Verdict:
    kernel = ctx.hemiring.kernel
    pairs, coverage = _one_sided_pairs(ctx, "L2.3")
    for a, b in pairs:
        closed = kernel.h_closure(kernel.product(a.mask, b.mask))
        if closed & ~(a.mask & b.mask):
            return _fails({"right": _fmt(a), "left": _fmt(b)}, pairs=coverage)
    return _holds(pairs=coverage)


def check_hemiregular_products(ctx: StructureContext) -> Verdict:
    kernel = ctx.hemiring.kernel
    report = ctx.hemiregular
    pairs, coverage = _one_sided_pairs(ctx, "L2.5")
    mismatch = None
    for a, b in pairs:
        if kernel.h_closure(kernel.product(a.mask, b.mask)) != a.mask & b.mask:
            mismatch = {"right": _fmt(a), "left": _fmt(b)}
            break
    witness = {"failing_elements": list(report.failing), "pair": mismatch}
    return _equivalence(report.regular, mismatch is None, witness, pairs=coverage)


def _rxrxr(ctx: StructureContext, mask: int) -> int:
    kernel = ctx.hemiring.kernel
    full = kernel.full
    step = kernel.product(full, mask)
    step = kernel.product(step, full)
    step = kernel.product(step, mask)
    step = kernel.product(step, full)
    return kernel.h_closure(step)


def idempotency_conditions(ctx: StructureContext) -> Dict[str, Tuple[bool, Any]]:
    """Пять условий равносильности для h-идемпотентности всех h-идеалов"""
    parent = ctx.hemiring
    kernel = parent.kernel
    members = ctx.h_family.members
    results: Dict[str, Tuple[bool, Any]] = {}

    bad = ctx.non_idempotent_h_ideal
    results["all_h_idempotent"] = (bad is None, None if bad is None else _fmt(bad))

    pair = next(
        ((a, b) for a in members for b in members
         if kernel.h_closure(kernel.product(a.mask, b.mask)) != a.mask & b.mask),
        None,
    )
    results["meet_is_product"] = (pair is None, None if pair is None else [_fmt(pair[0]), _fmt(pair[1])])

    element = next((x for x in range(parent.order) if not _rxrxr(ctx, 1 << x) >> x & 1), None)
    results["element_in_rxrxr"] = (element is None, None if element is None else parent.elements[element])

    subset = next((s for s in ctx.nonempty_subsets() if s.mask & ~_rxrxr(ctx, s.mask)), None)
    results["subset_in_rarar"] = (subset is None, None if subset is None else _fmt(subset))

    ideal = next((m for m in members if _rxrxr(ctx, m.mask) != m.mask), None)
    results["ideal_is_rarar"] = (ideal is None, None if ideal is None else _fmt(ideal))
    return results


def check_idempotency_equivalence(ctx: StructureContext) -> Verdict:
    conditions = idempotency_conditions(ctx)
    verdicts = {name: value for name, (value, _) in conditions.items()}
    if len(set(verdicts.values())) == 1:
        return _holds(all_true=next(iter(verdicts.values())))
    return _fails({name: {"holds": value, "witness": w} for name, (value, w) in conditions.items()})


def check_commutative_hemiregular_idempotent(ctx: StructureContext) -> Verdict:
    if not ctx.hemiring.commutative_mul:
        return _vacuous("commutative multiplication")
    report = ctx.hemiregular
    bad = ctx.non_idempotent_h_ideal
    return _equivalence(
        report.regular,
        bad is None,
        {"failing_elements": list(report.failing), "non_idempotent": None if bad is None else _fmt(bad)},
    )


def _meet_product_witness(ctx: StructureContext) -> Tuple[Optional[Tuple[FuzzySubset, FuzzySubset]], str]:
    lattice = ctx.fuzzy_lattice
    indices = list(range(len(lattice.members)))
    pairs, coverage = ctx.pairs(indices, indices, "meet-product")
    for i, j in pairs:
        a, b = lattice.members[i], lattice.members[j]
        if lattice.odot(i, j) != meet(a, b):
            return (a, b), coverage
    return None, coverage


def check_identity_idempotency(ctx: StructureContext) -> Verdict:
    if not ctx.hemiring.has_identity:
        return _vacuous("identity element")
    crisp = idempotency_conditions(ctx)
    fuzzy_bad = ctx.non_idempotent_fuzzy
    pair, coverage = _meet_product_witness(ctx)
    values = {
        "all_h_idempotent": crisp["all_h_idempotent"][0],
        "meet_is_product": crisp["meet_is_product"][0],
        "all_fuzzy_idempotent": fuzzy_bad is None,
        "fuzzy_meet_is_product": pair is None,
    }
    scope = dict(ctx.fuzzy_scope(), pairs=coverage)
    if len(set(values.values())) == 1:
        return _holds(**scope)
    witness = dict(values)
    if fuzzy_bad is not None:
        witness["non_idempotent_fuzzy"] = fuzzy_bad.as_dict()
    if pair is not None:
        witness["pair"] = [pair[0].as_dict(), pair[1].as_dict()]
    return _fails(witness, **scope)


def _idempotent_hypothesis(ctx: StructureContext) -> Optional[Verdict]:
    if ctx.all_h_idempotent:
        return None
    return _vacuous("all h-ideals h-idempotent")


def check_brouwerian(ctx: StructureContext) -> Verdict:
    vacuous = _idempotent_hypothesis(ctx)
    if vacuous:
        return vacuous
    lattice = ctx.lattice
    broken = lattice.closure_violation()
    if broken is not None:
        operation, a, b = broken
        return _fails({"operation": operation, "A": _fmt(a), "B": _fmt(b)})
    pair = lattice.brouwerian_witness()
    if pair is not None:
        return _fails({"residual_missing": [_fmt(pair[0]), _fmt(pair[1])]})
    return _holds(ideals=len(ctx.h_family))


def check_distributive(ctx: StructureContext) -> Verdict:
    vacuous = _idempotent_hypothesis(ctx)
    if vacuous:
        return vacuous
    triple = ctx.lattice.distributivity_witness()
    if triple is not None:
        return _fails([_fmt(s) for s in triple])
    return _holds(ideals=len(ctx.h_family))


def _prime_agreement(ctx: StructureContext, kinds: Sequence[IdealKind]) -> Verdict:
    parent = ctx.hemiring
    for kind in kinds:
        family = ctx.family(kind)
        for member in family.proper:
            pair = prime_pair_witness(family, member.mask)
            element = prime_element_witness(parent, member.mask)
            if (pair is None) != (element is None):
                return _fails({
                    "kind": kind.value,
                    "P": _fmt(member),
                    "pairwise": None if pair is None else [_fmt(pair[0]), _fmt(pair[1])],
                    "elementwise": None if element is None else [parent.elements[i] for i in element],
                })
    return _holds(kinds=[k.value for k in kinds])


def check_prime_element_test(ctx: StructureContext) -> Verdict:
    return _prime_agreement(ctx, H_KINDS)


def check_prime_element_test_two_sided(ctx: StructureContext) -> Verdict:
    return _prime_agreement(ctx, (IdealKind.H,))


def check_prime_commutative(ctx: StructureContext) -> Verdict:
    parent = ctx.hemiring
    if not parent.commutative_with_identity:
        return _vacuous("commutative with identity")
    for member in ctx.h_family.proper:
        prime = prime_pair_witness(ctx.h_family, member.mask) is None
        found = commutative_prime_witness(parent, member.mask)
        if prime != (found is None):
            return _fails({"P": _fmt(member), "prime": prime,
                           "product": None if found is None else [parent.elements[i] for i in found]})
    return _holds()


def check_irreducible_exists(ctx: StructureContext) -> Verdict:
    family = ctx.h_family
    irreducible = [m for m in family.proper if irreducible_witness(family, m.mask) is None]
    for member in family.proper:
        if not any(member.issubset(q) for q in irreducible):
            return _fails({"P": _fmt(member), "searched": len(family)})
    return _holds(ideals=len(family))


def check_irreducible_iff_prime(ctx: StructureContext) -> Verdict:
    vacuous = _idempotent_hypothesis(ctx)
    if vacuous:
        return vacuous
    family = ctx.h_family
    for member in family.proper:
        irreducible = irreducible_witness(family, member.mask) is None
        prime = prime_pair_witness(family, member.mask) is None
        if irreducible != prime:
            return _fails({"P": _fmt(member), "irreducible": irreducible, "prime": prime})
    return _holds()


def _primes(ctx: StructureContext) -> List[Subset]:
    family = ctx.h_family
    return [m for m in family.proper if prime_pair_witness(family, m.mask) is None]


def check_prime_exists(ctx: StructureContext) -> Verdict:
    vacuous = _idempotent_hypothesis(ctx)
    if vacuous:
        return vacuous
    primes = _primes(ctx)
    for member in ctx.h_family.proper:
        if not any(member.issubset(p) for p in primes):
            return _fails({"P": _fmt(member), "searched": len(ctx.h_family)})
    return _holds()


def check_prime_intersections(ctx: StructureContext) -> Verdict:
    primes = _primes(ctx)
    full = ctx.hemiring.kernel.full
    counterexample = None
    for member in ctx.h_family.proper:
        intersection = full
        for p in primes:
            if member.issubset(p):
                intersection &= p.mask
        if intersection != member.mask:
            counterexample = {"P": _fmt(member), "intersection": Subset(ctx.hemiring, intersection).format()}
            break
    bad = ctx.non_idempotent_h_ideal
    return _equivalence(
        bad is None,
        counterexample is None,
        {"non_idempotent": None if bad is None else _fmt(bad), "ideal": counterexample},
    )


def _semiprime_agreement(ctx: StructureContext, kinds: Sequence[IdealKind]) -> Verdict:
    parent = ctx.hemiring
    for kind in kinds:
        family = ctx.family(kind)
        for member in family.proper:
            square = semiprime_family_witness(family, member.mask)
            element = semiprime_element_witness(parent, member.mask)
            if (square is None) != (element is None):
                return _fails({
                    "kind": kind.value,
                    "P": _fmt(member),
                    "pairwise": None if square is None else _fmt(square),
                    "elementwise": None if element is None else parent.elements[element],
                })
    return _holds(kinds=[k.value for k in kinds])


def check_semiprime_element_test(ctx: StructureContext) -> Verdict:
    return _semiprime_agreement(ctx, H_KINDS)


def check_semiprime_commutative(ctx: StructureContext) -> Verdict:
    parent = ctx.hemiring
    if not parent.commutative_with_identity:
        return _vacuous("commutative with identity")
    for member in ctx.h_family.proper:
        semiprime = semiprime_family_witness(ctx.h_family, member.mask) is None
        found = commutative_semiprime_witness(parent, member.mask)
        if semiprime != (found is None):
            return _fails({"P": _fmt(member), "semiprime": semiprime,
                           "square": None if found is None else parent.elements[found]})
    return _holds()


def check_idempotent_iff_semiprime(ctx: StructureContext) -> Verdict:
    family = ctx.h_family
    not_semiprime = next((m for m in family.proper if semiprime_family_witness(family, m.mask) is not None), None)
    bad = ctx.non_idempotent_h_ideal
    return _equivalence(
        bad is None,
        not_semiprime is None,
        {"non_idempotent": None if bad is None else _fmt(bad),
         "not_semiprime": None if not_semiprime is None else _fmt(not_semiprime)},
    )


# ---------------------------------------------------------------- нечёткие утверждения


def check_transfer(ctx: StructureContext) -> Verdict:
    samples, coverage = ctx.fuzzy_samples("Transfer")
    for fuzzy in samples:
        for kind in ALL_KINDS:
            direct = is_fuzzy_ideal_of_kind(fuzzy, kind, "direct").holds
            levels = is_fuzzy_ideal_of_kind(fuzzy, kind, "levels").holds
            if direct != levels:
                return _fails({"kind": kind.value, "lambda": fuzzy.as_dict(), "direct": direct, "levels": levels},
                              samples=coverage)
    return _holds(samples=coverage, grid=ctx.grid.denominator)


def check_indicator_ideal(ctx: StructureContext) -> Verdict:
    parameters = ctx.indicator_parameters()
    for subset in ctx.nonempty_subsets():
        for kind in H_KINDS:
            crisp = is_ideal_mask(ctx.hemiring, subset.mask, kind)
            for t, s in parameters:
                indicator = two_valued_indicator(subset, t, s)
                if is_fuzzy_ideal_mask(indicator, kind) != crisp:
                    return _fails({"kind": kind.value, "A": _fmt(subset), "t": str(t), "s": str(s)})
    return _holds(parameters=len(parameters))


def check_indicator_lattice(ctx: StructureContext) -> Verdict:
    parent = ctx.hemiring
    subsets = [Subset(parent, m) for m in range(parent.kernel.full + 1)]
    parameters = ctx.indicator_parameters()
    pairs, coverage = ctx.pairs(subsets, subsets, "P2.9")
    for a, b in pairs:
        for t, s in parameters:
            la, lb = two_valued_indicator(a, t, s), two_valued_indicator(b, t, s)
            witness = {"A": _fmt(a), "B": _fmt(b), "t": str(t), "s": str(s)}
            if meet(la, lb) != two_valued_indicator(a & b, t, s):
                return _fails(dict(witness, law="meet"), pairs=coverage)
            if join(la, lb) != two_valued_indicator(a | b, t, s):
                return _fails(dict(witness, law="join"), pairs=coverage)
            if leq(la, lb) != a.issubset(b):
                return _fails(dict(witness, law="order"), pairs=coverage)
    return _holds(pairs=coverage, parameters=len(parameters))


def _one_sided_fuzzy_pairs(ctx: StructureContext, label: str):
    rights = ctx.fuzzy_family(IdealKind.RIGHT_H).members
    lefts = ctx.fuzzy_family(IdealKind.LEFT_H).members
    pairs, coverage = ctx.pairs(rights, lefts, label)
    scope = {
        "grid": ctx.grid.denominator,
        "fuzzy_right_h": len(rights),
        "fuzzy_left_h": len(lefts),
        "pairs": coverage,
        "label": "grid-relative",
    }
    return pairs, scope


def _hemiregular_product_check(ctx: StructureContext, product: Callable, label: str) -> Verdict:
    report = ctx.hemiregular
    pairs, scope = _one_sided_fuzzy_pairs(ctx, label)
    mismatch = None
    for right, left in pairs:
        if product(right, left) != meet(right, left):
            mismatch = {"right": right.as_dict(), "left": left.as_dict()}
            break
    return _equivalence(report.regular, mismatch is None,
                        {"failing_elements": list(report.failing), "pair": mismatch}, **scope)


def check_hemiregular_h_product(ctx: StructureContext) -> Verdict:
    return _hemiregular_product_check(ctx, h_product, "T2.11")


def check_hemiregular_intrinsic(ctx: StructureContext) -> Verdict:
    return _hemiregular_product_check(ctx, h_intrinsic_product, "T3.4")


def check_products_agree_when_hemiregular(ctx: StructureContext) -> Verdict:
    if not ctx.hemiregular.regular:
        return _vacuous("h-hemiregular")
    pairs, scope = _one_sided_fuzzy_pairs(ctx, "C3.5")
    for right, left in pairs:
        if h_intrinsic_product(right, left) != h_product(right, left):
            return _fails({"right": right.as_dict(), "left": left.as_dict()}, **scope)
    return _holds(**scope)


def check_product_properties(ctx: StructureContext) -> Verdict:
    parent = ctx.hemiring
    kernel = parent.kernel
    samples, _ = ctx.fuzzy_samples("P3.2")
    triples, coverage = ctx.triples(samples, "P3.2", cap=ctx.config.sample_pairs)
    for a, b, c in triples:
        if not leq(h_product(a, b), h_intrinsic_product(a, b)):
            return _fails({"part": "h-product below intrinsic", "lambda": a.as_dict(), "mu": b.as_dict()},
                          samples=coverage)
        bigger = join(a, c)
        if not leq(h_intrinsic_product(a, b), h_intrinsic_product(bigger, b)):
            return _fails({"part": "monotone left", "lambda": a.as_dict(), "larger": bigger.as_dict(),
                           "mu": b.as_dict()}, samples=coverage)
        if not leq(h_intrinsic_product(b, a), h_intrinsic_product(b, bigger)):
            return _fails({"part": "monotone right", "lambda": b.as_dict(), "mu": a.as_dict(),
                           "larger": bigger.as_dict()}, samples=coverage)
    subsets = ctx.nonempty_subsets()
    for a, b in itertools.product(subsets, subsets):
        expected = Subset(parent, kernel.h_closure(kernel.product(a.mask, b.mask)))
        product = h_intrinsic_product(FuzzySubset.characteristic(a), FuzzySubset.characteristic(b))
        if product != FuzzySubset.characteristic(expected):
            return _fails({"part": "characteristic functions", "A": _fmt(a), "B": _fmt(b)}, samples=coverage)
    return _holds(samples=coverage)


def _fuzzy_pairs(ctx: StructureContext, label: str):
    lattice = ctx.fuzzy_lattice
    indices = list(range(len(lattice.members)))
    pairs, coverage = ctx.pairs(indices, indices, label)
    return lattice, pairs, dict(ctx.fuzzy_scope(), pairs=coverage)


def check_intrinsic_of_ideals(ctx: StructureContext) -> Verdict:
    lattice, pairs, scope = _fuzzy_pairs(ctx, "T3.3")
    for i, j in pairs:
        a, b = lattice.members[i], lattice.members[j]
        product = lattice.odot(i, j)
        if not is_fuzzy_ideal_mask(product):
            return _fails({"lambda": a.as_dict(), "mu": b.as_dict(), "part": "not a fuzzy h-ideal"}, **scope)
        if not leq(product, meet(a, b)):
            return _fails({"lambda": a.as_dict(), "mu": b.as_dict(), "part": "above the meet"}, **scope)
    return _holds(**scope)


def check_idempotent_iff_meet(ctx: StructureContext) -> Verdict:
    bad = ctx.non_idempotent_fuzzy
    pair, coverage = _meet_product_witness(ctx)
    return _equivalence(
        bad is None,
        pair is None,
        {"non_idempotent": None if bad is None else bad.as_dict(),
         "pair": None if pair is None else [pair[0].as_dict(), pair[1].as_dict()]},
        **dict(ctx.fuzzy_scope(), pairs=coverage),
    )


def check_commutative_fuzzy_idempotent(ctx: StructureContext) -> Verdict:
    if not ctx.hemiring.commutative_mul:
        return _vacuous("commutative multiplication")
    report = ctx.hemiregular
    bad = ctx.non_idempotent_fuzzy
    return _equivalence(
        report.regular,
        bad is None,
        {"failing_elements": list(report.failing), "non_idempotent": None if bad is None else bad.as_dict()},
        **ctx.fuzzy_scope(),
    )


def check_h_sum_of_ideals(ctx: StructureContext) -> Verdict:
    lattice, pairs, scope = _fuzzy_pairs(ctx, "T4.7")
    for i, j in pairs:
        a, b = lattice.members[i], lattice.members[j]
        if not is_fuzzy_ideal_mask(h_sum(a, b)):
            return _fails({"lambda": a.as_dict(), "mu": b.as_dict()}, **scope)
    return _holds(**scope)


def check_fuzzy_distributive(ctx: StructureContext) -> Verdict:
    lattice = ctx.fuzzy_lattice
    members = lattice.members
    bad = ctx.non_idempotent_fuzzy
    pair, pair_coverage = _meet_product_witness(ctx)
    triples, coverage = ctx.triples(members, "T4.10")
    broken = None
    if pair is None:
        for a, d, m in triples:
            lhs = h_sum(h_intrinsic_product(a, d), m)
            rhs = h_intrinsic_product(h_sum(a, m), h_sum(d, m))
            if lhs != rhs:
                broken = [a.as_dict(), d.as_dict(), m.as_dict()]
                break
    rhs_holds = pair is None and broken is None
    witness = {
        "non_idempotent": None if bad is None else bad.as_dict(),
        "meet_pair": None if pair is None else [pair[0].as_dict(), pair[1].as_dict()],
        "triple": broken,
    }
    return _equivalence(bad is None, rhs_holds, witness,
                        **dict(ctx.fuzzy_scope(), pairs=pair_coverage, triples=coverage))


def _second_sense_levels(ctx: StructureContext, delta: FuzzySubset, semiprime: bool) -> Optional[Tuple[str, str]]:
    family = ctx.h_family
    full = ctx.hemiring.kernel.full
    for t in delta.image:
        mask = delta.level_mask(t)
        if mask == full:
            continue
        failing = semiprime_family_witness(family, mask) if semiprime else prime_pair_witness(family, mask)
        if failing is not None:
            return (str(t), Subset(ctx.hemiring, mask).format())
    return None


def _level_check(ctx: StructureContext, semiprime: bool) -> Verdict:
    direct_check = semiprime_second_witness if semiprime else prime_second_witness
    members = ctx.fuzzy_family(IdealKind.H).non_constant
    for delta in members:
        direct = direct_check(delta) is None
        levels = _second_sense_levels(ctx, delta, semiprime) is None
        if direct != levels:
            return _fails({"delta": delta.as_dict(), "direct": direct, "levels": levels}, **ctx.fuzzy_scope())
    if not members:
        return _vacuous("non-constant fuzzy h-ideals on the grid", **ctx.fuzzy_scope())
    return _holds(**ctx.fuzzy_scope())


def check_prime_levels(ctx: StructureContext) -> Verdict:
    return _level_check(ctx, semiprime=False)


def check_semiprime_levels(ctx: StructureContext) -> Verdict:
    return _level_check(ctx, semiprime=True)


def _indicator_check(ctx: StructureContext, semiprime: bool) -> Verdict:
    family = ctx.h_family
    direct_check = semiprime_second_witness if semiprime else prime_second_witness
    parameters = ctx.indicator_parameters()
    for member in family.proper:
        crisp = (semiprime_family_witness(family, member.mask) if semiprime
                 else prime_pair_witness(family, member.mask)) is None
        for t, s in parameters:
            indicator = two_valued_indicator(member, t, s)
            if (direct_check(indicator) is None) != crisp:
                return _fails({"A": _fmt(member), "t": str(t), "s": str(s), "crisp": crisp})
    return _holds(parameters=len(parameters))


def check_prime_indicator(ctx: StructureContext) -> Verdict:
    return _indicator_check(ctx, semiprime=False)


def check_semiprime_indicator(ctx: StructureContext) -> Verdict:
    return _indicator_check(ctx, semiprime=True)


def _commutative_fuzzy_check(ctx: StructureContext, semiprime: bool) -> Verdict:
    if not ctx.hemiring.commutative_with_identity:
        return _vacuous("commutative with identity")
    names = ctx.hemiring.elements
    for delta in ctx.fuzzy_family(IdealKind.H).non_constant:
        if semiprime:
            second = semiprime_second_witness(delta) is None
            found = square_witness(delta)
            shown = None if found is None else names[found]
        else:
            second = prime_second_witness(delta) is None
            found = max_product_witness(delta)
            shown = None if found is None else [names[i] for i in found]
        if second != (found is None):
            return _fails({"delta": delta.as_dict(), "second_sense": second, "element": shown},
                          **ctx.fuzzy_scope())
    return _holds(**ctx.fuzzy_scope())


def check_prime_max_product(ctx: StructureContext) -> Verdict:
    return _commutative_fuzzy_check(ctx, semiprime=False)


def check_semiprime_square(ctx: StructureContext) -> Verdict:
    return _commutative_fuzzy_check(ctx, semiprime=True)


def _fuzzy_idempotent_hypothesis(ctx: StructureContext) -> Optional[Verdict]:
    if ctx.all_fuzzy_idempotent:
        return None
    return _vacuous("all fuzzy h-ideals idempotent", **ctx.fuzzy_scope())


def check_fuzzy_irreducible_iff_h_prime(ctx: StructureContext) -> Verdict:
    vacuous = _fuzzy_idempotent_hypothesis(ctx)
    if vacuous:
        return vacuous
    lattice = ctx.fuzzy_lattice
    for delta in lattice.members:
        irreducible = lattice.irreducible_witness(delta) is None
        h_prime = lattice.h_prime_witness(delta) is None
        if irreducible != h_prime:
            return _fails({"delta": delta.as_dict(), "irreducible": irreducible, "h_prime": h_prime},
                          **ctx.fuzzy_scope())
    return _holds(**ctx.fuzzy_scope())


def _h_primes(ctx: StructureContext) -> List[FuzzySubset]:
    lattice = ctx.fuzzy_lattice
    return [d for d in lattice.members if lattice.h_prime_witness(d) is None]


def check_irreducible_h_prime_above(ctx: StructureContext) -> Verdict:
    vacuous = _fuzzy_idempotent_hypothesis(ctx)
    if vacuous:
        return vacuous
    lattice = ctx.fuzzy_lattice
    candidates = [d for d in _h_primes(ctx) if lattice.irreducible_witness(d) is None]
    names = ctx.hemiring.elements
    for member in lattice.members:
        for a in range(ctx.hemiring.order):
            if not any(leq(member, d) and d[a] == member[a] for d in candidates):
                return _fails({"lambda": member.as_dict(), "element": names[a], "searched": len(lattice.members)},
                              **ctx.fuzzy_scope())
    return _holds(**ctx.fuzzy_scope())


def check_h_prime_intersections(ctx: StructureContext) -> Verdict:
    lattice = ctx.fuzzy_lattice
    primes = _h_primes(ctx)
    counterexample = None
    for member in lattice.members:
        above = [d for d in primes if leq(member, d)]
        values = tuple(min((d[x] for d in above), default=ONE) for x in range(ctx.hemiring.order))
        if values != member.values:
            counterexample = member.as_dict()
            break
    bad = ctx.non_idempotent_fuzzy
    return _equivalence(
        bad is None,
        counterexample is None,
        {"non_idempotent": None if bad is None else bad.as_dict(), "lambda": counterexample},
        **ctx.fuzzy_scope(),
    )


def check_fuzzy_idempotent_iff_semiprime(ctx: StructureContext) -> Verdict:
    lattice = ctx.fuzzy_lattice
    not_semiprime = next(
        (d for d in ctx.fuzzy_family(IdealKind.H).non_constant if lattice.h_semiprime_witness(d) is not None),
        None,
    )
    bad = ctx.non_idempotent_fuzzy
    return _equivalence(
        bad is None,
        not_semiprime is None,
        {"non_idempotent": None if bad is None else bad.as_dict(),
         "not_h_semiprime": None if not_semiprime is None else not_semiprime.as_dict()},
        **ctx.fuzzy_scope(),
    )


@dataclass(frozen=True)
class Statement:
    id: str
    summary: str
    check: Callable[[StructureContext], Verdict]
    fuzzy: bool = False


CATALOG: Dict[str, Statement] = {
    s.id: s
    for s in (
        Statement("L2.1", "intersections of h-ideals are h-ideals", check_intersection_closed),
        Statement("L2.2", "closure(AB) = closure(closure(A) closure(B)) for additively closed A, B",
                  check_closure_of_products),
        Statement("L2.3", "closure(AB) within A∩B for right A, left B", check_product_below_meet),
        Statement("L2.5", "h-hemiregular iff closure(AB) = A∩B", check_hemiregular_products),
        Statement("Transfer", "fuzzy ideal iff every level set is an ideal", check_transfer, True),
        Statement("P2.8", "two-valued indicator is a fuzzy ideal iff A is an ideal", check_indicator_ideal, True),
        Statement("P2.9", "two-valued indicators preserve meet, join and order", check_indicator_lattice, True),
        Statement("T2.11", "h-hemiregular iff h-product equals meet", check_hemiregular_h_product, True),
        Statement("P3.2", "h-product below intrinsic product, monotonicity, indicators", check_product_properties, True),
        Statement("T3.3", "intrinsic product of fuzzy h-ideals is a fuzzy h-ideal below the meet",
                  check_intrinsic_of_ideals, True),
        Statement("T3.4", "h-hemiregular iff intrinsic product equals meet", check_hemiregular_intrinsic, True),
        Statement("C3.5", "both products agree in h-hemiregular hemirings", check_products_agree_when_hemiregular, True),
        Statement("P4.1", "five equivalent forms of h-idempotency", check_idempotency_equivalence),
        Statement("C4.2", "commutative: h-hemiregular iff all h-ideals h-idempotent",
                  check_commutative_hemiregular_idempotent),
        Statement("P4.3", "all fuzzy h-ideals idempotent iff intrinsic product equals meet",
                  check_idempotent_iff_meet, True),
        Statement("C4.4", "commutative: h-hemiregular iff all fuzzy h-ideals idempotent",
                  check_commutative_fuzzy_idempotent, True),
        Statement("T4.5", "with identity: crisp and fuzzy idempotency agree", check_identity_idempotency, True),
        Statement("T4.7", "h-sum of fuzzy h-ideals is a fuzzy h-ideal", check_h_sum_of_ideals, True),
        Statement("T4.8", "idempotent h-ideals form a complete Brouwerian lattice", check_brouwerian),
        Statement("C4.9", "idempotent h-ideals form a distributive lattice", check_distributive),
        Statement("T4.10", "fuzzy idempotency iff distributive lattice under h-sum and intrinsic product",
                  check_fuzzy_distributive, True),
        Statement("T5.1", "one-sided and two-sided prime element test", check_prime_element_test),
        Statement("C5.2", "two-sided prime element test", check_prime_element_test_two_sided),
        Statement("C5.3", "commutative with identity: prime iff ab in P forces a or b",
                  check_prime_commutative),
        Statement("T5.5", "prime in the second sense iff proper level sets are prime", check_prime_levels, True),
        Statement("C5.7", "two-valued indicator is prime iff A is prime", check_prime_indicator, True),
        Statement("P5.8", "commutative with identity: prime iff δ(ab) = δ(a) ∨ δ(b)",
                  check_prime_max_product, True),
        Statement("T5.9", "each proper h-ideal lies in a proper irreducible one", check_irreducible_exists),
        Statement("T5.10", "idempotent case: irreducible iff prime", check_irreducible_iff_prime),
        Statement("C5.11", "idempotent case: each proper h-ideal lies in a proper prime", check_prime_exists),
        Statement("T5.12", "fuzzy idempotent case: irreducible iff h-prime", check_fuzzy_irreducible_iff_h_prime,
                  True),
        Statement("T5.13", "h-idempotency iff proper h-ideals are intersections of primes",
                  check_prime_intersections),
        Statement("L5.14", "fuzzy idempotent case: irreducible h-prime fuzzy h-ideal above λ keeping λ(a)",
                  check_irreducible_h_prime_above, True),
        Statement("T5.15", "fuzzy idempotency iff fuzzy h-ideals are meets of h-primes",
                  check_h_prime_intersections, True),
        Statement("T6.2", "one-sided and two-sided semiprime element test", check_semiprime_element_test),
        Statement("C6.3", "commutative with identity: semiprime iff a² in P forces a",
                  check_semiprime_commutative),
        Statement("T6.4", "h-idempotency iff every proper h-ideal is semiprime", check_idempotent_iff_semiprime),
        Statement("T6.5", "fuzzy idempotency iff every non-constant fuzzy h-ideal is h-semiprime",
                  check_fuzzy_idempotent_iff_semiprime, True),
        Statement("T6.9", "semiprime in the second sense iff proper level sets are semiprime",
                  check_semiprime_levels, True),
        Statement("C6.10", "two-valued indicator is semiprime iff A is semiprime", check_semiprime_indicator, True),
        Statement("P6.11", "commutative with identity: semiprime iff δ(a²) = δ(a)", check_semiprime_square, True),
    )
}


def resolve_ids(ids: Optional[Iterable[str]]) -> List[str]:
    """
    Raises:
        InputError: неизвестный идентификатор
    """
    if ids is None:
        return list(CATALOG)
    resolved = []
    for statement_id in ids:
        statement_id = statement_id.strip()
        if statement_id == "all":
            return list(CATALOG)
        if statement_id not in CATALOG:
            raise InputError(f"unknown statement {statement_id!r}")
        resolved.append(statement_id)
    return resolved


def run_statement(
    hemiring: Hemiring,
    statement_id: str,
    config: WorkbenchConfig,
    context: Optional[StructureContext] = None,
) -> TheoremReport:
    """
    Проверяет одно утверждение на одной структуре

    Args:
        hemiring: Структура
        statement_id: Идентификатор из CATALOG
        config: Сетка и лимиты
        context: Общий кэш перечислений (создаётся, если не передан)

    Returns:
        TheoremReport

    Raises:
        InputError: неизвестный идентификатор
        CapacityError: перечисление превышает лимиты
    """
    if statement_id not in CATALOG:
        raise InputError(f"unknown statement {statement_id!r}")
    context = context or StructureContext(hemiring, config)
    verdict = CATALOG[statement_id].check(context)
    logger.debug("Утверждение проверено", statement=statement_id, structure=hemiring.name, status=verdict.status)
    return TheoremReport(
        statement=statement_id,
        structure=hemiring.name,
        status=verdict.status,
        witness=verdict.witness,
        scope=verdict.scope,
        quarantined=hemiring.quarantined,
    )


@dataclass
class SuiteSummary:
    holds: int = 0
    fails: int = 0
    vacuous: int = 0
    errors: int = 0
    quarantined: int = 0

    def add(self, report: TheoremReport) -> None:
        if report.quarantined:
            self.quarantined += 1
        elif report.status == HOLDS:
            self.holds += 1
        elif report.status == FAILS:
            self.fails += 1
        elif report.status == VACUOUS:
            self.vacuous += 1
        else:
            self.errors += 1

    @property
    def ok(self) -> bool:
        return self.fails == 0 and self.errors == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "summary": True,
            "holds": self.holds,
            "fails": self.fails,
            "vacuous": self.vacuous,
            "errors": self.errors,
            "quarantined": self.quarantined,
        }


def run_suite(
    corpus: Sequence[Hemiring],
    ids: Optional[Iterable[str]],
    config: WorkbenchConfig,
) -> Tuple[List[TheoremReport], SuiteSummary]:
    """
    Декартово произведение каталог × корпус; ошибка одной ячейки не прерывает прогон

    Returns:
        Отчёты в порядке каталога, затем корпуса, и сводка (карантинные отчёты в неё не входят)
    """
    if not corpus:
        raise InputError("corpus is empty")
    statement_ids = resolve_ids(ids)
    contexts = [StructureContext(h, config) for h in corpus]
    reports: List[TheoremReport] = []
    summary = SuiteSummary()
    for statement_id in statement_ids:
        for context in contexts:
            hemiring = context.hemiring
            try:
                report = run_statement(hemiring, statement_id, config, context)
            except WorkbenchError as e:
                logger.warning("Утверждение не проверено", statement=statement_id, structure=hemiring.name,
                               error=e.detail)
                report = TheoremReport(statement_id, hemiring.name, ERROR, {"error": e.detail}, e.context,
                                       hemiring.quarantined)
            reports.append(report)
            summary.add(report)
    logger.info("Прогон каталога завершён", structures=len(corpus), statements=len(statement_ids),
                fails=summary.fails, errors=summary.errors)
    return reports, summary


@dataclass(frozen=True)
class Diagnostic:
    """Поиск, не влияющий на сводку: полупростые, но не простые идеалы и т. п."""

    name: str
    structure: str
    found: List[str]

    def to_dict(self) -> Dict[str, Any]:
        return {"diagnostic": self.name, "structure": self.structure, "found": self.found}


def run_diagnostics(hemiring: Hemiring, config: WorkbenchConfig) -> List[Diagnostic]:
    context = StructureContext(hemiring, config)
    semiprime_not_prime, prime_not_semiprime = [], []
    for mask, result in context.classifications.items():
        if not result.is_proper:
            continue
        if result.is_semiprime and not result.is_prime:
            semiprime_not_prime.append(result.ideal.format())
        if result.is_prime and not result.is_semiprime:
            prime_not_semiprime.append(result.ideal.format())
    return [
        Diagnostic("semiprime-not-prime", hemiring.name, semiprime_not_prime),
        Diagnostic("prime-not-semiprime", hemiring.name, prime_not_semiprime),
    ]
