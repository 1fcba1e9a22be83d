"""
Встроенные структуры: трёхэлементное коммутативное полукольцо с единицей,
четырёхэлементные таблицы в карантине и малые структуры для тестов
"""
from fractions import Fraction
from typing import Dict, List

from app.models.fuzzy import FuzzySubset, meet
from app.models.fuzzy_products import h_intrinsic_product
from app.models.hemiring import CayleyTables, Hemiring, build_hemiring, verify_axioms
from app.models.schemas import QuarantineAnnotation

EX66 = "ex66"
EX67 = "ex67"


def ex66() -> Hemiring:
    """{0, a, 1}: сложение: максимум при 0 < 1 < a, единица 1"""
    tables = CayleyTables.from_named(
        ["0", "a", "1"],
        [["0", "a", "1"], ["a", "a", "a"], ["1", "a", "1"]],
        [["0", "0", "0"], ["0", "a", "a"], ["0", "a", "1"]],
        EX66,
    )
    return build_hemiring(tables)


def ex67_tables() -> CayleyTables:
    return CayleyTables.from_named(
        ["0", "a", "b", "c"],
        [["0", "a", "b", "c"], ["a", "b", "c", "a"], ["b", "c", "a", "b"], ["c", "a", "b", "c"]],
        [["0", "0", "0", "0"], ["0", "a", "b", "c"], ["0", "b", "b", "c"], ["0", "c", "b", "c"]],
        EX67,
    )


def ex67() -> Hemiring:
    """Таблицы как напечатаны; дистрибутивность нарушена, поэтому структура в карантине"""
    return build_hemiring(ex67_tables(), quarantine=True)


def z2_field() -> Hemiring:
    tables = CayleyTables.from_named(["0", "e"], [["0", "e"], ["e", "0"]], [["0", "0"], ["0", "e"]], "z2_field")
    return build_hemiring(tables)


def z2_null() -> Hemiring:
    tables = CayleyTables.from_named(["0", "e"], [["0", "e"], ["e", "0"]], [["0", "0"], ["0", "0"]], "z2_null")
    return build_hemiring(tables)


def trivial() -> Hemiring:
    return build_hemiring(CayleyTables.create(["0"], [[0]], [[0]], "trivial"))


def ex67_fuzzy_sets(parent: Hemiring) -> Dict[str, FuzzySubset]:
    """λ, μ, δ с заявленными значениями на 0, c и a, b"""
    def on(top: str, bottom: str) -> FuzzySubset:
        return FuzzySubset.from_mapping(
            parent, {"0": Fraction(top), "c": Fraction(top), "a": Fraction(bottom), "b": Fraction(bottom)}
        )

    return {"lambda": on("0.8", "0.4"), "mu": on("0.6", "0.5"), "delta": on("0.7", "0.45")}


CLAIMED_PRODUCT = {"0": "3/5", "a": "2/5", "b": "2/5", "c": "3/5"}


def ex67_annotation() -> QuarantineAnnotation:
    """
    Заявленные значения λ⊙μ рядом с прямым вычислением по напечатанным таблицам
    """
    parent = ex67()
    report = verify_axioms(parent.tables, exhaustive=True)
    sets = ex67_fuzzy_sets(parent)
    computed = h_intrinsic_product(sets["lambda"], sets["mu"])
    differing: List[str] = [x for x in parent.elements if computed.as_dict()[x] != CLAIMED_PRODUCT[x]]
    return QuarantineAnnotation(
        structure=EX67,
        axiom_report=report.to_dict(),
        fuzzy_sets={name: f.as_dict() for name, f in sets.items()},
        claimed={"lambda_odot_mu": dict(CLAIMED_PRODUCT)},
        computed={
            "lambda_odot_mu": computed.as_dict(),
            "lambda_meet_mu": meet(sets["lambda"], sets["mu"]).as_dict(),
        },
        differing_elements=differing,
        note="printed tables violate distributivity; claimed values are recorded, not trusted",
    )
