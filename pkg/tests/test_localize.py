import pytest
from sympy import Matrix

from tensor_category_utils import parse_group
from tensor_category_utils.constructions import FgAbGroup, Localize
from tensor_category_utils.constructions.localize import Endoreflector, GradedPieces
from tensor_category_utils.errors import InputError, ReflectorError
from tensor_category_utils.sample_data import SampleData


def test_canonical_invariant_factors():
    assert FgAbGroup.from_orders([2, 3]) == FgAbGroup((6,))
    assert parse_group("0,4") == FgAbGroup((4, 0))
    assert str(FgAbGroup.from_orders([0, 4])) == "Z/4 + Z"


@pytest.mark.parametrize("ordenes, a, esperado", [
    ([12], 2, "Z/3"),
    ([0, 4], 2, "Z"),
    ([8], 2, "0"),
    ([2, 6], 3, "Z/2 + Z/2"),
])
def test_torsion_reflection(ordenes, a, esperado):
    assert str(Localize.torsion_reflect(FgAbGroup.from_orders(ordenes), a).target) == esperado


def test_quotient_map_of_z12():
    r = Localize.torsion_reflect(FgAbGroup((12,)), 2)
    assert r.apply((4,)) == (1,)
    assert r.apply((3,)) == (0,)


def test_iteration_of_z8_takes_three_steps():
    punto, pasos = Localize.iterate_reflector(Localize.torsion_reflector(2), FgAbGroup((8,)))
    assert punto.is_zero
    assert pasos == 3


def test_identity_reflector_is_already_fixed():
    assert Localize.iterate_reflector(Localize.identity_reflector(), FgAbGroup((5,))) == (FgAbGroup((5,)), 0)


def test_reflector_without_fixed_point():
    nunca = Endoreflector('never', lambda M: M, lambda M: False)
    with pytest.raises(ReflectorError):
        Localize.iterate_reflector(nunca, FgAbGroup((2,)), max_steps=3)


def test_a_must_be_at_least_two():
    with pytest.raises(InputError):
        Localize.torsion_reflector(1)


def test_reflection_universal_property():
    r = Localize.reflection_universal_check(FgAbGroup((12,)), 2, Localize.default_targets(2, 9))
    assert r["ok"]
    assert r["reflected"] == "Z/3"


def test_universal_property_needs_local_targets():
    with pytest.raises(InputError):
        Localize.reflection_universal_check(FgAbGroup((12,)), 2, [FgAbGroup((4,))])


def test_naturality():
    assert Localize.naturality_check(FgAbGroup((4,)), FgAbGroup((2,)), [(1,)], 2) == []
    assert Localize.naturality_check(FgAbGroup((12,)), FgAbGroup((6,)), [(1,)], 2) == []


def test_tf_tensor_of_free_groups():
    assert Localize.tf_tensor(FgAbGroup((0, 0)), FgAbGroup((0, 0, 0))) == FgAbGroup((0,) * 6)
    assert Localize.tf_tensor(FgAbGroup((2, 0)), FgAbGroup((3,))).is_zero


def test_tf_tensor_laws():
    grupos = [FgAbGroup.from_orders(g) for g in SampleData.GRUPOS_TF]
    assert Localize.tf_tensor_laws(grupos)["ok"]


def test_multiplication_is_epi_only_without_torsion():
    r = Localize.epimorphism_check(2, [FgAbGroup((0,)), FgAbGroup((2,))])
    assert r["ok"]
    sin_torsion, con_torsion = r["targets"]
    assert sin_torsion["injective"]
    assert not con_torsion["injective"]


@pytest.mark.parametrize("sumandos, esperado", [
    ([(0, None)], 1),
    ([(0, 2)], 0),
    ([(0, None), (0, 1)], 1),
    ([(1, None), (0, None)], 2),
])
def test_graded_localization(sumandos, esperado):
    r = Localize.section_localize(Localize.graded_from_summands(sumandos, 6))
    assert r["colimit_dim"] == esperado


def test_graded_data_that_does_not_stabilize():
    with pytest.raises(ReflectorError):
        Localize.section_localize(GradedPieces((1, 1), (Matrix([[0]]),)))


def test_graded_pieces_shape_is_checked():
    with pytest.raises(InputError):
        GradedPieces((1, 2), (Matrix([[1]]),))
