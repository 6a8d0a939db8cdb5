import pytest

from tensor_category_utils import parse_ring
from tensor_category_utils.constructions import ExactRing, FpMod
from tensor_category_utils.errors import ModuleError, RingError


def test_tensor_of_cyclic_groups(ZZ):
    T = FpMod.tensor(FpMod.cyclic(ZZ, 4), FpMod.cyclic(ZZ, 6))
    assert T.invariants == [2]


def test_free_module_invariants(ZZ, QQ):
    assert FpMod.free(ZZ, 1).invariants == [0]
    assert FpMod.free(QQ, 3).base_dimension == 3


def test_hom_z2_z4(ZZ):
    hom = FpMod.hom_module(FpMod.cyclic(ZZ, 2), FpMod.cyclic(ZZ, 4))
    assert hom.module.invariants == [2]


def test_hom_over_dual_numbers_has_dimension_two():
    R = parse_ring("QQ[x]/(x^2)")
    hom = FpMod.hom_module(FpMod.unit(R), FpMod.unit(R))
    assert hom.module.base_dimension == 2


def test_symmetry_is_involution(QQ, ZZ):
    assert FpMod.symmetry_involution_check(FpMod.free(QQ, 2), FpMod.free(QQ, 1))
    assert FpMod.symmetry_involution_check(FpMod.cyclic(ZZ, 6), FpMod.free(ZZ, 2))


def test_symtrivial(QQ):
    assert FpMod.is_symtrivial(FpMod.unit(QQ))
    assert not FpMod.is_symtrivial(FpMod.free(QQ, 2))


def test_morphism_must_respect_relations(ZZ):
    with pytest.raises(ModuleError):
        FpMod.morphism(FpMod.cyclic(ZZ, 2), FpMod.unit(ZZ), [[1]])


def test_morphism_rings_must_agree(ZZ, QQ):
    with pytest.raises(ModuleError):
        FpMod.morphism(FpMod.unit(ZZ), FpMod.unit(QQ), [[1]])


def test_isomorphism_and_composition(ZZ):
    M = FpMod.cyclic(ZZ, 6)
    menos = FpMod.morphism(M, M, [[-1]])
    assert FpMod.is_isomorphism(menos)
    assert FpMod.equal(FpMod.compose(menos, menos), FpMod.identity(M))
    doble = FpMod.morphism(M, M, [[2]])
    assert not FpMod.is_injective(doble)
    assert not FpMod.is_surjective(doble)


def test_unit_is_a_line(ZZ):
    c = FpMod.line_classify(FpMod.unit(ZZ))
    assert c["invertible"]
    assert c["signature"] == 1
    assert c["is_line"]
    assert not c["is_antiline"]


def test_torsion_group_is_not_invertible(ZZ):
    assert not FpMod.line_classify(FpMod.cyclic(ZZ, 2))["invertible"]


def test_odd_degree_twisted_unit_is_antiline(QQ):
    X = FpMod.graded_unit(QQ, twisted=True, grado=1)
    c = FpMod.line_classify(X)
    assert c["invertible"]
    assert c["signature"] == -1
    assert c["is_antiline"]


def test_even_degree_twisted_unit_is_line(QQ):
    c = FpMod.line_classify(FpMod.graded_unit(QQ, twisted=True, grado=2))
    assert c["is_line"]


def test_shift_matches_tensor_with_unit_power(QQ):
    M = FpMod.graded(QQ, {0: FpMod.free(QQ, 2), 1: FpMod.unit(QQ)}, True)
    for d in (-1, 0, 2):
        assert FpMod.shift_check(M, d)


def test_graded_tensor_mixed_symmetries_rejected(QQ):
    with pytest.raises(ModuleError):
        FpMod.graded_tensor(FpMod.graded_unit(QQ, True), FpMod.graded_unit(QQ, False))


def test_oid_of_z6():
    r = FpMod.oid_decompose(ExactRing.integers_mod(6))
    assert r["idempotents"] == [0, 1, 3, 4]
    assert sorted(r["maximal"]) == [3, 4]
    assert r["crt_match"]
    assert all(d["isomorphism"] for d in r["decompositions"])


def test_oid_requires_integers_mod(QQ):
    with pytest.raises(RingError):
        FpMod.oid_decompose(QQ)


@pytest.mark.parametrize("n, m", [(2, 3), (2, 2), (1, 4)])
def test_rank_uniqueness(ZZ, n, m):
    r = FpMod.rank_uniqueness_check(ZZ, n, m)
    assert r["consistent"]
    assert r["dims"] == [n, m]


@pytest.mark.parametrize("literal", ["QQ", "QQ[x]/(x^2)", "QQ[x]/(x^2-x)"])
def test_amitsur_complex_is_exact(QQ, literal):
    complejo = FpMod.amitsur_complex(parse_ring(literal), FpMod.unit(QQ), 3)
    assert complejo.d_squared_zero()
    assert FpMod.amitsur_exactness(complejo)


def test_epsilon_module_inverse():
    r = FpMod.epsilon_inverse_check([1, 0], [0, 1])
    assert r["beta_isomorphism"]
    assert r["dual_is_Kbar"]
    assert r["invertible"]


def test_epsilon_module_requires_orthogonality():
    with pytest.raises(ModuleError):
        FpMod.epsilon_module([1, 0], [1, 0])


def test_twisted_tensor_with_negative_degrees_has_integer_signs(QQ):
    T = FpMod.graded_tensor(FpMod.graded_unit(QQ, True, 1), FpMod.graded_unit(QQ, True, -1))
    assert T.module.degrees == [0]
    signo = T.symmetry[0].matrix[0, 0]
    assert signo.is_Integer
    assert signo == -1


@pytest.mark.parametrize("d", [1, 3])
def test_twisted_shift_by_positive_degree(QQ, d):
    M = FpMod.graded(QQ, {1: FpMod.unit(QQ), 2: FpMod.free(QQ, 2)}, True)
    assert FpMod.shift_check(M, d)


@pytest.mark.parametrize("literal, residuo", [
    ("QQ[x]/(x^2)", 1),
    ("QQ[x]/(x^2-1)", 1),
    ("QQ[x]/(x^2+1)", 2),
    ("GF(3)[x,y]/(x^2, y^2)", 1),
])
def test_rank_uniqueness_over_polynomial_quotients(literal, residuo):
    R = parse_ring(literal)
    r = FpMod.rank_uniqueness_check(R, 2, 3)
    assert r["consistent"]
    assert r["dims"] == [2, 3]
    assert ExactRing.residue_field(R).dim == residuo
