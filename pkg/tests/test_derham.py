import pytest

from tensor_category_utils import parse_ring
from tensor_category_utils.constructions import Derham, FpMod
from tensor_category_utils.errors import ModuleError, RingError


@pytest.mark.parametrize("literal, dims, cohomology", [
    ("QQ[x]/(x^2)", [2, 1], [1, 0]),
    ("QQ[x]/(x^3)", [3, 2], [1, 0]),
    ("QQ[x]/(x^2-1)", [2, 0], [2, 0]),
])
def test_derham_complex_of_one_variable(literal, dims, cohomology):
    complejo = Derham.derham_complex(parse_ring(literal))
    assert complejo.dims == dims
    assert complejo.cohomology() == cohomology


def test_derham_complex_of_rationals():
    assert Derham.derham_cohomology(parse_ring("QQ")) == [1]


def test_leibniz_rule():
    assert Derham.leibniz_check(parse_ring("QQ[x,y]/(x^2, y^2)")) == []


@pytest.mark.parametrize("literal", ["QQ[x]/(x^3)", "QQ[x,y]/(x^2, x*y, y^2)"])
def test_two_presentations_of_omega1_agree(literal):
    r = Derham.omega1_crosscheck(parse_ring(literal))
    assert r["isomorphism"]
    assert r["commutes_with_d"]
    assert r["jacobian_dim"] == r["cokernel_dim"]


def test_characteristic_two_rejected():
    with pytest.raises(RingError):
        Derham.derham_complex(parse_ring("ZZ/2[x]/(x^2)"))


def test_infinite_dimensional_algebra_rejected():
    with pytest.raises(ModuleError):
        Derham.derham_complex(parse_ring("QQ[x]"))


def test_derivation_must_respect_the_ideal():
    B = parse_ring("QQ[x]/(x^3)")
    assert not Derham.universal_derivation_check(B, FpMod.unit(B), [[1]])
    assert Derham.universal_derivation_check(B, FpMod.presentation(B, 1, [["x^2"]]), [[1]])


def test_omega1_functoriality():
    r = Derham.omega1_functoriality_checks(parse_ring("QQ[x]/(x^2)"), parse_ring("QQ[y]/(y^2)"),
                                           parse_ring("QQ"))
    assert r["sum_rule"]["isomorphism"]
    assert r["base_change"]["isomorphism"]


def test_tensor_algebra_renames_clashing_variables():
    T, renombre = Derham.tensor_algebra(parse_ring("QQ[x]/(x^2)"), parse_ring("QQ[x]/(x^3)"))
    assert renombre == {"x": "x_2"}
    assert T.dim == 6


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_euler_sequence_contraction(n):
    r = Derham.euler_contraction_check(n)
    assert all(v for k, v in r.items() if k != "n")
