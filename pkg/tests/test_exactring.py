from sympy import Matrix, Symbol, expand
import pytest

from tensor_category_utils import parse_ring
from tensor_category_utils.constructions import ExactRing
from tensor_category_utils.errors import ParseError, RingError, ModuleError

x, y = Symbol('x'), Symbol('y')


def test_dual_numbers_basis():
    R = parse_ring("QQ[x]/(x^2)")
    assert R.basis == [(0,), (1,)]
    assert R.dim == 2
    assert R.is_zero("x^2")


def test_normal_form_reduces_by_groebner_basis():
    R = parse_ring("QQ[x,y]/(x^2-1, x*y)")
    assert ExactRing.normal_form("x^3", R) == x
    assert ExactRing.normal_form("y", R) == 0
    assert R.dim == 2


def test_groebner_basis_is_reduced():
    G = ExactRing.groebner_basis(["x^2-1", "x*y"], ["x", "y"])
    assert {expand(g) for g in G} == {x ** 2 - 1, y}


def test_groebner_basis_rejects_unknown_order():
    with pytest.raises(RingError):
        ExactRing.groebner_basis(["x"], ["x"], order="revlex")


def test_units_and_inverses():
    R = parse_ring("QQ[x]/(x^2-1)")
    assert R.is_unit("x")
    assert R.inverse("x") == x
    Z6 = parse_ring("ZZ/6")
    assert Z6.is_unit(5)
    assert Z6.inverse(5) == 5
    with pytest.raises(RingError):
        Z6.inverse(2)


def test_jacobian():
    J = ExactRing.jacobian(["x^2*y", "x+y"], ["x", "y"], parse_ring("QQ[x,y]"))
    assert J == Matrix([[2 * x * y, x ** 2], [1, 1]])


def test_jacobian_unknown_variable():
    with pytest.raises(RingError):
        ExactRing.jacobian(["x"], ["z"], parse_ring("QQ[x]"))


def test_jacobian_without_ring_accepts_absent_variables():
    J = ExactRing.jacobian(["x^2"], ["x", "y"])
    assert J == Matrix([[2 * x, 0]])


def test_minimal_polynomial_of_nilpotent():
    t = Symbol('t')
    assert ExactRing.minimal_polynomial(x, parse_ring("QQ[x]/(x^3)"), t) == t ** 3


def test_residue_field_specializes_free_variables():
    K = ExactRing.residue_field(parse_ring("QQ[x,y]/(x*y-1)"))
    assert K.dim == 1
    assert K.element("x*y") == 1
    assert K.element("y") == 1


@pytest.mark.parametrize("literal", ["QQ[x", "GF(4)", "QQ[1x]", "RR"])
def test_malformed_ring_literals(literal):
    with pytest.raises(ParseError):
        parse_ring(literal)


def test_degenerate_rings_rejected():
    with pytest.raises(RingError):
        ExactRing.integers_mod(1)
    with pytest.raises(RingError):
        ExactRing.poly_quotient(["x"], ["1"])


def test_ring_properties():
    assert parse_ring("ZZ/7").is_field
    assert parse_ring("ZZ/7").label == "ZZ/7"
    assert not ExactRing.integers().two_invertible
    assert not parse_ring("ZZ/2").two_invertible
    assert parse_ring("GF(3)").two_invertible


def test_infinite_dimensional_quotient_has_no_basis():
    R = parse_ring("QQ[x,y]/(x^2)")
    assert not R.is_finite_dimensional
    with pytest.raises(ModuleError):
        R.basis


def test_finite_field_coefficients():
    R = parse_ring("ZZ/3[x]/(x^3)")
    assert R.dim == 3
    assert R.element("4*x") == x
