from sympy import Rational, oo
import pytest

from tensor_category_utils.constructions import FiniteQuantale, IdealZ, Quantale
from tensor_category_utils.constructions.quantale import DyadicUnit, HalfSequence
from tensor_category_utils.errors import InputError
from tensor_category_utils.sample_data import SampleData


def test_sum_and_product_of_ideals():
    suma, producto = Quantale.ideal_sum_product(IdealZ(4), IdealZ(6))
    assert suma == IdealZ(2)
    assert producto == IdealZ(24)
    assert str(producto) == "(24)"


def test_ideal_residuals():
    assert Quantale.residual(IdealZ(6), IdealZ(4)) == IdealZ(3)
    assert IdealZ(5).residual(IdealZ(0)) == IdealZ(1)


def test_ideal_order_and_intersection():
    assert IdealZ(12) <= IdealZ(4)
    assert not IdealZ(4) <= IdealZ(12)
    assert IdealZ(4).intersection(IdealZ(6)) == IdealZ(12)
    assert IdealZ(-3) == IdealZ(3)


def test_dyadic_residual():
    assert DyadicUnit.residual("1/4", "1/2") == Rational(1, 2)
    assert DyadicUnit.residual("1/2", "1/4") == 1
    assert DyadicUnit.residual("1/2", 0) == 1


def test_non_dyadic_rejected():
    with pytest.raises(InputError):
        DyadicUnit.element("1/3")


def test_vanishing_of_36():
    assert [str(p) for p in Quantale.vanishing(IdealZ(36))] == ["(2)", "(3)"]


def test_zariski_laws():
    r = Quantale.zariski_laws_check([IdealZ(n) for n in SampleData.IDEALES])
    assert r["ok"], r["failures"]


def test_prime_oracle_finds_witness():
    es_primo, testigo = Quantale.prime_oracle(IdealZ(6))
    assert not es_primo
    assert testigo == ["(2)", "(3)"]
    assert Quantale.prime_oracle(IdealZ(7)) == (True, None)
    assert Quantale.prime_oracle(IdealZ(1))[0] is False


def test_prime_decision_agrees_with_oracle():
    assert Quantale.prime_agreement(40)["ok"]


def test_ideal_axioms_on_random_triples():
    assert Quantale.ideal_axioms_check(muestras=50, seed=7)["ok"]


@pytest.mark.parametrize("Q", [FiniteQuantale.chain3(), FiniteQuantale.divisors(12)])
def test_finite_quantales(Q):
    assert Q.axiom_witnesses() == []
    assert Q.adjunction_witnesses() == []


def test_divisor_quantale_residual():
    Q = FiniteQuantale.divisors(12)
    assert Q.bottom == 12
    assert Quantale.residual(4, 2, Q) == 2


def test_growing_window_localizes_to_infinity():
    M = Quantale.half_sequence({3: 1, 4: 1})
    assert Quantale.localize_half(M)["v"] == "inf"


def test_unit_sequence_localizes_to_one():
    r = Quantale.localize_half(Quantale.unit_sequence())
    assert r["v"] == 1
    assert r["fixed_point"] and r["idempotent"]


def test_fixed_sequences():
    assert Quantale.fixed_sequence(oo) == HalfSequence(0, (Rational(1),), 'saturate', 'constant')
    F = Quantale.fixed_sequence(Rational(3, 4))
    assert Quantale.limit(F) == Rational(3, 4)
    assert Quantale.equal(Quantale.reflect(F, 1), F)


def test_localization_respects_product():
    r = Quantale.localize_iso_check([("3/4", 2), ("inf", 0), (1, 1)])
    assert r["pairs"][0]["product"] == "3/2"
    assert r["pairs"][1]["product"] == 0
    assert r["ok"]


def test_monotonicity():
    M = Quantale.half_sequence({0: "1/2", 1: "1/2"}, tail='halving')
    N = Quantale.half_sequence({0: 1}, head='zero', tail='halving')
    assert Quantale.monotonicity_check(M, N)


@pytest.mark.parametrize("ventana", [{0: 1, 2: 1}, {0: 1, 1: "1/4"}, {}])
def test_invalid_windows(ventana):
    with pytest.raises(InputError):
        Quantale.half_sequence(ventana)


def test_residual_outside_the_dyadics():
    assert DyadicUnit.residual("1/4", "3/4") == Rational(1, 3)


@pytest.mark.parametrize("v", [0, 1, oo, Rational(3, 4)])
def test_fixed_sequence_is_a_fixed_point(v):
    F = Quantale.fixed_sequence(v)
    assert Quantale.equal(Quantale.reflect(F, 1), F)
    r = Quantale.localize_half(F)
    assert r["fixed_point"] and r["already_fixed"] and r["idempotent"]


def test_equality_ignores_the_window():
    corta = HalfSequence(0, (Rational(3, 4),), 'saturate', 'halving')
    larga = HalfSequence(-1, (Rational(1), Rational(3, 4), Rational(3, 8)), 'saturate', 'halving')
    assert Quantale.equal(corta, larga)
    assert not Quantale.equal(corta, HalfSequence(0, (Rational(3, 4),), 'saturate', 'constant'))
    assert not Quantale.equal(HalfSequence(0, (Rational(1, 2),), 'decay'),
                              HalfSequence(0, (Rational(1, 2),), 'saturate'))


@pytest.mark.parametrize("ventana, head, tail, v", [
    ({0: 0}, 'zero', 'constant', 0),
    ({0: 1}, 'saturate', 'halving', 1),
    ({3: 1, 4: 1}, 'decay', 'constant', "inf"),
])
def test_localization_is_certified(ventana, head, tail, v):
    r = Quantale.localize_half(Quantale.half_sequence(ventana, head, tail))
    assert r["v"] == v
    assert r["fixed_point"] and r["idempotent"]
