import pytest

from tensor_category_utils.constructions import MonadKit, Monoid
from tensor_category_utils.errors import TheoryError


@pytest.fixture
def pointed():
    return MonadKit.theory('pointed')


def test_pointed_smash_product(pointed):
    A = MonadKit.pointed_set(pointed, 2)
    tensor = MonadKit.tensor_modules(A, A)
    assert tensor.mode == 'coequalizer'
    assert tensor.algebra.size == 5
    assert MonadKit.tensor_is_bihom(tensor, A, A)


def test_both_tensor_modes_agree_on_size(pointed):
    A = MonadKit.pointed_set(pointed, 2)
    B = MonadKit.pointed_set(pointed, 1)
    directo = MonadKit.tensor_modules(A, B, mode='coequalizer')
    por_generadores = MonadKit.tensor_modules(A, B, mode='generators')
    assert directo.algebra.size == por_generadores.algebra.size == 3


def test_coprime_cyclic_modules_tensor_to_zero():
    T = MonadKit.theory('modn', 6)
    tensor = MonadKit.tensor_modules(MonadKit.cyclic_module(T, 2), MonadKit.cyclic_module(T, 3))
    assert tensor.algebra.size == 1


def test_cyclic_module_must_divide_modulus():
    with pytest.raises(TheoryError):
        MonadKit.cyclic_module(MonadKit.theory('modn', 6), 4)


def test_universal_property(pointed):
    A = MonadKit.pointed_set(pointed, 1)
    C = MonadKit.pointed_set(pointed, 2)
    r = MonadKit.verify_universal(A, A, C)
    assert r["bijection"]
    assert r["bihoms"] == r["homs"] == 3


def test_supl_free_tensor_is_free_on_product():
    r = MonadKit.free_tensor_iso(MonadKit.theory('supl'), ['a', 'b'], ['c'])
    assert r["sizes"] == [4, 4]
    assert r["homomorphisms"] and r["inverse"] and r["on_generators"]


def test_structure_isomorphisms(pointed):
    r = MonadKit.verify_structure_isos(pointed, 1, 2, 1)
    assert r["ok"], r["failed"]


@pytest.mark.parametrize("nombre, n, max_size", [
    ("pointed", None, 2), ("semilattice", None, 1), ("modn", 3, 1), ("mset", None, 2),
])
def test_commutative_monad_laws(nombre, n, max_size):
    r = MonadKit.check_monad_laws(MonadKit.theory(nombre, n), max_size=max_size, seed=42)
    assert r["ok"], r["failed"]


def test_non_commutative_monoid_breaks_symmetry():
    T = MonadKit.theory('mset', monoid=Monoid.left_zero())
    r = MonadKit.check_monad_laws(T, max_size=2, seed=42)
    assert "symmetry" in r["failed"]
    assert r["laws"]["assoc"]["witness"] is None


def test_algebra_checks_operations(pointed):
    with pytest.raises(TheoryError):
        MonadKit.algebra(pointed, ['*', 'a'], {})
    with pytest.raises(TheoryError):
        MonadKit.algebra(pointed, ['*', 'a'], {'base': 'z'})


def test_semilattice_axioms_enforced():
    T = MonadKit.theory('semilattice')
    with pytest.raises(TheoryError):
        MonadKit.algebra(T, ['x', 'y'], {'join': [['x', 'x'], ['x', 'x']]})


def test_tensor_requires_same_theory(pointed):
    A = MonadKit.pointed_set(pointed, 1)
    B = MonadKit.standard_algebra(MonadKit.theory('supl'), 1)
    with pytest.raises(TheoryError):
        MonadKit.tensor_modules(A, B)


def test_unknown_theory():
    with pytest.raises(TheoryError):
        MonadKit.theory('groups')


def test_check_algebra_on_free_algebra():
    T = MonadKit.theory('supl')
    assert MonadKit.check_algebra(MonadKit.free_algebra(T, ['a', 'b'])) == []
