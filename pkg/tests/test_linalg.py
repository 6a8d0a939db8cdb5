from sympy import Matrix, Rational
import pytest

from tensor_category_utils.errors import RingError
from tensor_category_utils.linalg import (Base, QQ_BASE, ZZ_BASE, RelationSpan,
                                         smith, rank, kernel, solve, rref)


def test_smith_diagonal_2_3():
    U, D, V = smith([[2, 0], [0, 3]], 2, 2)
    assert D == Matrix([[1, 0], [0, 6]])
    assert U * Matrix([[2, 0], [0, 3]]) * V == D


def test_smith_rectangular_keeps_zeros_last():
    A = [[0, 4], [0, 6]]
    U, D, V = smith(A, 2, 2)
    assert [D[0, 0], D[1, 1]] == [2, 0]
    assert U * Matrix(A) * V == D


def test_rank_over_rationals_and_integers():
    assert rank([[1, 2], [2, 4]], 2, QQ_BASE) == 1
    assert rank([[2, 0], [0, 3]], 2, ZZ_BASE) == 2


def test_rank_over_composite_modulus_is_undefined():
    with pytest.raises(RingError):
        rank([[2]], 1, Base('ZZ', 6))


def test_rref_requires_field():
    with pytest.raises(RingError):
        rref([[1]], 1, ZZ_BASE)


def test_kernel_vectors_are_annihilated():
    A = [[1, 1, 0], [0, 1, 1]]
    for x in kernel(A, 3, QQ_BASE):
        assert all(sum(a * b for a, b in zip(fila, x)) == 0 for fila in A)
    assert len(kernel(A, 3, QQ_BASE)) == 1


def test_solve_integer_vs_rational():
    assert solve([[2]], 1, [3], ZZ_BASE) is None
    assert solve([[2]], 1, [3], QQ_BASE) == [Rational(3, 2)]


def test_solve_modulo_n():
    x = solve([[2]], 1, [4], Base('ZZ', 6))
    assert x is not None
    assert (2 * x[0] - 4) % 6 == 0


def test_gf_normalizes_fractions():
    assert Base('GF', 5).normalize("1/2") == 3


def test_relation_span_over_integers():
    span = RelationSpan(2, [[2, 0]], ZZ_BASE)
    assert span.moduli == [2, 0]
    assert span.contains([4, 0])
    assert not span.contains([1, 0])


def test_relation_span_over_field_reduces():
    span = RelationSpan(2, [[1, 1]], QQ_BASE)
    assert span.dimension == 1
    assert span.contains([3, 3])
    assert span.coordinates([1, 0]) == span.coordinates([0, -1]) == [-1]
