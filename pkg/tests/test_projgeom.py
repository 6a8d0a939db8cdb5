from sympy import Rational, Symbol, expand
import pytest

from tensor_category_utils.constructions import ProjGeom
from tensor_category_utils.errors import InputError, RelationError


def _mismo_salvo_signo(q, esperado):
    return expand(q - esperado) == 0 or expand(q + esperado) == 0


def test_plucker_relation_of_gr_2_4():
    relaciones = ProjGeom.plucker_relations(4, 2)
    X = {c: Symbol(c) for c in relaciones.coordinates}
    assert len(relaciones) == 1
    esperado = X["X12"] * X["X34"] - X["X13"] * X["X24"] + X["X14"] * X["X23"]
    assert _mismo_salvo_signo(relaciones.quadrics[0], esperado)


def test_segre_relation_of_p1_p1():
    relaciones = ProjGeom.segre_relations(2, 2)
    x = {c: Symbol(c) for c in relaciones.coordinates}
    assert len(relaciones) == 1
    assert _mismo_salvo_signo(relaciones.quadrics[0], x["x00"] * x["x11"] - x["x01"] * x["x10"])


@pytest.mark.parametrize("familia, dims", [
    ("segre", (2, 2)), ("segre", (2, 3)), ("veronese", (2, 2)), ("veronese", (2, 3)), ("plucker", (4, 2)),
])
def test_quadrics_span_the_degree_two_kernel(familia, dims):
    relaciones = getattr(ProjGeom, f"{familia}_relations")(*dims)
    imagenes, variables = getattr(ProjGeom, f"{familia}_images")(*dims)
    r = ProjGeom.relation_completeness(relaciones, imagenes, variables)
    assert r["contained"]
    assert r["complete"]


def test_segre_roundtrip():
    r = ProjGeom.segre_roundtrip([1, 2], [3, -1])
    assert r["forward_satisfies"]
    assert r["factors_match"]
    assert r["product_match"]


def test_segre_backward_rejects_non_product():
    with pytest.raises(RelationError):
        ProjGeom.segre_backward([1, 0, 0, 1], 2, 2)


def test_veronese_roundtrip():
    r = ProjGeom.veronese_roundtrip([1, 2], 3)
    assert r["t"] == [1, 2, 4, 8]
    assert r["s_match"]
    assert r["power_match"]


def test_plucker_roundtrip_from_matrix():
    r = ProjGeom.plucker_roundtrip([[1, 2, 0, 3], [0, 1, 1, -1]])
    assert r["satisfies"]
    assert r["rank"] == 2
    assert r["minors_match"]
    assert r["row_space_match"]


def test_plucker_backward_rejects_violating_covector():
    with pytest.raises(RelationError):
        ProjGeom.plucker_backward([1, 0, 0, 0, 0, 1], 4, 2)


def test_plucker_forward_needs_full_rank():
    with pytest.raises(InputError):
        ProjGeom.plucker_forward([[1, 2, 3], [2, 4, 6]])


@pytest.mark.parametrize("s", [[1], [1, 2, 0], [0, 3, -1, 2]])
def test_koszul_complex_is_exact(s):
    k = next(i for i, x in enumerate(s) if x)
    e = [0] * len(s)
    e[k] = 1 / Rational(s[k])
    K = ProjGeom.koszul_complex(s, e=e)
    assert K.exact
    assert all(K.contraction.values())


def test_koszul_contraction_needs_section():
    with pytest.raises(InputError):
        ProjGeom.koszul_contraction_check([1, 2], [1, 1])


def test_zero_covector_rejected():
    with pytest.raises(InputError):
        ProjGeom.koszul_complex([0, 0])


def test_essential_discreteness():
    r = ProjGeom.essential_discreteness_check([1, 2], [2, 4])
    assert r["same_point"]
    assert r["comparison"] == 2
    assert r["unique"] and r["invertible"]
    assert not ProjGeom.essential_discreteness_check([1, 2], [1, 3])["same_point"]


def test_rees_presentation():
    r = ProjGeom.rees_presentation(2)
    assert r["certified"]
    assert len(r["relations"]) == 1
