import pytest
from sympy import Matrix, eye

from tensor_category_utils.constructions import FreeSym
from tensor_category_utils.errors import CategoryError
from tensor_category_utils.sample_data import SampleData


@pytest.fixture
def flecha():
    return FreeSym.arrow_category()


def test_perm_groupoid_homs():
    assert len(FreeSym.perm_groupoid_hom(3, 3)) == 6
    assert FreeSym.perm_groupoid_hom(2, 3) == []
    assert FreeSym.perm_groupoid_hom(0, 0) == [()]


def test_composition_laws(flecha):
    assert FreeSym.composition_laws(flecha, muestras=20, seed=1)["ok"]
    assert FreeSym.composition_laws(FreeSym.one_object_group(3), muestras=20, seed=1)["ok"]


def test_symmetry_squares_to_identity(flecha):
    s = FreeSym.symmetry(flecha, ("A",), ("B",))
    vuelta = FreeSym.symmetry(flecha, ("B",), ("A",))
    assert FreeSym.smc_compose(flecha, vuelta, s) == FreeSym.identity(flecha, ("A", "B"))
    assert FreeSym.smc_inverse(flecha, s) == vuelta


def test_non_invertible_component(flecha):
    f = FreeSym.morphism(flecha, ("A",), ("B",), (0,), ("f",))
    with pytest.raises(CategoryError):
        FreeSym.smc_inverse(flecha, f)


def test_morphisms_must_be_well_typed(flecha):
    with pytest.raises(CategoryError):
        FreeSym.morphism(flecha, ("A",), ("A",), (0,), ("f",))
    with pytest.raises(CategoryError):
        FreeSym.morphism(flecha, ("A", "A"), ("A", "A"), (0, 0), ("id_A", "id_A"))


def test_compose_requires_matching_objects(flecha):
    f = FreeSym.identity(flecha, ("A",))
    g = FreeSym.identity(flecha, ("B",))
    with pytest.raises(CategoryError):
        FreeSym.smc_compose(flecha, g, f)


def test_category_validation():
    with pytest.raises(CategoryError):
        FreeSym.category(("A",), {"g": ("A", "A")}, {}, {})


def test_from_json_matches_builtin():
    datos = {
        "objects": ["A", "B"],
        "arrows": {"id_A": ["A", "A"], "id_B": ["B", "B"], "f": ["A", "B"]},
        "identities": {"A": "id_A", "B": "id_B"},
        "composition": [["id_A", "id_A", "id_A"], ["id_B", "id_B", "id_B"],
                        ["f", "id_A", "f"], ["id_B", "f", "f"]]
    }
    assert FreeSym.from_json(datos) == FreeSym.arrow_category()


def test_extended_functor_on_swap(flecha):
    datos = SampleData.FUNTOR_FLECHA
    objeto, imagen = FreeSym.extend_functor(flecha, datos["dims"], datos["images"])
    assert objeto(("B", "B", "A")) == 4
    intercambio = Matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    assert imagen(FreeSym.symmetry(flecha, ("B",), ("B",))) == intercambio
    assert imagen(FreeSym.identity(flecha, ("B", "B"))) == eye(4)


def test_extended_functor_checks(flecha):
    datos = SampleData.FUNTOR_FLECHA
    r = FreeSym.extension_checks(flecha, datos["dims"], datos["images"], muestras=15, seed=3)
    assert r["ok"]


def test_group_functor_extension():
    datos = SampleData.FUNTOR_GRUPO
    r = FreeSym.extension_checks(FreeSym.one_object_group(2), datos["dims"], datos["images"], muestras=10)
    assert r["ok"]


def test_non_functor_rejected(flecha):
    imagenes = dict(SampleData.FUNTOR_FLECHA["images"], id_B=[[1, 0], [0, 0]])
    with pytest.raises(CategoryError):
        FreeSym.extend_functor(flecha, SampleData.FUNTOR_FLECHA["dims"], imagenes)
