import json

import pytest
from sympy import Rational, oo

from tensor_category_utils import parse_rationals, parse_window, parse_summands, parse_group, load_json_literal
from tensor_category_utils.errors import ParseError, TensorCheckError
from tensor_category_utils.helpers import Helpers
from tensor_category_utils.utils import build_module, build_algebra, validate_report


def test_parse_rationals():
    assert parse_rationals("1, 0,-1/2") == [1, 0, Rational(-1, 2)]
    with pytest.raises(ParseError):
        parse_rationals("1,x/")


def test_parse_window():
    assert parse_window("3:1,4:1/2") == {3: 1, 4: Rational(1, 2)}
    with pytest.raises(ParseError):
        parse_window("3-1")


def test_parse_summands():
    assert parse_summands("0:, 1:2") == [(0, None), (1, 2)]
    for literal in ("x:", "0:y", "", "0:1:2"):
        with pytest.raises(ParseError):
            parse_summands(literal)


def test_parse_group_rejects_text():
    with pytest.raises(ParseError):
        parse_group("12,a")


def test_load_json_literal_inline_and_file(tmp_path):
    assert load_json_literal('{"ring": "ZZ", "gens": 1}', "module")["gens"] == 1
    ruta = tmp_path / "modulo.json"
    ruta.write_text(json.dumps({"ring": "QQ", "gens": 2}), encoding="utf-8")
    assert load_json_literal(str(ruta), "module")["ring"] == "QQ"


def test_load_json_literal_errors():
    with pytest.raises(ParseError):
        load_json_literal('{"ring": "ZZ", ', "module")
    with pytest.raises(ParseError) as info:
        load_json_literal('{"theory": "groups", "carrier": [0]}', "algebra")
    assert info.value.exit_code == 2


def test_build_module():
    M = build_module({"ring": "ZZ", "gens": 1, "rels": [[6]]})
    assert M.invariants == [6]
    assert M.describe()["ring"] == "ZZ"


def test_build_pointed_algebra():
    A = build_algebra({"theory": "pointed", "carrier": ["*", "a"], "operations": {"base": "*"}})
    assert A.size == 2


def test_validate_report():
    reporte = {"command": ["rees"], "status": "pass", "seed": 42, "payload": {}, "witnesses": []}
    assert validate_report(reporte) is reporte
    with pytest.raises(TensorCheckError):
        validate_report({**reporte, "status": "maybe"})


def test_exact_values_to_json():
    assert Helpers.a_json(oo) == "inf"
    assert Helpers.a_json(Rational(3, 4)) == "3/4"
    assert Helpers.a_json(Rational(4, 2)) == 2
    assert Helpers.a_json({1: [Rational(1, 2)]}) == {"1": ["1/2"]}
    assert Helpers.a_json({"b", "a"}) == ["a", "b"]
