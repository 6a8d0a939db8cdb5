import json

import pytest

from tensor_category_utils.cli import COMANDOS, dispatch, main
from tensor_category_utils.config import Config


def test_every_subcommand_is_dispatched():
    assert sorted(COMANDOS) == sorted(Config.SUBCOMANDOS)


def test_plucker_passes():
    reporte, codigo = dispatch(["plucker", "--n", "4", "--d", "2"])
    assert codigo == 0
    assert reporte["status"] == "pass"
    assert len(reporte["payload"]["quadrics"]) == 1


def test_segre_roundtrip():
    _, codigo = dispatch(["segre", "--dims", "2", "2", "--s1", "1,2", "--s2", "3,-1"])
    assert codigo == 0


def test_extpow_over_integers_reports_asym():
    reporte, codigo = dispatch(["extpow", "--module", '{"ring": "ZZ", "gens": 1}', "--n", "3"])
    assert codigo == 0
    assert reporte["payload"]["mode"] == "asym-quotient"
    assert reporte["payload"]["invariants"] == [2]


def test_torsion_reflection_with_universal_property():
    reporte, codigo = dispatch(["reflect", "torsion", "--group", "12", "--a", "2", "--verify"])
    assert codigo == 0
    assert reporte["payload"]["target"]["label"] == "Z/3"


def test_graded_sections():
    reporte, codigo = dispatch(["reflect", "sections", "--summands", "0:,0:1"])
    assert codigo == 0
    assert reporte["payload"]["colimit_dim"] == 1


def test_malformed_summands_exit_2():
    reporte, codigo = dispatch(["reflect", "sections", "--summands", "x:"])
    assert codigo == 2
    assert reporte["payload"]["error"] == "ParseError"


def test_quantale_residual():
    reporte, _ = dispatch(["quantale", "residual", "--b", "6", "--a", "4"])
    assert reporte["payload"]["residual"] == "(3)"


def test_freesym_extend_default_functor():
    _, codigo = dispatch(["freesym", "extend", "--samples", "10"])
    assert codigo == 0


def test_bad_ring_literal_exits_2():
    reporte, codigo = dispatch(["derham", "--algebra", "QQ[x"])
    assert codigo == 2
    assert reporte["status"] == "error"
    assert reporte["payload"]["error"] == "ParseError"


def test_invalid_input_exits_2():
    reporte, codigo = dispatch(["reflect", "torsion", "--group", "12", "--a", "1"])
    assert codigo == 2
    assert reporte["payload"]["error"] == "InputError"


def test_singular_cramer_exits_1():
    reporte, codigo = dispatch(["cramer", "--matrix", "[[1,1],[1,1]]"])
    assert codigo == 1
    assert reporte["payload"]["error"] == "CertificateError"


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as info:
        dispatch(["frobnicate"])
    assert info.value.code == 2


def test_main_json_is_compact(capsys):
    codigo = main(["--json", "quantale", "prime", "--n", "7"])
    salida = capsys.readouterr().out.strip()
    assert codigo == 0
    assert "\n" not in salida
    reporte = json.loads(salida)
    assert reporte["payload"]["prime"] is True
    assert reporte["seed"] == Config.SEED


def test_check_save_writes_report(reports_dir, capsys):
    codigo = main(["check", "--suite", "localize", "--seed", "7", "--save"])
    capsys.readouterr()
    ruta = reports_dir / "check_localize_7.json"
    assert codigo == 0
    guardado = json.loads(ruta.read_text(encoding="utf-8"))
    assert guardado["seed"] == 7
    assert guardado["suite"] == "localize"
