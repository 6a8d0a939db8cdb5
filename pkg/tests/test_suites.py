import pytest

from tensor_category_utils.errors import InputError
from tensor_category_utils.suites import SuiteRunner


@pytest.mark.parametrize("suite", ["quantale", "localize", "freesym"])
def test_suite_passes(suite):
    reporte = SuiteRunner(seed=42).run(suite)
    assert reporte["status"] == "pass", reporte["witnesses"]
    assert reporte["suite"] == suite
    assert set(reporte["payload"]) == {suite}


def test_same_seed_same_report():
    primero = SuiteRunner(seed=3, max_workers=4).run("localize")
    segundo = SuiteRunner(seed=3, max_workers=1).run("localize")
    assert primero == segundo


def test_unknown_suite():
    with pytest.raises(InputError):
        SuiteRunner().run("topology")
