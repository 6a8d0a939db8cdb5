"""
Configuración compartida de pytest
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from tensor_category_utils.constructions import ExactRing  # noqa: E402


@pytest.fixture
def QQ():
    return ExactRing.rationals()


@pytest.fixture
def ZZ():
    return ExactRing.integers()


@pytest.fixture
def reports_dir(tmp_path, monkeypatch):
    """Redirige los reportes guardados a un directorio temporal"""
    from tensor_category_utils.config import Config
    destino = tmp_path / "reports"
    monkeypatch.setattr(Config, "OUTPUT_DIR", str(destino))
    return destino
