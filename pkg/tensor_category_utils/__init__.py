"""
Módulo de utilidades para la verificación de construcciones tensoriales
"""

from .config import Config
from .errors import TensorCheckError
from .utils import (
    parse_ring,
    parse_rationals,
    parse_group,
    parse_window,
    parse_summands,
    load_json_literal
)
from .sample_data import SampleData

__all__ = [
    'Config',
    'SampleData',
    'TensorCheckError',
    'parse_ring',
    'parse_rationals',
    'parse_group',
    'parse_window',
    'parse_summands',
    'load_json_literal'
]
