"""
Módulo de construcciones tensoriales exactas
"""

from .exactring import ExactRing, RingDescriptor
from .fpmod import FpMod, ModulePresentation, ModMorphism
from .sympow import Sympow
from .derham import Derham
from .projgeom import ProjGeom
from .monadkit import MonadKit, Monoid
from .quantale import Quantale, FiniteQuantale, IdealZ
from .localize import Localize, FgAbGroup
from .freesym import FreeSym

__all__ = [
    'ExactRing',
    'RingDescriptor',
    'FpMod',
    'ModulePresentation',
    'ModMorphism',
    'Sympow',
    'Derham',
    'ProjGeom',
    'MonadKit',
    'Monoid',
    'Quantale',
    'FiniteQuantale',
    'IdealZ',
    'Localize',
    'FgAbGroup',
    'FreeSym'
]
