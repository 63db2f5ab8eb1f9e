"""Verification suites, one per checked property"""

from .structure import BracketTablePlugin, RestrictedRootsPlugin
from .rings import InterpolationPlugin, Lambda0Plugin, TriangularityPlugin
from .representations import FiniteDimPlugin, SphericityPlugin
from .shimura import EigenvaluePlugin, ShimuraPlugin

ALL_SUITES = [
    BracketTablePlugin,
    RestrictedRootsPlugin,
    Lambda0Plugin,
    InterpolationPlugin,
    TriangularityPlugin,
    FiniteDimPlugin,
    SphericityPlugin,
    ShimuraPlugin,
    EigenvaluePlugin,
]

__all__ = [
    'ALL_SUITES',
    'BracketTablePlugin',
    'RestrictedRootsPlugin',
    'Lambda0Plugin',
    'InterpolationPlugin',
    'TriangularityPlugin',
    'FiniteDimPlugin',
    'SphericityPlugin',
    'ShimuraPlugin',
    'EigenvaluePlugin',
]
