"""Exact algebra: partitions, polynomials, the Λ⁰ ring, gl(2|2) and its modules"""

from .partitions import (
    EMPTY, HookProfile, NaturalCoords, Partition, contains, enumerate_hooks, hook_order_key,
    hooks_not_containing, is_hook, lambda_natural,
)
from .exactpoly import (
    ONE, ZERO, ExactMatrix, ExactPoly, format_scalar, gaussian, parse_scalar, rational, to_scalar,
)
from .susyring import DeformedParams, SusyProfile, SusyRing, hook_count, lambda0_basis
from .interp import InterpolationError, InterpResult, solve_general, solve_interpolation
from .superlie import DecompositionError, NonInvariantError, SuperElt, gamma, gl22, symmetric_pair
from .borel import MarkedWeight, kac_weight, odd_reflect, verify_fd
from .kacrep import KacModule, quasi_spherical_check, spherical_vectors, typicality
from .shimura import shimura_operator, verify_shimura

__all__ = [
    'EMPTY', 'HookProfile', 'NaturalCoords', 'Partition', 'contains', 'enumerate_hooks', 'hook_order_key',
    'hooks_not_containing', 'is_hook', 'lambda_natural',
    'ONE', 'ZERO', 'ExactMatrix', 'ExactPoly', 'format_scalar', 'gaussian', 'parse_scalar', 'rational',
    'to_scalar',
    'DeformedParams', 'SusyProfile', 'SusyRing', 'hook_count', 'lambda0_basis',
    'InterpolationError', 'InterpResult', 'solve_general', 'solve_interpolation',
    'DecompositionError', 'NonInvariantError', 'SuperElt', 'gamma', 'gl22', 'symmetric_pair',
    'MarkedWeight', 'kac_weight', 'odd_reflect', 'verify_fd',
    'KacModule', 'quasi_spherical_check', 'spherical_vectors', 'typicality',
    'shimura_operator', 'verify_shimura',
]
