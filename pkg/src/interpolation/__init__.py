"""
Lagrange-Muntz cardinal functions and nodal interpolants.
"""

from .nodes import GridFunction, MuntzNodeSet
from .lagrange import (
    InterpolantKind,
    basis_weight,
    cardinal_matrix,
    eval_h_sigma,
    eval_interpolant,
    eval_lmf,
    interpolate,
    node_weight,
)

__all__ = [
    'GridFunction',
    'InterpolantKind',
    'MuntzNodeSet',
    'basis_weight',
    'cardinal_matrix',
    'eval_h_sigma',
    'eval_interpolant',
    'eval_lmf',
    'interpolate',
    'node_weight',
]
