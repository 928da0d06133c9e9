"""
Gauss-Jacobi-Muntz quadrature on [0, b].
"""

from .params import MuntzBasisParams, orthogonality_constant
from .rules import QuadRule, RuleKind, gjmqr_weights, inner_product, integrate, mapped_rule

__all__ = [
    'MuntzBasisParams',
    'QuadRule',
    'RuleKind',
    'gjmqr_weights',
    'inner_product',
    'integrate',
    'mapped_rule',
    'orthogonality_constant',
]
