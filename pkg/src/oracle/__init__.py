"""
Reference Erdelyi-Kober operators by adaptive quadrature.
"""

from .ek import EkOperatorSpec, Operation, Side, ek_derivative, ek_integral

__all__ = ['EkOperatorSpec', 'Operation', 'Side', 'ek_derivative', 'ek_integral']
