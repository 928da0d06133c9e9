"""
Jacobi-Muntz functions of the first and second kind.
"""

from .functions import (
    JmfKind,
    JmfSpec,
    Side,
    SpecialKind,
    d_dx_special,
    ek_deriv_jmf_closed,
    ek_power_factor,
    endpoint_power,
    eval_jmf,
    shifted_spec,
)

__all__ = [
    'JmfKind',
    'JmfSpec',
    'Side',
    'SpecialKind',
    'd_dx_special',
    'ek_deriv_jmf_closed',
    'ek_power_factor',
    'endpoint_power',
    'eval_jmf',
    'shifted_spec',
]
