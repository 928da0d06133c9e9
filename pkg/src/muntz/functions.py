"""
Jacobi-Muntz functions and their closed-form derivatives.

First kind:  J1_n(x) = x^(sigma(beta-eta-mu)) P_n(2(x/b)^sigma - 1)
Second kind: J2_n(x) = x^(sigma eta) (b^sigma - x^sigma)^alpha P_n(2(x/b)^sigma - 1)

Left Erdelyi-Kober derivatives map J1 onto J1 with parameters
(alpha+mu, beta-mu, mu, sigma, eta-mu); right ones map J2 onto J2 with
(alpha-mu, beta+mu, sigma, eta+mu).  Both hold for mu > 1 as well.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from exceptions import DomainError, ParameterError, PreconditionError, SingularEndpointError
from jacobi import eval_jacobi, gamma_ratio
from quadrature import MuntzBasisParams

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

ENDPOINT_SLACK = 1e-12


class JmfKind(Enum):
    FIRST = 'first'
    SECOND = 'second'


class Side(Enum):
    LEFT = 'left'
    RIGHT = 'right'


class SpecialKind(Enum):
    POWER = 'power'
    CUTOFF = 'cutoff'


@dataclass(frozen=True)
class JmfSpec:
    kind: JmfKind
    n: int
    params: MuntzBasisParams

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError(f"JMF degree must be >= 0, got {self.n}")


def _as_points(x: ArrayLike, b: float) -> np.ndarray:
    pts = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(pts < -ENDPOINT_SLACK * b) or np.any(pts > b * (1.0 + ENDPOINT_SLACK)):
        raise DomainError(f"evaluation point outside [0, {b}]")
    return np.clip(pts, 0.0, b)


def _out(values: np.ndarray, x: ArrayLike) -> ArrayLike:
    return float(values[0]) if np.ndim(x) == 0 else values


def endpoint_power(base: np.ndarray, exponent: float, limit: bool = False, label: str = 'x') -> np.ndarray:
    """
    base**exponent for base >= 0 with the endpoint policy.

    0**0 is 1.  A negative exponent at base 0 raises, or gives +inf when
    ``limit`` is set.
    """
    zero = base == 0.0
    if exponent == 0.0:
        return np.ones_like(base)
    if exponent > 0.0 or not np.any(zero):
        with np.errstate(divide='ignore'):
            return np.where(zero, 0.0 if exponent > 0 else np.inf, np.power(np.where(zero, 1.0, base), exponent))
    if not limit:
        raise SingularEndpointError(f"{label}^{exponent:g} is singular at the endpoint")
    return np.where(zero, np.inf, np.power(np.where(zero, 1.0, base), exponent))


def _prefactor(kind: JmfKind, p: MuntzBasisParams, pts: np.ndarray, limit: bool) -> np.ndarray:
    if kind is JmfKind.FIRST:
        return endpoint_power(pts, p.left_exponent, limit, 'x')
    cutoff = np.maximum(p.b_sigma - pts ** p.sigma, 0.0)
    return endpoint_power(pts, p.sigma * p.eta, limit, 'x') * endpoint_power(cutoff, p.alpha, limit, '(b^sigma - x^sigma)')


def eval_jmf(spec: JmfSpec, x: ArrayLike, limit: bool = False) -> ArrayLike:
    """
    Evaluate a Jacobi-Muntz function of the first or second kind.

    Args:
        spec: Kind, degree and parameters
        x: Point(s) in [0, b]
        limit: Return signed infinities instead of raising at singular endpoints

    Returns:
        Function value(s)

    Raises:
        DomainError: If x lies outside [0, b]
        SingularEndpointError: If a negative power meets an endpoint and limit is off
    """
    p = spec.params
    pts = _as_points(x, p.b)
    jacobi = eval_jacobi(spec.n, p.jac, p.to_reference(pts), check_domain=False)
    pre = _prefactor(spec.kind, p, pts, limit)
    with np.errstate(invalid='ignore'):
        values = np.where(np.isinf(pre), np.copysign(np.inf, jacobi), pre * jacobi)
    return _out(values, x)


def shifted_spec(spec: JmfSpec) -> tuple[float, JmfSpec]:
    """
    Gamma factor and target function of the closed-form EK derivative.

    Raises:
        PreconditionError: If beta - mu > -1 (first kind) or alpha - mu > -1 (second kind) fails
    """
    p, k, mu = spec.params, spec.n, spec.params.mu
    if spec.kind is JmfKind.FIRST:
        if not p.beta - mu > -1:
            raise PreconditionError(f"beta - mu > -1 violated: {p.beta} - {mu} = {p.beta - mu}")
        factor = gamma_ratio(k + p.beta + 1.0, k + p.beta - mu + 1.0)
        target = p.with_changes(alpha=p.alpha + mu, beta=p.beta - mu, eta=p.eta - mu)
    else:
        if not p.alpha - mu > -1:
            raise PreconditionError(f"alpha - mu > -1 violated: {p.alpha} - {mu} = {p.alpha - mu}")
        factor = gamma_ratio(k + p.alpha + 1.0, k + p.alpha - mu + 1.0)
        target = p.with_changes(alpha=p.alpha - mu, beta=p.beta + mu, eta=p.eta + mu)
    return factor, JmfSpec(spec.kind, k, target)


def ek_deriv_jmf_closed(spec: JmfSpec, x: ArrayLike, limit: bool = False) -> ArrayLike:
    """
    Closed-form EK derivative of order mu = spec.params.mu.

    First kind uses the left operator 0D^mu_{x,sigma,eta}, second kind the
    right operator xD^mu_{b,sigma,eta}.
    """
    factor, target = shifted_spec(spec)
    return factor * eval_jmf(target, x, limit=limit)


def d_dx_special(kind: SpecialKind, n: int, params: MuntzBasisParams, x: ArrayLike) -> ArrayLike:
    """
    Classical derivative of x^(sigma beta) P_n (POWER) or (b^sigma - x^sigma)^alpha P_n (CUTOFF).

    POWER:  sigma (n+beta) x^(sigma beta - 1) P_n^(alpha+1, beta-1)
    CUTOFF: -sigma (n+alpha) x^(sigma-1) (b^sigma - x^sigma)^(alpha-1) P_n^(alpha-1, beta+1)

    Raises:
        DomainError: If x is not interior to (0, b)
    """
    p = params
    pts = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(pts <= 0.0) or np.any(pts >= p.b):
        raise DomainError(f"derivative special cases need x in (0, {p.b})")
    t = p.to_reference(pts)
    s = p.sigma
    if kind is SpecialKind.POWER:
        poly = eval_jacobi(n, p.jac.shifted(1.0, -1.0), t, check_domain=False)
        values = s * (n + p.beta) * pts ** (s * p.beta - 1.0) * poly
    else:
        poly = eval_jacobi(n, p.jac.shifted(-1.0, 1.0), t, check_domain=False)
        cutoff = p.b_sigma - pts ** s
        values = -s * (n + p.alpha) * pts ** (s - 1.0) * cutoff ** (p.alpha - 1.0) * poly
    return _out(values, x)


def ek_power_factor(lam: float, mu: float, eta: float, integral: bool = False) -> float:
    """
    Multiplier of the left EK operator (a = 0) on x^(sigma lam).

    Derivative: Gamma(eta+lam+mu+1) / Gamma(eta+lam+1); integral: the reciprocal.
    """
    if integral:
        return gamma_ratio(eta + lam + 1.0, eta + lam + mu + 1.0)
    return gamma_ratio(eta + lam + mu + 1.0, eta + lam + 1.0)
