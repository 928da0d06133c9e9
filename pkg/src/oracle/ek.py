"""
Brute-force Erdelyi-Kober operators by adaptive quadrature.

This is the reference the closed forms and matrices are checked against,
not a production evaluator.  Integrals are taken in s = t^sigma with the
kernel singularity removed by v = |x^sigma - s|^mu, which turns
(x^sigma - s)^(mu-1) ds into dv/mu.  Derivatives apply the outer
d/d(x^sigma) operators by Richardson-extrapolated central differences.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np
from scipy import integrate, special

from exceptions import DomainError, ParameterError, QuadratureConvergenceError, StepSizeError
from muntz import Side

logger = logging.getLogger(__name__)

ABS_TOL = 1e-9
REL_TOL = 1e-10
RICHARDSON_LEVELS = 6
MIN_STEP_RATIO = 1e-6


class Operation(Enum):
    INTEGRAL = 'integral'
    DERIVATIVE = 'derivative'


@dataclass(frozen=True)
class EkOperatorSpec:
    """Left operators act on (a, x), right ones on (x, b)."""

    side: Side
    op: Operation
    mu: float
    sigma: float
    eta: float
    a: float = 0.0
    b: float = math.inf

    def __post_init__(self):
        if not self.mu > 0:
            raise ParameterError(f"mu must be > 0, got {self.mu}")
        if not self.sigma > 0:
            raise ParameterError(f"sigma must be > 0, got {self.sigma}")
        if self.a < 0:
            raise ParameterError(f"a must be >= 0, got {self.a}")
        if not self.b > self.a:
            raise ParameterError(f"b must exceed a, got a={self.a}, b={self.b}")
        if self.side is Side.RIGHT and not math.isfinite(self.b):
            raise ParameterError("right operators need a finite b")

    @property
    def order(self) -> int:
        """Outer differentiation count n = ceil(mu)."""
        return int(math.ceil(self.mu - 1e-12))

    def inner(self) -> "EkOperatorSpec":
        """The integral of order n - mu used inside the derivative."""
        n = self.order
        eta = self.eta + self.mu if self.side is Side.LEFT else self.eta + self.mu - n
        return EkOperatorSpec(self.side, Operation.INTEGRAL, n - self.mu, self.sigma, eta, self.a, self.b)


def _quad(integrand: Callable[[float], float], upper: float, label: str) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', integrate.IntegrationWarning)
        value, error = integrate.quad(integrand, 0.0, upper, epsabs=1e-13, epsrel=1e-12, limit=400)
    if not np.isfinite(value) or error > max(ABS_TOL, REL_TOL * abs(value)):
        raise QuadratureConvergenceError(
            f"{label}: adaptive quadrature error estimate {error:.3e} above tolerance", estimate=error)
    return value


def ek_integral(spec: EkOperatorSpec, f: Callable[[float], float], x: float) -> float:
    """
    Left or right EK fractional integral of f at x.

    left:  sigma x^(-sigma(eta+mu)) / Gamma(mu) int_a^x (x^s - t^s)^(mu-1) t^(sigma(eta+1)-1) f(t) dt
    right: sigma x^(sigma eta) / Gamma(mu) int_x^b (t^s - x^s)^(mu-1) t^(-sigma(eta+mu-1)-1) f(t) dt

    Raises:
        DomainError: If x is not inside the side's interval
        QuadratureConvergenceError: If the error estimate exceeds 1e-9 (relative 1e-10 for large values)
    """
    s, mu, eta = spec.sigma, spec.mu, spec.eta
    big_x = x ** s
    tiny = np.finfo(float).tiny
    if spec.side is Side.LEFT:
        if not spec.a < x <= spec.b:
            raise DomainError(f"left EK integral needs {spec.a} < x <= {spec.b}, got {x}")
        span = big_x - spec.a ** s

        def integrand(v: float) -> float:
            inner = max(big_x - v ** (1.0 / mu), tiny)
            return inner ** eta * float(f(inner ** (1.0 / s))) / mu

        scale = x ** (-s * (eta + mu)) / special.gamma(mu)
    else:
        if not spec.a <= x < spec.b:
            raise DomainError(f"right EK integral needs {spec.a} <= x < {spec.b}, got {x}")
        big_b = spec.b ** s
        span = big_b - big_x

        def integrand(v: float) -> float:
            outer = min(big_x + v ** (1.0 / mu), big_b)
            return outer ** (-(eta + mu)) * float(f(outer ** (1.0 / s))) / mu

        scale = x ** (s * eta) / special.gamma(mu)

    value = _quad(integrand, span ** mu, f"{spec.side.value} EK integral at x={x}")
    return float(scale * value)


def _richardson(g: Callable[[float], float], center: float, h0: float, order: int) -> float:
    """Central-difference derivative of order 1 or 2 with Richardson extrapolation."""
    g0 = g(center) if order == 2 else 0.0
    table: list[list[float]] = []
    best, best_err = math.nan, math.inf
    for i in range(RICHARDSON_LEVELS):
        h = h0 / 2 ** i
        plus, minus = g(center + h), g(center - h)
        if order == 1:
            row = [(plus - minus) / (2.0 * h)]
        else:
            row = [(plus - 2.0 * g0 + minus) / (h * h)]
        for j in range(1, i + 1):
            row.append(row[j - 1] + (row[j - 1] - table[i - 1][j - 1]) / (4.0 ** j - 1.0))
        if i > 0:
            err = abs(row[i] - table[i - 1][i - 1])
            if err < best_err:
                best, best_err = row[i], err
        table.append(row)
    logger.debug("richardson order=%d at %g: estimate %.3e", order, center, best_err)
    return best


def ek_derivative(spec: EkOperatorSpec, f: Callable[[float], float], x: float) -> float:
    """
    Left or right EK fractional derivative of order mu (ceil(mu) <= 2) at x.

    left:  x^(-sigma eta) (d/dX)^n [X^(eta+n) I^(n-mu)_{sigma,eta+mu} f],  X = x^sigma
    right: x^(sigma(eta+mu)) (-d/dX)^n [X^(-(mu+eta-n)) I^(n-mu)_{b,sigma,eta+mu-n} f]

    Raises:
        ParameterError: If mu > 2
        StepSizeError: If x is too close to an endpoint for differencing
    """
    n = spec.order
    if n > 2:
        raise ParameterError(f"EK oracle derivatives support mu <= 2, got {spec.mu}")
    s = spec.sigma
    big_x = x ** s
    lower = spec.a ** s
    upper = spec.b ** s if math.isfinite(spec.b) else math.inf
    room = min(big_x - lower, upper - big_x)
    h0 = 0.25 * min(room, big_x)
    if not h0 > MIN_STEP_RATIO * max(big_x, 1.0):
        raise StepSizeError(f"difference step underflows at x={x}; evaluate at an interior point")

    inner_spec = spec.inner() if n - spec.mu > 1e-12 else None

    def inner_value(big_t: float) -> float:
        t = big_t ** (1.0 / s)
        return float(f(t)) if inner_spec is None else ek_integral(inner_spec, f, t)

    if spec.side is Side.LEFT:
        def g(big_t: float) -> float:
            return big_t ** (spec.eta + n) * inner_value(big_t)
        return x ** (-s * spec.eta) * _richardson(g, big_x, h0, n)

    def g(big_t: float) -> float:
        return big_t ** (-(spec.mu + spec.eta - n)) * inner_value(big_t)
    return x ** (s * (spec.eta + spec.mu)) * (-1.0) ** n * _richardson(g, big_x, h0, n)
