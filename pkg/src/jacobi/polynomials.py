"""
Classical Jacobi polynomials, orthogonality constants and Gamma ratios.

Polynomial evaluation is defined for any real parameter pair, which the
derivative formulas need (they shift alpha or beta by one or by mu).
Everything that involves the weight (1-t)^alpha (1+t)^beta requires
alpha, beta > -1 and validates it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Union

import numpy as np
from scipy import special

from exceptions import DomainError, ParameterError, PoleError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

DOMAIN_SLACK = 1e-12
POLE_TOL = 1e-14


@dataclass(frozen=True)
class JacobiParams:
    """Exponents of the Jacobi weight (1-t)^alpha (1+t)^beta."""

    alpha: float
    beta: float
    checked: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and np.isfinite(self.beta)):
            raise ParameterError(f"Jacobi parameters must be finite, got ({self.alpha}, {self.beta})")
        if self.checked:
            self.validate()

    @classmethod
    def unchecked(cls, alpha: float, beta: float) -> "JacobiParams":
        """Build a pair used only for polynomial evaluation (shifted parameters)."""
        return cls(float(alpha), float(beta), checked=False)

    def validate(self) -> None:
        """
        Require alpha > -1 and beta > -1.

        Raises:
            ParameterError: If either exponent makes the weight non-integrable
        """
        if self.alpha <= -1:
            raise ParameterError(f"alpha must be > -1, got {self.alpha}")
        if self.beta <= -1:
            raise ParameterError(f"beta must be > -1, got {self.beta}")

    def shifted(self, d_alpha: float, d_beta: float) -> "JacobiParams":
        return JacobiParams.unchecked(self.alpha + d_alpha, self.beta + d_beta)


def _check_domain(t: np.ndarray) -> None:
    if t.size and np.max(np.abs(t)) > 1.0 + DOMAIN_SLACK:
        bad = float(t.flat[int(np.argmax(np.abs(t)))])
        raise DomainError(f"Jacobi argument {bad!r} outside [-1, 1]")


def jacobi_explicit_sum(n: int, p: JacobiParams, t: ArrayLike) -> ArrayLike:
    """
    Evaluate P_n via the finite hypergeometric sum.

    Used where the three-term recurrence has a vanishing leading
    coefficient (alpha + beta a negative integer).
    """
    a, b = p.alpha, p.beta
    t_arr = np.asarray(t, dtype=float)
    minus = (t_arr - 1.0) / 2.0
    plus = (t_arr + 1.0) / 2.0
    total = np.zeros_like(t_arr)
    for s in range(n + 1):
        total = total + special.binom(n + a, n - s) * special.binom(n + b, s) * minus ** s * plus ** (n - s)
    return float(total) if np.ndim(t) == 0 else total


def jacobi_table(n_max: int, p: JacobiParams, t: ArrayLike, check_domain: bool = True) -> np.ndarray:
    """
    Evaluate P_0 ... P_{n_max} at every point of t.

    Args:
        n_max: Highest degree (>= 0)
        p: Jacobi parameters (any real pair)
        t: Evaluation points in [-1, 1]
        check_domain: Reject points outside [-1, 1]

    Returns:
        Array of shape (n_max + 1, len(t))

    Raises:
        ParameterError: If n_max is negative
        DomainError: If a point lies outside [-1, 1]
    """
    if n_max < 0:
        raise ParameterError(f"degree must be >= 0, got {n_max}")
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if check_domain:
        _check_domain(t_arr)

    a, b = p.alpha, p.beta
    table = np.empty((n_max + 1, t_arr.size))
    table[0] = 1.0
    if n_max == 0:
        return table
    table[1] = (a + 1.0) + (a + b + 2.0) * (t_arr - 1.0) / 2.0

    ab = a + b
    for n in range(2, n_max + 1):
        c = 2 * n + ab
        a1 = 2 * n * (n + ab) * (c - 2)
        if a1 == 0.0:
            logger.debug("degenerate recurrence at n=%d for (%g, %g); using explicit sum", n, a, b)
            table[n] = jacobi_explicit_sum(n, p, t_arr)
            continue
        a2 = (c - 1) * (a * a - b * b)
        a3 = (c - 2) * (c - 1) * c
        a4 = 2 * (n + a - 1) * (n + b - 1) * c
        table[n] = ((a2 + a3 * t_arr) * table[n - 1] - a4 * table[n - 2]) / a1
    return table


def eval_jacobi(n: int, p: JacobiParams, t: ArrayLike, check_domain: bool = True) -> ArrayLike:
    """
    Evaluate the Jacobi polynomial P_n^(alpha, beta).

    Args:
        n: Degree (>= 0)
        p: Jacobi parameters
        t: Scalar or array of points in [-1, 1]
        check_domain: Reject points outside [-1, 1] (with 1e-12 slack)

    Returns:
        Polynomial value(s), a float for scalar input

    Raises:
        DomainError: If |t| > 1 + 1e-12
    """
    values = jacobi_table(n, p, t, check_domain=check_domain)[n]
    return float(values[0]) if np.ndim(t) == 0 else values


def jacobi_derivative(n: int, p: JacobiParams, t: ArrayLike, check_domain: bool = True) -> ArrayLike:
    """d/dt P_n^(a,b) = (n+a+b+1)/2 P_{n-1}^(a+1,b+1)."""
    if n == 0:
        return 0.0 if np.ndim(t) == 0 else np.zeros(np.shape(t))
    factor = 0.5 * (n + p.alpha + p.beta + 1.0)
    return factor * eval_jacobi(n - 1, p.shifted(1.0, 1.0), t, check_domain=check_domain)


def gamma_n(n: int, p: JacobiParams) -> float:
    """
    Squared norm of P_n^(alpha, beta) under the Jacobi weight.

    Computed in log-gamma form so large degrees do not overflow.
    """
    if n < 0:
        raise ParameterError(f"degree must be >= 0, got {n}")
    p.validate()
    a, b = p.alpha, p.beta
    if n == 0:
        log_value = (a + b + 1) * np.log(2.0) + special.gammaln(a + 1) + special.gammaln(b + 1) - special.gammaln(a + b + 2)
    else:
        log_value = ((a + b + 1) * np.log(2.0)
                     + special.gammaln(n + a + 1) + special.gammaln(n + b + 1)
                     - np.log(2 * n + a + b + 1)
                     - special.gammaln(n + 1) - special.gammaln(n + a + b + 1))
    return float(np.exp(log_value))


def jacobi_weight_mass(p: JacobiParams) -> float:
    """Integral of the Jacobi weight over [-1, 1], 2^(a+b+1) B(a+1, b+1)."""
    return gamma_n(0, p)


def _is_pole(x: np.ndarray) -> np.ndarray:
    return (x <= 0) & (np.abs(x - np.round(x)) < POLE_TOL)


def gamma_ratio(a: ArrayLike, b: ArrayLike) -> ArrayLike:
    """
    Gamma(a) / Gamma(b) through log-gamma differences.

    Args:
        a: Numerator argument(s)
        b: Denominator argument(s)

    Returns:
        The ratio with the sign of Gamma restored for negative arguments

    Raises:
        PoleError: If a or b is a nonpositive integer (within 1e-14)
    """
    a_arr = np.asarray(a, dtype=float)
    b_arr = np.asarray(b, dtype=float)
    if np.any(_is_pole(a_arr)) or np.any(_is_pole(b_arr)):
        raise PoleError(f"Gamma pole in ratio Gamma({a})/Gamma({b})")
    sign = special.gammasgn(a_arr) * special.gammasgn(b_arr)
    ratio = sign * np.exp(special.gammaln(a_arr) - special.gammaln(b_arr))
    return float(ratio) if ratio.ndim == 0 else ratio
