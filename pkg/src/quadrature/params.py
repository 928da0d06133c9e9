"""
Parameter bundle shared by every Muntz construction.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Any, Dict, Union

import numpy as np

from exceptions import ParameterError
from jacobi import JacobiParams, gamma_n

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class MuntzBasisParams:
    """
    Parameters (alpha, beta, mu, sigma, eta, b) of the Jacobi-Muntz families.

    The Jacobi pair lives in ``jac``; sigma scales the Muntz exponents,
    eta is the Erdelyi-Kober weight shift, mu the fractional order and
    [0, b] the interval.
    """

    jac: JacobiParams
    sigma: float = 1.0
    eta: float = 0.0
    mu: float = 0.0
    b: float = 1.0

    def __post_init__(self):
        if not self.sigma > 0:
            raise ParameterError(f"sigma must be > 0, got {self.sigma}")
        if not self.b > 0:
            raise ParameterError(f"b must be > 0, got {self.b}")
        if not self.mu >= 0:
            raise ParameterError(f"mu must be >= 0, got {self.mu}")
        if not np.isfinite(self.eta):
            raise ParameterError(f"eta must be finite, got {self.eta}")
        self.jac.validate()

    @classmethod
    def create(cls, alpha: float, beta: float, sigma: float = 1.0, eta: float = 0.0,
               mu: float = 0.0, b: float = 1.0) -> "MuntzBasisParams":
        return cls(JacobiParams(float(alpha), float(beta)), float(sigma), float(eta), float(mu), float(b))

    @property
    def alpha(self) -> float:
        return self.jac.alpha

    @property
    def beta(self) -> float:
        return self.jac.beta

    @property
    def b_sigma(self) -> float:
        return self.b ** self.sigma

    @property
    def left_exponent(self) -> float:
        """Exponent sigma*(beta - eta - mu) of the first-kind prefactor."""
        return self.sigma * (self.beta - self.eta - self.mu)

    @property
    def scale(self) -> float:
        """(1/sigma)(b^sigma/2)^(alpha+beta+1), the mapped-weight factor."""
        return (self.b_sigma / 2.0) ** (self.alpha + self.beta + 1.0) / self.sigma

    def with_changes(self, **changes: Any) -> "MuntzBasisParams":
        """Copy with some fields replaced; alpha/beta are accepted directly."""
        alpha = changes.pop('alpha', self.alpha)
        beta = changes.pop('beta', self.beta)
        changes.setdefault('jac', JacobiParams(float(alpha), float(beta)))
        return dataclasses.replace(self, **changes)

    def to_reference(self, x: ArrayLike) -> ArrayLike:
        """Map x in [0, b] to t = 2(x/b)^sigma - 1 in [-1, 1]."""
        return 2.0 * (np.asarray(x, dtype=float) / self.b) ** self.sigma - 1.0

    def to_dict(self) -> Dict[str, float]:
        return {
            'alpha': self.alpha,
            'beta': self.beta,
            'sigma': self.sigma,
            'eta': self.eta,
            'mu': self.mu,
            'b': self.b,
        }


def orthogonality_constant(n: int, params: MuntzBasisParams) -> float:
    """*gamma_n = (1/sigma)(b^sigma/2)^(alpha+beta+1) gamma_n, the squared JMF norm."""
    return params.scale * gamma_n(n, params.jac)
