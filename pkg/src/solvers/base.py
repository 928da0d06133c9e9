"""
Problem definitions and the common solver report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Sequence, Union

import numpy as np

from exceptions import ParameterError, PreconditionError
from interpolation import GridFunction
from quadrature import MuntzBasisParams

Coefficient = Union[float, Callable[[np.ndarray], np.ndarray]]


def as_function(value: Coefficient) -> Callable[[np.ndarray], np.ndarray]:
    """Turn a constant into a function of x; callables pass through."""
    if callable(value):
        return value
    constant = float(value)
    return lambda x: np.full(np.shape(x), constant)


def sample(fn: Callable, *args: Any) -> np.ndarray:
    """Evaluate fn and broadcast the result to the shape of the first argument."""
    values = np.asarray(fn(*args), dtype=float)
    return np.broadcast_to(values, np.shape(args[0])).astype(float)


def check_initial_exponent(basis: MuntzBasisParams, mu: float) -> None:
    """
    Require sigma(beta - eta - mu) > ceil(mu) - 1 so trial functions satisfy
    the homogeneous initial conditions.
    """
    exponent = basis.sigma * (basis.beta - basis.eta - mu)
    needed = math.ceil(mu - 1e-12) - 1
    if not exponent > needed:
        raise PreconditionError(
            f"sigma(beta - eta - mu) > ceil(mu) - 1 violated: {exponent:g} <= {needed}")


def _check_orders(orders: Sequence[float]) -> tuple:
    orders = tuple(float(mu) for mu in orders)
    if not orders:
        raise ParameterError("at least one derivative order is required")
    if orders[0] <= 0 or any(b <= a for a, b in zip(orders, orders[1:])):
        raise ParameterError(f"orders must be positive and strictly increasing, got {orders}")
    return orders


@dataclass
class LinearFdeProblem:
    """
    sum_{k=1..l} c_k(x) D^{mu_k} y + c_0(x) y = f(x) on [0, b], homogeneous initial data.

    ``coefficients`` lists c_0, c_1, ..., c_l.
    """

    orders: Sequence[float]
    coefficients: Sequence[Coefficient]
    rhs: Coefficient
    basis: MuntzBasisParams
    N: int

    def __post_init__(self):
        self.orders = _check_orders(self.orders)
        if len(self.coefficients) != len(self.orders) + 1:
            raise ParameterError(
                f"expected {len(self.orders) + 1} coefficients (c_0..c_l), got {len(self.coefficients)}")
        if self.N < 0:
            raise ParameterError(f"N must be >= 0, got {self.N}")
        check_initial_exponent(self.basis, self.orders[-1])


@dataclass
class NonlinearFdeProblem:
    """
    D^{mu_l} y = F(x, y, D^{mu_1} y, ..., D^{mu_{l-1}} y) with homogeneous initial data.

    ``jacobian`` returns dF/dY as a full matrix.  ``partials`` instead holds
    the pointwise derivatives dF/dy, dF/dd1, ..., dF/dd{l-1}, each called
    with the arguments of F.
    """

    orders: Sequence[float]
    F: Callable[..., np.ndarray]
    basis: MuntzBasisParams
    N: int
    jacobian: Optional[Callable[..., np.ndarray]] = None
    partials: Optional[Sequence[Callable[..., np.ndarray]]] = None

    def __post_init__(self):
        self.orders = _check_orders(self.orders)
        if self.partials is not None:
            if self.jacobian is not None:
                raise ParameterError("give either jacobian or partials, not both")
            if len(self.partials) != len(self.orders):
                raise ParameterError(
                    f"partials needs {len(self.orders)} derivatives (y and each lower order), "
                    f"got {len(self.partials)}")
        if self.N < 0:
            raise ParameterError(f"N must be >= 0, got {self.N}")
        check_initial_exponent(self.basis, self.orders[-1])


@dataclass
class PdeProblem:
    """
    u_t = d(x, t) D^mu u + s(x, t),  u(x, 0) = f(x),  1 < mu < 2.
    """

    d: Coefficient
    s: Callable[[np.ndarray, float], np.ndarray]
    f: Coefficient
    mu: float
    basis: MuntzBasisParams
    N: int
    T: float
    rtol: float = 1e-10
    atol: float = 1e-10
    n_times: int = 51

    def __post_init__(self):
        if not 1.0 < self.mu < 2.0:
            raise ParameterError(f"mu must lie in (1, 2), got {self.mu}")
        if not self.T > 0:
            raise ParameterError(f"T must be > 0, got {self.T}")
        if self.n_times < 2:
            raise ParameterError(f"n_times must be >= 2, got {self.n_times}")
        check_initial_exponent(self.basis, self.mu)


@dataclass
class BurgersProblem:
    """
    u_t = epsilon u_xx - u u_x + s(x, t) on [0, b] with u = 0 at both ends.

    The trial space is the second-kind family, which needs eta > 0 and alpha > 0.
    """

    epsilon: float
    s: Callable[[np.ndarray, float], np.ndarray]
    f: Coefficient
    basis: MuntzBasisParams
    N: int
    T: float
    dt: float = 1e-3
    newton_tol: float = 1e-10
    newton_max_iter: int = 25
    max_halvings: int = 10
    n_records: int = 101

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ParameterError(f"epsilon must be > 0, got {self.epsilon}")
        if not (self.basis.eta > 0 and self.basis.alpha > 0):
            raise PreconditionError(
                f"Burgers trial functions need eta > 0 and alpha > 0, got eta={self.basis.eta}, alpha={self.basis.alpha}")
        if not (self.T > 0 and self.dt > 0):
            raise ParameterError(f"T and dt must be > 0, got T={self.T}, dt={self.dt}")


@dataclass
class SolverReport:
    """
    Nodal solution plus diagnostics.

    Time-dependent solvers fill ``times`` and ``history`` (one row of nodal
    values per time) and keep the final state in ``solution``.
    """

    solution: GridFunction
    e_infty: Optional[float] = None
    cond: Optional[float] = None
    iterations: int = 0
    residual_norm: float = 0.0
    times: Optional[np.ndarray] = None
    history: Optional[np.ndarray] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.e_infty is not None and self.e_infty < 0:
            raise ParameterError("E_inf must be non-negative")

    @property
    def nodes(self) -> np.ndarray:
        return self.solution.nodeset.nodes

    def to_dict(self) -> Dict[str, Any]:
        return {
            'N': self.solution.nodeset.N,
            'e_infty': self.e_infty,
            'cond': self.cond,
            'iterations': self.iterations,
            'residual_norm': self.residual_norm,
            **self.details,
        }
