"""
Mapped Gauss-Jacobi-Muntz rules on [0, b] and the two reweighted variants.

The base rule integrates against x^(sigma(beta+1)-1) (b^sigma - x^sigma)^alpha
and is exact on polynomials of degree 2n+1 in x^sigma.  GJMQR-1 multiplies the
base weights by x^(2 sigma(eta+mu-beta)), GJMQR-2 by
(b^sigma - x^sigma)^(-2 alpha) x^(-2 sigma eta).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from exceptions import EvaluationError, ParameterError
from jacobi import GaussRule, gauss_jacobi
from .params import MuntzBasisParams

logger = logging.getLogger(__name__)


class RuleKind(Enum):
    BASE = 'base'
    GJMQR1 = 'gjmqr1'
    GJMQR2 = 'gjmqr2'


@dataclass(frozen=True, eq=False)
class QuadRule:
    """Nodes and weights of a mapped rule; ``reference`` keeps the [-1, 1] rule."""

    kind: RuleKind
    params: MuntzBasisParams
    nodes: np.ndarray
    weights: np.ndarray
    n: int
    reference: GaussRule

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    @property
    def reference_nodes(self) -> np.ndarray:
        return self.reference.nodes

    @property
    def cutoff(self) -> np.ndarray:
        """b^sigma - x_j^sigma, formed from the reference nodes."""
        return self.params.b_sigma * (1.0 - self.reference.nodes) / 2.0


def mapped_rule(n: int, params: MuntzBasisParams) -> QuadRule:
    """
    Map the (n+1)-point Gauss-Jacobi rule to [0, b].

    x_j = b((1 + t_j)/2)^(1/sigma),  w_j = (1/sigma)(b^sigma/2)^(alpha+beta+1) w_j^(alpha,beta)

    Raises:
        ParameterError: If n < 0
        QuadratureConvergenceError: Propagated from gauss_jacobi
    """
    if n < 0:
        raise ParameterError(f"rule degree must be >= 0, got {n}")
    reference = gauss_jacobi(n, params.jac)
    t = reference.nodes
    nodes = params.b * np.exp((np.log1p(t) - np.log(2.0)) / params.sigma)
    weights = params.scale * reference.weights
    return QuadRule(RuleKind.BASE, params, nodes, weights, n, reference)


def gjmqr_weights(rule: QuadRule, variant: int) -> QuadRule:
    """
    Reweight a base rule into GJMQR-1 (variant 1) or GJMQR-2 (variant 2).

    The factors are evaluated as exp(c * ln x_j) on interior nodes.
    """
    if rule.kind is not RuleKind.BASE:
        raise ParameterError(f"GJMQR weights are built from a base rule, got {rule.kind.value}")
    p = rule.params
    log_x = np.log(rule.nodes)
    if variant == 1:
        factor = np.exp(2.0 * p.sigma * (p.eta + p.mu - p.beta) * log_x)
        kind = RuleKind.GJMQR1
    elif variant == 2:
        factor = np.exp(-2.0 * p.alpha * np.log(rule.cutoff) - 2.0 * p.sigma * p.eta * log_x)
        kind = RuleKind.GJMQR2
    else:
        raise ParameterError(f"GJMQR variant must be 1 or 2, got {variant}")
    return QuadRule(kind, p, np.array(rule.nodes), rule.weights * factor, rule.n, rule.reference)


def _sample(f: Callable, nodes: np.ndarray) -> np.ndarray:
    values = np.asarray(f(nodes), dtype=float)
    if values.shape != nodes.shape:
        values = np.broadcast_to(values, nodes.shape).astype(float)
    bad = ~np.isfinite(values)
    if np.any(bad):
        index = int(np.flatnonzero(bad)[0])
        raise EvaluationError(f"integrand is not finite at node {index} (x={nodes[index]!r})")
    return values


def integrate(f: Callable, rule: QuadRule) -> float:
    """
    Quadrature sum sum_j w_j f(x_j).

    ``f`` receives the node array and must return matching values (a
    scalar result is broadcast, so constants are allowed).

    Raises:
        EvaluationError: If f is not finite at some node
    """
    return float(rule.weights @ _sample(f, rule.nodes))


def inner_product(f: Callable, g: Callable, rule: QuadRule) -> float:
    """Discrete inner product (f, g)_N = sum_j w_j f(x_j) g(x_j)."""
    return float(rule.weights @ (_sample(f, rule.nodes) * _sample(g, rule.nodes)))
