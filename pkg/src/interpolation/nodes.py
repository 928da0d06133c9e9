"""
Collocation node sets and nodal grid functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from exceptions import EvaluationError, ParameterError
from quadrature import MuntzBasisParams, QuadRule, mapped_rule


@dataclass(frozen=True, eq=False)
class MuntzNodeSet:
    """
    Mapped Gauss-Jacobi-Muntz nodes x_0 < ... < x_N with cardinal denominators.

    ``nodes_sigma`` holds x_j^sigma formed from the reference nodes, and the
    denominators prod_{j != r}(x_r^sigma - x_j^sigma) are kept in
    log-magnitude/sign form.
    """

    params: MuntzBasisParams
    N: int
    rule: QuadRule
    nodes_sigma: np.ndarray
    log_denominators: np.ndarray
    denominator_signs: np.ndarray

    @classmethod
    def build(cls, params: MuntzBasisParams, N: int) -> "MuntzNodeSet":
        """
        Create the node set of size N + 1 from the mapped rule of degree N.

        Raises:
            ParameterError: If N < 0
        """
        if N < 0:
            raise ParameterError(f"N must be >= 0, got {N}")
        rule = mapped_rule(N, params)
        nodes_sigma = params.b_sigma * (1.0 + rule.reference_nodes) / 2.0
        diff = nodes_sigma[:, None] - nodes_sigma[None, :]
        np.fill_diagonal(diff, 1.0)
        log_den = np.sum(np.log(np.abs(diff)), axis=1)
        signs = np.prod(np.sign(diff), axis=1)
        for arr in (nodes_sigma, log_den, signs):
            arr.setflags(write=False)
        return cls(params, N, rule, nodes_sigma, log_den, signs)

    @property
    def nodes(self) -> np.ndarray:
        return self.rule.nodes

    @property
    def size(self) -> int:
        return self.N + 1

    @property
    def reference_nodes(self) -> np.ndarray:
        return self.rule.reference_nodes

    @property
    def cutoff(self) -> np.ndarray:
        """b^sigma - x_j^sigma at the nodes."""
        return self.rule.cutoff

    def sample(self, f: Callable) -> "GridFunction":
        """Sample f at the nodes."""
        values = np.asarray(f(self.nodes), dtype=float)
        values = np.broadcast_to(values, self.nodes.shape).astype(float)
        bad = ~np.isfinite(values)
        if np.any(bad):
            k = int(np.flatnonzero(bad)[0])
            raise EvaluationError(f"function is not finite at node {k} (x={self.nodes[k]!r})")
        return GridFunction(self, values)


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Values of a function at the nodes of ``nodeset``."""

    nodeset: MuntzNodeSet
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (self.nodeset.size,):
            raise ParameterError(
                f"grid function needs {self.nodeset.size} values, got shape {self.values.shape}")

    def max_error(self, exact: Callable) -> float:
        """E_inf(N): largest absolute nodal deviation from ``exact``."""
        reference = np.asarray(exact(self.nodeset.nodes), dtype=float)
        return float(np.max(np.abs(self.values - reference)))
