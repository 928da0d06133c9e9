"""
Muntz cardinal functions, Lagrange-Muntz functions and the three interpolants.

h_r(x) = prod_{j != r} (x^sigma - x_j^sigma) / (x_r^sigma - x_j^sigma)

LMF-1 and NJMI-1 carry the weight x^(sigma(beta-eta-mu)); LMF-2 and NJMI-2
carry x^(sigma eta) (b^sigma - x^sigma)^alpha; MJI uses h_r unweighted.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Callable, Union

import numpy as np

from exceptions import DomainError, ParameterError
from muntz import endpoint_power
from .nodes import GridFunction, MuntzNodeSet

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

LOG_PRODUCT_THRESHOLD = 60


class InterpolantKind(Enum):
    MJI = 'mji'
    NJMI1 = 'njmi1'
    NJMI2 = 'njmi2'


LMF_VARIANTS = {1: InterpolantKind.NJMI1, 2: InterpolantKind.NJMI2}


def _points(ns: MuntzNodeSet, x: ArrayLike) -> np.ndarray:
    pts = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(pts < 0.0) or np.any(pts > ns.params.b):
        raise DomainError(f"evaluation point outside [0, {ns.params.b}]")
    return pts


def cardinal_matrix(ns: MuntzNodeSet, x: ArrayLike) -> np.ndarray:
    """
    All cardinal values h_r(x_m), shape (len(x), N + 1).

    Points that coincide with a node get the exact unit row.
    """
    pts = _points(ns, x)
    big_x = pts ** ns.params.sigma
    diff = big_x[:, None] - ns.nodes_sigma[None, :]
    hits = pts[:, None] == ns.nodes[None, :]
    hit_rows = hits.any(axis=1)
    safe = np.where(hits | (diff == 0.0), 1.0, diff)

    if ns.N > LOG_PRODUCT_THRESHOLD:
        log_abs = np.log(np.abs(safe))
        zero_count = np.sum(diff == 0.0, axis=1)
        total = np.sum(log_abs, axis=1)
        sign = np.prod(np.sign(safe), axis=1)
        out = (sign[:, None] * np.sign(safe) * ns.denominator_signs[None, :]
               * np.exp(total[:, None] - log_abs - ns.log_denominators[None, :]))
        # a zero factor in x^sigma space kills every cardinal except its own
        out = np.where((zero_count[:, None] > 0) & (diff != 0.0), 0.0, out)
    else:
        prod = np.prod(safe, axis=1)
        denominators = ns.denominator_signs * np.exp(ns.log_denominators)
        out = prod[:, None] / (safe * denominators[None, :])
        out = np.where((np.sum(diff == 0.0, axis=1)[:, None] > 0) & (diff != 0.0), 0.0, out)

    out[hit_rows] = hits[hit_rows].astype(float)
    return out


def eval_h_sigma(ns: MuntzNodeSet, r: int, x: ArrayLike) -> ArrayLike:
    """
    Muntz cardinal function h_r at x.

    Raises:
        ParameterError: If r is not in 0..N
        DomainError: If x lies outside [0, b]
    """
    if not 0 <= r <= ns.N:
        raise ParameterError(f"cardinal index must be in 0..{ns.N}, got {r}")
    values = cardinal_matrix(ns, x)[:, r]
    return float(values[0]) if np.ndim(x) == 0 else values


def basis_weight(kind: InterpolantKind, ns: MuntzNodeSet, x: np.ndarray, limit: bool = False) -> np.ndarray:
    """Prefactor multiplying h_r for each interpolant family."""
    p = ns.params
    if kind is InterpolantKind.MJI:
        return np.ones_like(x)
    if kind is InterpolantKind.NJMI1:
        return endpoint_power(x, p.left_exponent, limit, 'x')
    cutoff = np.maximum(p.b_sigma - x ** p.sigma, 0.0)
    return endpoint_power(x, p.sigma * p.eta, limit, 'x') * endpoint_power(cutoff, p.alpha, limit, '(b^sigma - x^sigma)')


def node_weight(kind: InterpolantKind, ns: MuntzNodeSet) -> np.ndarray:
    """Prefactor at the nodes (always finite and positive)."""
    p = ns.params
    if kind is InterpolantKind.MJI:
        return np.ones(ns.size)
    if kind is InterpolantKind.NJMI1:
        return ns.nodes ** p.left_exponent
    return ns.nodes ** (p.sigma * p.eta) * ns.cutoff ** p.alpha


def eval_lmf(ns: MuntzNodeSet, r: int, variant: int, x: ArrayLike, limit: bool = False) -> ArrayLike:
    """
    Lagrange-Muntz function of the first (variant 1) or second (variant 2) kind.

    Raises:
        ParameterError: If the variant or index is invalid
        SingularEndpointError: At an endpoint where the prefactor is singular
    """
    if variant not in LMF_VARIANTS:
        raise ParameterError(f"LMF variant must be 1 or 2, got {variant}")
    if not 0 <= r <= ns.N:
        raise ParameterError(f"cardinal index must be in 0..{ns.N}, got {r}")
    kind = LMF_VARIANTS[variant]
    pts = _points(ns, x)
    weight = basis_weight(kind, ns, pts, limit)
    values = weight / node_weight(kind, ns)[r] * cardinal_matrix(ns, pts)[:, r]
    return float(values[0]) if np.ndim(x) == 0 else values


def interpolate(kind: InterpolantKind, f: Callable, ns: MuntzNodeSet) -> GridFunction:
    """Nodal representation of the interpolant of f (f sampled at the nodes)."""
    logger.debug("interpolating with %s on N=%d", kind.value, ns.N)
    return ns.sample(f)


def eval_interpolant(kind: InterpolantKind, gf: GridFunction, x: ArrayLike, limit: bool = False) -> ArrayLike:
    """
    Evaluate sum_k f(x_k) L_k(x) with the basis selected by ``kind``.

    Node points return the stored values exactly.
    """
    ns = gf.nodeset
    pts = _points(ns, x)
    cardinals = cardinal_matrix(ns, pts)
    weight = basis_weight(kind, ns, pts, limit)
    with np.errstate(invalid='ignore'):
        values = weight * (cardinals @ (gf.values / node_weight(kind, ns)))
    hits = pts[:, None] == ns.nodes[None, :]
    rows, cols = np.nonzero(hits)
    values[rows] = gf.values[cols]
    return float(values[0]) if np.ndim(x) == 0 else values
