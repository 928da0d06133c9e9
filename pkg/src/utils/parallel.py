"""
Ordered parallel map for independent sweep points.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from exceptions import ConfigurationError

logger = logging.getLogger(__name__)

THREADS_ENV = 'MUNTZ_SPECTRAL_THREADS'

T = TypeVar('T')
R = TypeVar('R')


def thread_cap(configured: Optional[int] = None) -> int:
    """
    Worker count: MUNTZ_SPECTRAL_THREADS, else the configured value, else the CPU count.

    Raises:
        ConfigurationError: If the environment value is not a positive integer
    """
    raw = os.environ.get(THREADS_ENV)
    if raw is not None:
        try:
            value = int(raw)
        except ValueError as exc:
            raise ConfigurationError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
        if value < 1:
            raise ConfigurationError(f"{THREADS_ENV} must be >= 1, got {value}")
        return value
    if configured is not None:
        return max(1, int(configured))
    return os.cpu_count() or 1


def map_ordered(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """
    Apply fn to every item; results come back in input order.

    The first exception raised by any item propagates.
    """
    items = list(items)
    workers = min(thread_cap(threads), max(1, len(items)))
    if workers == 1:
        return [fn(item) for item in items]
    logger.debug("running %d sweep points on %d threads", len(items), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
