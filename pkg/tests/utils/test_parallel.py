"""
Tests for the ordered thread-pool map.
"""

import os
import sys
import time

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from exceptions import ConfigurationError
from utils.parallel import THREADS_ENV, map_ordered, thread_cap


class TestThreadCap:
    """Worker-count resolution."""

    def test_environment_wins(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, '3')
        assert thread_cap(8) == 3

    def test_configured_value(self, monkeypatch):
        monkeypatch.delenv(THREADS_ENV, raising=False)
        assert thread_cap(2) == 2
        assert thread_cap(0) == 1

    def test_cpu_count_default(self, monkeypatch):
        monkeypatch.delenv(THREADS_ENV, raising=False)
        assert thread_cap() == (os.cpu_count() or 1)

    @pytest.mark.parametrize("raw", ['zero', '0', '-2'])
    def test_invalid_environment(self, monkeypatch, raw):
        monkeypatch.setenv(THREADS_ENV, raw)
        with pytest.raises(ConfigurationError):
            thread_cap()


class TestMapOrdered:
    """Ordering and error propagation."""

    def test_preserves_order(self, monkeypatch):
        monkeypatch.delenv(THREADS_ENV, raising=False)

        def slow_square(n):
            time.sleep(0.01 * (5 - n))
            return n * n

        assert map_ordered(slow_square, range(5), threads=4) == [0, 1, 4, 9, 16]

    def test_serial(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, '1')
        assert map_ordered(str, [1, 2]) == ['1', '2']

    def test_empty(self):
        assert map_ordered(str, []) == []

    def test_exception_propagates(self, monkeypatch):
        monkeypatch.delenv(THREADS_ENV, raising=False)

        def fail(n):
            if n == 2:
                raise ValueError("boom")
            return n

        with pytest.raises(ValueError, match="boom"):
            map_ordered(fail, [1, 2, 3], threads=2)
