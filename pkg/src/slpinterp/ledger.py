"""Probe cost accounting."""

from __future__ import annotations

import threading
from collections import Counter


class ProbeLedger:
    """Append-only multiset of probe degrees.

    Safe to share between threads; every derived total is independent of the
    order in which probes were recorded.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._degrees: list[int] = []

    def record(self, degree: int) -> None:
        with self._lock:
            self._degrees.append(degree)

    @property
    def degrees(self) -> list[int]:
        with self._lock:
            return list(self._degrees)

    @property
    def count(self) -> int:
        with self._lock:
            return len(self._degrees)

    @property
    def max_degree(self) -> int:
        with self._lock:
            return max(self._degrees, default=0)

    @property
    def total_degree(self) -> int:
        """Sum of probe degrees, the cost proxy compared across algorithms."""
        with self._lock:
            return sum(self._degrees)

    def histogram(self) -> Counter:
        with self._lock:
            return Counter(self._degrees)

    def summary(self) -> str:
        return f"probes={self.count} max_degree={self.max_degree} total_degree={self.total_degree}"

    def __repr__(self):
        return f"ProbeLedger({self.summary()})"

    def extend(self, other: ProbeLedger) -> None:
        degrees = other.degrees
        with self._lock:
            self._degrees.extend(degrees)
