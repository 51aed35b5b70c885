"""Comparison accounting shared by every split-findmin variant."""

from __future__ import annotations

import math

INF = math.inf

OPERATIONS = ("init", "split", "findmin", "decreasekey")


class ComparisonCounter:
    """Monotone tally of key comparisons, bucketed by the public operation
    that caused them.

    Nested structures share their parent's counter, so comparisons made by
    an inner instance during an outer split are charged to ``split``.
    """

    __slots__ = ("counts", "op")

    def __init__(self):
        self.counts = dict.fromkeys(OPERATIONS, 0)
        self.op = "init"

    def less(self, a, b) -> bool:
        self.counts[self.op] += 1
        return a < b

    def charge(self, k: int) -> None:
        """Record ``k`` comparisons performed in bulk (e.g. by ``min``)."""
        self.counts[self.op] += k

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def snapshot(self) -> dict:
        out = dict(self.counts)
        out["total"] = self.total
        return out

    def __repr__(self):
        body = ", ".join(f"{k}={v}" for k, v in self.counts.items())
        return f"ComparisonCounter({body})"
