"""Reference split-findmin: every split rescans both halves."""

from __future__ import annotations

from bisect import bisect_right, insort

from .counter import ComparisonCounter


class NaiveSF:
    """Oracle structure. Sequences are kept as a sorted list of start
    indices; minima are recomputed by linear scans on every split."""

    variant = "naive"

    def __init__(self, keys, counter: ComparisonCounter | None = None):
        keys = list(keys)
        if not keys:
            raise ValueError("split-findmin needs at least one element")
        self.n = len(keys)
        self.key = keys
        self.counter = counter if counter is not None else ComparisonCounter()
        self.counter.op = "init"
        self.starts = [0]
        self.mins = {0: self._scan(0, self.n - 1)}

    def _scan(self, lo, hi):
        less = self.counter.less
        key = self.key
        best = lo
        for x in range(lo + 1, hi + 1):
            if less(key[x], key[best]):
                best = x
        return best

    def _bounds(self, e):
        k = bisect_right(self.starts, e) - 1
        lo = self.starts[k]
        hi = self.starts[k + 1] - 1 if k + 1 < len(self.starts) else self.n - 1
        return lo, hi

    def _check(self, e):
        if not 0 <= e < self.n:
            raise IndexError(f"element {e} out of range [0, {self.n})")

    def sequence_bounds(self, e):
        self._check(e)
        return self._bounds(e)

    def findmin(self, e):
        self._check(e)
        lo, _ = self._bounds(e)
        arg = self.mins[lo]
        return self.key[arg], arg

    def split(self, e):
        self._check(e)
        self.counter.op = "split"
        lo, hi = self._bounds(e)
        if e == lo:
            return
        insort(self.starts, e)
        self.mins[lo] = self._scan(lo, e - 1)
        self.mins[e] = self._scan(e, hi)

    def decreasekey(self, e, w):
        self._check(e)
        self.counter.op = "decreasekey"
        less = self.counter.less
        if not less(w, self.key[e]):
            return
        self.key[e] = w
        lo, _ = self._bounds(e)
        if less(w, self.key[self.mins[lo]]):
            self.mins[lo] = e

    def current_key(self, e):
        self._check(e)
        return self.key[e]

    def comparisons(self) -> dict:
        return self.counter.snapshot()

    def audit(self):
        for lo in self.starts:
            _, hi = self._bounds(lo)
            arg = self.mins[lo]
            assert lo <= arg <= hi
            assert self.key[arg] == min(self.key[lo:hi + 1])
