"""SF*: fixed blocks of ``level`` elements kept in sorted key order on top
of a level-``level`` structure over the unbroken blocks."""

from __future__ import annotations

from ._base import SequencedSF
from .basis import BasisSF
from .counter import ComparisonCounter
from .recursive import RecursiveSF


class StarSF(SequencedSF):
    variant = "star"

    def __init__(self, keys, level: int, counter: ComparisonCounter | None = None, *,
                 binary_search: bool = False, _nested: bool = False):
        if level < 1:
            raise ValueError("level must be >= 1")
        self._setup(keys, counter, _nested)
        self.level = level
        self.width = level
        self.binary_search = binary_search
        self._dk = self._dk_linear
        n, width = self.n, self.width
        nblocks = -(-n // width)
        self.order = [self._sorted_block(k * width, min(n, (k + 1) * width)) for k in range(nblocks)]
        self.broken = [False] * nblocks
        block_keys = [self.key[block[0]] for block in self.order]
        if level == 1:
            self.inner = BasisSF(block_keys, self.counter, binary_search=binary_search, _nested=True)
        else:
            self.inner = RecursiveSF(block_keys, level, self.counter,
                                     binary_search=binary_search, _nested=True)
        self._init_sequences()

    def _sorted_block(self, lo, hi):
        key, less = self.key, self.counter.less
        block = []
        for x in range(lo, hi):
            a, b = 0, len(block)
            while a < b:
                mid = (a + b) // 2
                if less(key[x], key[block[mid]]):
                    b = mid
                else:
                    a = mid + 1
            block.insert(a, x)
        return block

    def _piece_min(self, k, lo, hi):
        # sorted order answers a partial-block minimum without comparisons
        for x in self.order[k]:
            if lo <= x <= hi:
                return self.key[x], x
        raise AssertionError("empty block piece")

    def _range_min(self, lo, hi):
        width, inner, less = self.width, self.inner, self.counter.less
        best_k = best_a = None
        k, last = lo // width, hi // width
        while k <= last:
            if self.broken[k]:
                ck, ca = self._piece_min(k, max(lo, k * width), min(hi, k * width + width - 1))
                k += 1
            else:
                s = inner.elem_seq[k]
                ck, ca = inner.seq_key[s], self.order[inner.seq_arg[s]][0]
                k = inner.seq_hi[s] + 1
            if best_a is None or less(ck, best_k):
                best_k, best_a = ck, ca
        return best_k, best_a

    def _split(self, e):
        s = self.elem_seq[e]
        if e == self.seq_lo[s]:
            return
        k = e // self.width
        if not self.broken[k]:
            self.inner._split(k)
            if e != k * self.width:
                if k + 1 < self.inner.n:
                    self.inner._split(k + 1)
                self.broken[k] = True
        self._split_sequence(e)

    def _dk_linear(self, x, w):
        less = self.counter.less
        key = self.key
        if not less(w, key[x]):
            return 0
        key[x] = w
        k = x // self.width
        block = self.order[k]
        p = block.index(x)
        a, b = 0, p
        while a < b:
            mid = (a + b) // 2
            if less(w, key[block[mid]]):
                b = mid
            else:
                a = mid + 1
        if a != p:
            del block[p]
            block.insert(a, x)
        if not self.broken[k]:
            if self.inner._dk(k, w) != 2:
                return 1
        s = self.elem_seq[x]
        if not less(w, self.seq_key[s]):
            return 1
        self.seq_key[s] = w
        self.seq_arg[s] = x
        return 2

    def audit(self):
        self._audit_sequences()
        width = self.width
        for k, block in enumerate(self.order):
            lo, hi = k * width, min(self.n, (k + 1) * width)
            assert sorted(block) == list(range(lo, hi))
            keys = [self.key[x] for x in block]
            assert keys == sorted(keys), f"block {k} lost its sorted order"
            if not self.broken[k]:
                assert self.inner.key[k] == keys[0]
                assert self.sequence_bounds(lo) == self.sequence_bounds(hi - 1)
        for lo, hi in self.sequences():
            for k in range(lo // width + 1, hi // width):
                assert not self.broken[k], "broken block inside a sequence"
        self.inner.audit()
