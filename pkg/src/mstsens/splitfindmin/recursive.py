"""Ackermann-plateau split-findmin: level L built on level L-1.

A sequence is a bitonic run of plateaus plus at most two singletons at
its ends. A level-j plateau is a run of fewer than A(L-1, A(L, j)) blocks,
each of size exactly A(L, j); the plateau's blocks are the elements of a
level L-1 instance whose key is the block minimum.
"""

from __future__ import annotations

from ..ackermann import SATURATED, ackermann, lam
from ._base import SequencedSF, is_bitonic
from .basis import BasisSF
from .counter import ComparisonCounter


def block_sizes(level: int, n: int) -> list[int]:
    """A(level, j) for j = 1, 2, ... while the size fits in ``n`` elements."""
    sizes, j = [], 1
    while True:
        size = ackermann(level, j)
        if size is SATURATED or size > n:
            return sizes
        sizes.append(size)
        j += 1


class RecursiveSF(SequencedSF):
    """Level ``level`` >= 2 of the recursive structure.

    decreasekey costs at most 2*level + 1 comparisons (two more than the
    level below). With ``binary_search=True`` the nonincreasing chain of
    min-pointers is bisected instead, costing ceil(log2(2*level + 2)).
    """

    variant = "recursive"

    def __init__(self, keys, level: int, counter: ComparisonCounter | None = None, *,
                 binary_search: bool = False, _nested: bool = False):
        if level < 2:
            raise ValueError("RecursiveSF needs level >= 2; level 1 is BasisSF")
        self._setup(keys, counter, _nested)
        self.level = level
        self.binary_search = binary_search
        self._dk = self._dk_binary if binary_search else self._dk_linear
        self.sizes = block_sizes(level, self.n)
        self.max_blocks = [ackermann(level - 1, size) for size in self.sizes]
        self.elem_blk = [-1] * self.n
        self.blk_start = []
        self.blk_level = []
        self.blk_inner = []
        self.blk_pos = []
        self.blk_arg = []
        self._build(0, self.n - 1, True)
        self._init_sequences()

    def _make_inner(self, keys):
        if self.level == 2:
            return BasisSF(keys, self.counter, binary_search=self.binary_search, _nested=True)
        return RecursiveSF(keys, self.level - 1, self.counter,
                           binary_search=self.binary_search, _nested=True)

    def _build(self, lo, hi, left_to_right):
        """Partition [lo, hi] into plateaus of decreasing level and at most
        one singleton, laid out from the left end or mirrored from the right."""
        rem = hi - lo + 1
        units = []
        for j in range(len(self.sizes) - 1, -1, -1):
            count = rem // self.sizes[j]
            if count:
                units.append((j, count))
                rem -= count * self.sizes[j]
        x = lo
        if not left_to_right:
            if rem:
                self.elem_blk[x] = -1
                x += 1
            units.reverse()
        for j, count in units:
            x = self._plateau(x, j, count)
        if left_to_right and rem:
            self.elem_blk[x] = -1

    def _plateau(self, x, j, count):
        size = self.sizes[j]
        key = self.key
        getter = key.__getitem__
        charge = self.counter.charge
        base = len(self.blk_start)
        block_keys = []
        for t in range(count):
            start = x + t * size
            arg = min(range(start, start + size), key=getter)
            charge(size - 1)
            self.blk_start.append(start)
            self.blk_level.append(j)
            self.blk_arg.append(arg)
            block_keys.append(key[arg])
            self.elem_blk[start:start + size] = [base + t] * size
        inner = self._make_inner(block_keys)
        inner.block_base = base
        self.blk_inner.extend([inner] * count)
        self.blk_pos.extend(range(count))
        return x + count * size

    def _plateau_end(self, inner, s):
        last = inner.block_base + inner.seq_hi[s]
        return self.blk_start[last] + self.sizes[self.blk_level[last]]

    def _range_min(self, lo, hi):
        key, elem_blk = self.key, self.elem_blk
        less = self.counter.less
        best_k = best_a = None
        x = lo
        while x <= hi:
            b = elem_blk[x]
            if b < 0:
                k, a = key[x], x
                x += 1
            else:
                inner = self.blk_inner[b]
                s = inner.elem_seq[self.blk_pos[b]]
                k = inner.seq_key[s]
                a = self.blk_arg[inner.block_base + inner.seq_arg[s]]
                x = self._plateau_end(inner, s)
            if best_a is None or less(k, best_k):
                best_k, best_a = k, a
        return best_k, best_a

    def _split(self, e):
        s = self.elem_seq[e]
        if e == self.seq_lo[s]:
            return
        b = self.elem_blk[e]
        if b >= 0:
            inner = self.blk_inner[b]
            p = self.blk_pos[b]
            start = self.blk_start[b]
            inner._split(p)
            if e != start:
                # isolate b inside its plateau, then re-block its two halves
                if p + 1 < inner.n:
                    inner._split(p + 1)
                end = start + self.sizes[self.blk_level[b]] - 1
                self._build(start, e - 1, True)
                self._build(e, end, False)
        self._split_sequence(e)

    def _dk_linear(self, x, w):
        less = self.counter.less
        key = self.key
        if not less(w, key[x]):
            return 0
        key[x] = w
        b = self.elem_blk[x]
        if b >= 0:
            code = self.blk_inner[b]._dk(self.blk_pos[b], w)
            if code == 0:
                return 1
            self.blk_arg[b] = x
            if code == 1:
                return 1
        s = self.elem_seq[x]
        if not less(w, self.seq_key[s]):
            return 1
        self.seq_key[s] = w
        self.seq_arg[s] = x
        return 2

    def _chain(self, x):
        s = self.elem_seq[x]
        top = (self.key, x, None, 0, None)
        seq = (self.seq_key, s, self.seq_arg, s, x)
        b = self.elem_blk[x]
        if b < 0:
            return [top], [seq]
        inner = self.blk_inner[b]
        p = self.blk_pos[b]
        E, S = inner._chain(p)
        E[0] = (inner.key, p, self.blk_arg, b, x)
        return [top] + E, S + [seq]

    def units(self, e):
        """Units of the sequence containing ``e``: ("s", 0, 1) for a singleton,
        ("p", level j, block count) for a plateau."""
        lo, hi = self.sequence_bounds(e)
        out, x = [], lo
        while x <= hi:
            b = self.elem_blk[x]
            if b < 0:
                out.append(("s", 0, 1))
                x += 1
            else:
                inner = self.blk_inner[b]
                s = inner.elem_seq[self.blk_pos[b]]
                out.append(("p", self.blk_level[b] + 1, inner.seq_hi[s] - inner.seq_lo[s] + 1))
                x = self._plateau_end(inner, s)
        return out

    def audit(self):
        self._audit_sequences()
        inners = {}
        for lo, hi in self.sequences():
            levels, singles, x, idx = [], [], lo, 0
            while x <= hi:
                b = self.elem_blk[x]
                if b < 0:
                    singles.append(idx)
                    x += 1
                else:
                    inner = self.blk_inner[b]
                    p = self.blk_pos[b]
                    s = inner.elem_seq[p]
                    assert inner.seq_lo[s] == p, "unit walk must enter a plateau at its first block"
                    j = self.blk_level[b]
                    size = self.sizes[j]
                    count = inner.seq_hi[s] - inner.seq_lo[s] + 1
                    assert count < self.max_blocks[j], "plateau holds too many blocks"
                    for q in range(inner.seq_lo[s], inner.seq_hi[s] + 1):
                        bb = inner.block_base + q
                        assert self.blk_level[bb] == j and self.blk_start[bb] == x
                        assert all(self.elem_blk[y] == bb for y in range(x, x + size))
                        block_min = min(self.key[x:x + size])
                        assert inner.key[q] == self.key[self.blk_arg[bb]] == block_min
                        x += size
                    assert x - 1 <= hi, "plateau straddles a sequence boundary"
                    levels.append(j)
                    inners[id(inner)] = inner
                idx += 1
            assert all(i in (0, idx - 1) for i in singles), "singleton inside a sequence"
            assert len(singles) <= 2
            assert is_bitonic(levels), f"plateau levels {levels} not bitonic"
            assert len(levels) <= 2 * (lam(self.level, hi - lo + 1) - 1)
        for inner in inners.values():
            inner.audit()
