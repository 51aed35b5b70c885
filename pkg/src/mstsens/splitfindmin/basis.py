"""Power-of-two blocks in bitonic order: 3 comparisons per decreasekey."""

from __future__ import annotations

from ._base import SequencedSF, is_bitonic
from .counter import ComparisonCounter


class BasisSF(SequencedSF):
    """The basis split-findmin structure (level 1 of the recursion).

    Every sequence is cut into blocks whose sizes are powers of two,
    strictly increasing then strictly decreasing. Each block and each
    sequence records where its minimum sits. A split inside a block
    destroys it; the left remainder is re-blocked left-to-right in
    decreasing sizes and the right remainder right-to-left, which keeps
    both sides bitonic.
    """

    variant = "basis"
    level = 1

    def __init__(self, keys, counter: ComparisonCounter | None = None, *,
                 binary_search: bool = False, _nested: bool = False):
        self._setup(keys, counter, _nested)
        self.binary_search = binary_search
        self._dk = self._dk_binary if binary_search else self._dk_linear
        self.elem_blk = [0] * self.n
        self.blk_lo = []
        self.blk_hi = []
        self.blk_key = []
        self.blk_arg = []
        self._make_blocks(0, self.n - 1, True)
        self._init_sequences()

    def _make_blocks(self, lo, hi, left_to_right):
        length = hi - lo + 1
        sizes = [1 << b for b in range(length.bit_length() - 1, -1, -1) if length >> b & 1]
        if not left_to_right:
            sizes.reverse()
        key = self.key
        getter = key.__getitem__
        charge = self.counter.charge
        x = lo
        for size in sizes:
            b = len(self.blk_lo)
            if size == 1:
                arg = x
            else:
                # min() makes exactly size - 1 comparisons
                arg = min(range(x, x + size), key=getter)
                charge(size - 1)
            self.blk_lo.append(x)
            self.blk_hi.append(x + size - 1)
            self.blk_key.append(key[arg])
            self.blk_arg.append(arg)
            self.elem_blk[x:x + size] = [b] * size
            x += size

    def _range_min(self, lo, hi):
        elem_blk, blk_hi, blk_key, blk_arg = self.elem_blk, self.blk_hi, self.blk_key, self.blk_arg
        less = self.counter.less
        b = elem_blk[lo]
        bk, ba = blk_key[b], blk_arg[b]
        x = blk_hi[b] + 1
        while x <= hi:
            b = elem_blk[x]
            if less(blk_key[b], bk):
                bk, ba = blk_key[b], blk_arg[b]
            x = blk_hi[b] + 1
        return bk, ba

    def _split(self, e):
        s = self.elem_seq[e]
        if e == self.seq_lo[s]:
            return
        b = self.elem_blk[e]
        blo = self.blk_lo[b]
        if e != blo:
            bhi = self.blk_hi[b]
            self._make_blocks(blo, e - 1, True)
            self._make_blocks(e, bhi, False)
        self._split_sequence(e)

    def _dk_linear(self, x, w):
        less = self.counter.less
        key = self.key
        if not less(w, key[x]):
            return 0
        key[x] = w
        b = self.elem_blk[x]
        if not less(w, self.blk_key[b]):
            return 1
        self.blk_key[b] = w
        self.blk_arg[b] = x
        s = self.elem_seq[x]
        if not less(w, self.seq_key[s]):
            return 1
        self.seq_key[s] = w
        self.seq_arg[s] = x
        return 2

    def _chain(self, x):
        b = self.elem_blk[x]
        s = self.elem_seq[x]
        E = [(self.key, x, None, 0, None), (self.blk_key, b, self.blk_arg, b, x)]
        S = [(self.seq_key, s, self.seq_arg, s, x)]
        return E, S

    def blocks(self, e):
        """Block sizes of the sequence containing ``e``, left to right."""
        lo, hi = self.sequence_bounds(e)
        sizes, x = [], lo
        while x <= hi:
            b = self.elem_blk[x]
            sizes.append(self.blk_hi[b] - self.blk_lo[b] + 1)
            x = self.blk_hi[b] + 1
        return sizes

    def audit(self):
        self._audit_sequences()
        limit = 2 * max(1, self.n.bit_length() - 1)
        for lo, hi in self.sequences():
            sizes, x = [], lo
            while x <= hi:
                b = self.elem_blk[x]
                blo, bhi = self.blk_lo[b], self.blk_hi[b]
                assert blo == x and bhi <= hi, "block straddles a sequence boundary"
                size = bhi - blo + 1
                assert size & (size - 1) == 0, f"block size {size} is not a power of two"
                assert all(self.elem_blk[y] == b for y in range(blo, bhi + 1))
                assert self.blk_key[b] == self.key[self.blk_arg[b]] == min(self.key[blo:bhi + 1])
                sizes.append(size)
                x = bhi + 1
            assert is_bitonic(sizes), f"blocks {sizes} not bitonic"
            assert len(sizes) <= limit
