"""Sequence bookkeeping shared by the blocked split-findmin variants.

Elements live in one fixed array. A sequence is an index interval with a
min-pointer; ``elem_seq`` maps each element to its sequence id. On a split
the shorter side is relabelled, the side holding the old minimum keeps
it, and only the other side is rescanned via ``_range_min``.
"""

from __future__ import annotations

from .counter import ComparisonCounter


def is_bitonic(values) -> bool:
    """Strictly increasing then strictly decreasing; the two largest may tie."""
    i, n = 0, len(values)
    while i + 1 < n and values[i] < values[i + 1]:
        i += 1
    if i + 1 < n and values[i] == values[i + 1]:
        i += 1
    while i + 1 < n and values[i] > values[i + 1]:
        i += 1
    return i >= n - 1


class SequencedSF:
    variant = "abstract"

    def _setup(self, keys, counter, nested):
        keys = list(keys)
        if not keys:
            raise ValueError("split-findmin needs at least one element")
        self.n = len(keys)
        self.key = keys
        self.counter = counter if counter is not None else ComparisonCounter()
        if not nested:
            self.counter.op = "init"

    def _init_sequences(self):
        n = self.n
        self.elem_seq = [0] * n
        self.seq_lo = [0]
        self.seq_hi = [n - 1]
        k, a = self._range_min(0, n - 1)
        self.seq_key = [k]
        self.seq_arg = [a]

    def _split_sequence(self, e):
        elem_seq, seq_lo, seq_hi = self.elem_seq, self.seq_lo, self.seq_hi
        s = elem_seq[e]
        lo, hi = seq_lo[s], seq_hi[s]
        t = len(seq_lo)
        if e - lo <= hi - e + 1:
            elem_seq[lo:e] = [t] * (e - lo)
            seq_lo.append(lo)
            seq_hi.append(e - 1)
            seq_lo[s] = e
            left, right = t, s
        else:
            elem_seq[e:hi + 1] = [t] * (hi - e + 1)
            seq_lo.append(e)
            seq_hi.append(hi)
            seq_hi[s] = e - 1
            left, right = s, t
        k0, a0 = self.seq_key[s], self.seq_arg[s]
        self.seq_key.append(None)
        self.seq_arg.append(None)
        keep, other = (left, right) if a0 < e else (right, left)
        self.seq_key[keep] = k0
        self.seq_arg[keep] = a0
        self.seq_key[other], self.seq_arg[other] = self._range_min(seq_lo[other], seq_hi[other])

    def _dk_binary(self, x, w):
        # The chain E_top..E_0, S_1..S_top has nonincreasing minima, so the
        # slots that w improves form a prefix; locate its end by bisection.
        E, S = self._chain(x)
        chain = E + S
        less = self.counter.less
        lo, hi = 0, len(chain)
        while lo < hi:
            mid = (lo + hi) // 2
            keys, idx = chain[mid][0], chain[mid][1]
            if less(w, keys[idx]):
                lo = mid + 1
            else:
                hi = mid
        for keys, idx, args, aidx, witness in chain[:lo]:
            keys[idx] = w
            if args is not None:
                args[aidx] = witness
        if lo == 0:
            return 0
        return 2 if lo == len(chain) else 1

    def chain_keys(self, x):
        """Keys along the nesting chain of ``x`` (debug aid; no comparisons)."""
        E, S = self._chain(x)
        return [keys[idx] for keys, idx, *_ in E + S]

    # public interface

    def _check(self, e):
        if not 0 <= e < self.n:
            raise IndexError(f"element {e} out of range [0, {self.n})")

    def findmin(self, e):
        """Minimum key of the sequence containing ``e`` and a witness element."""
        self._check(e)
        s = self.elem_seq[e]
        return self.seq_key[s], self.seq_arg[s]

    def split(self, e):
        """Split the sequence containing ``e`` just before ``e``."""
        self._check(e)
        self.counter.op = "split"
        self._split(e)

    def decreasekey(self, e, w):
        """Set key(e) to min(key(e), w)."""
        self._check(e)
        self.counter.op = "decreasekey"
        self._dk(e, w)

    def sequence_bounds(self, e):
        self._check(e)
        s = self.elem_seq[e]
        return self.seq_lo[s], self.seq_hi[s]

    def current_key(self, e):
        self._check(e)
        return self.key[e]

    def comparisons(self) -> dict:
        return self.counter.snapshot()

    def sequences(self):
        """Live sequences as sorted (lo, hi) intervals."""
        out, x = [], 0
        while x < self.n:
            s = self.elem_seq[x]
            out.append((self.seq_lo[s], self.seq_hi[s]))
            x = self.seq_hi[s] + 1
        return out

    def _audit_sequences(self):
        x = 0
        while x < self.n:
            s = self.elem_seq[x]
            lo, hi = self.seq_lo[s], self.seq_hi[s]
            assert lo == x, f"sequence {s} starts at {lo}, expected {x}"
            assert all(self.elem_seq[y] == s for y in range(lo, hi + 1))
            arg = self.seq_arg[s]
            assert lo <= arg <= hi
            assert self.seq_key[s] == self.key[arg] == min(self.key[lo:hi + 1])
            x = hi + 1
