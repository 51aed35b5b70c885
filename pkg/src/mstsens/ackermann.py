"""Ackermann's function with saturation, its row inverse and alpha(m, n).

Values are only ever compared against problem sizes, so anything above the
cap is collapsed into :data:`SATURATED`, which compares greater than every
integer.
"""

from __future__ import annotations

from functools import lru_cache

DEFAULT_CAP = 1 << 62


class _Saturated:
    """An Ackermann value too large to matter: greater than any integer."""

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("SATURATED")

    def __repr__(self):
        return "SATURATED"


SATURATED = _Saturated()


@lru_cache(maxsize=None)
def _ack(i: int, j: int, cap: int):
    if i == 1:
        return 1 << j if j <= cap.bit_length() - 1 else SATURATED
    if j == 1:
        return 2
    # Walk the row upwards; A(i, j) >= 2**j so this saturates within ~63 steps.
    value = 2
    for _ in range(2, j + 1):
        step = _ack(i - 1, value, cap)
        if step is SATURATED:
            return SATURATED
        value *= step
        if value > cap:
            return SATURATED
    return value


def ackermann(i: int, j: int, cap: int = DEFAULT_CAP):
    """Return A(i, j), or :data:`SATURATED` if it exceeds ``cap``.

    A(1, j) = 2**j, A(i, 1) = 2 and A(i+1, j+1) = A(i+1, j) * A(i, A(i+1, j)).
    """
    if i < 1 or j < 1:
        raise ValueError(f"ackermann requires i, j >= 1, got ({i}, {j})")
    return _ack(int(i), int(j), int(cap))


def lam(i: int, n: int) -> int:
    """Row inverse: the least j with A(i, j) > n."""
    if i < 1:
        raise ValueError("row index must be >= 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = max(DEFAULT_CAP, n)
    j = 1
    while not ackermann(i, j, cap) > n:
        j += 1
    return j


def alpha(m: int, n: int) -> int:
    """Inverse Ackermann: the least i with A(i, ceil((2n + m) / n)) > n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 0:
        raise ValueError("m must be nonnegative")
    column = -(-(2 * n + m) // n)
    cap = max(DEFAULT_CAP, n)
    i = 1
    while not ackermann(i, column, cap) > n:
        i += 1
    return i
