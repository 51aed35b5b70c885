"""Split-findmin structures behind one interface.

``make_sf`` builds any variant; all of them expose ``split``, ``findmin``,
``decreasekey``, ``comparisons`` and ``audit``. Element indices are
0-based.
"""

from __future__ import annotations

from ..ackermann import alpha
from .basis import BasisSF
from .counter import INF, OPERATIONS, ComparisonCounter
from .naive import NaiveSF
from .recursive import RecursiveSF
from .star import StarSF

VARIANTS = ("naive", "basis", "recursive", "star")
MAX_LEVEL = 4

__all__ = [
    "INF", "OPERATIONS", "VARIANTS", "ComparisonCounter", "NaiveSF", "BasisSF",
    "RecursiveSF", "StarSF", "make_sf", "select_level", "parse_variant",
]


def select_level(n: int, m_expected: int | None = None) -> int:
    """Recursion level for ``n`` elements and about ``m_expected`` operations."""
    m = n if m_expected is None else m_expected
    return min(MAX_LEVEL, max(1, alpha(m, max(1, n))))


def parse_variant(text: str) -> tuple[str, int | None]:
    """``"recursive:3"`` -> ("recursive", 3); ``"basis"`` -> ("basis", None)."""
    name, _, level = text.partition(":")
    name = name.strip().lower()
    if name not in VARIANTS:
        raise ValueError(f"unknown split-findmin variant {text!r}; expected one of {VARIANTS}")
    if not level:
        return name, None
    if name in ("naive", "basis"):
        raise ValueError(f"variant {name!r} takes no level")
    level = int(level)
    if level < 1:
        raise ValueError("level must be >= 1")
    return name, level


def make_sf(keys, variant: str = "recursive", *, level: int | None = None,
            counter: ComparisonCounter | None = None, m_expected: int | None = None,
            binary_search: bool = False):
    """Initialise one sequence over ``keys`` with the requested variant.

    ``variant`` may carry a level suffix (``"recursive:2"``). Without one,
    recursive and star levels come from :func:`select_level`.
    """
    keys = list(keys)
    if not keys:
        raise ValueError("split-findmin needs at least one element")
    name, parsed = parse_variant(variant)
    if level is None:
        level = parsed
    counter = counter if counter is not None else ComparisonCounter()
    if name == "naive":
        return NaiveSF(keys, counter)
    if name == "basis":
        return BasisSF(keys, counter, binary_search=binary_search)
    if level is None:
        level = select_level(len(keys), m_expected)
    if name == "star":
        return StarSF(keys, level, counter, binary_search=binary_search)
    if level == 1:
        return BasisSF(keys, counter, binary_search=binary_search)
    return RecursiveSF(keys, level, counter, binary_search=binary_search)
