"""Operation-replay text format for split-findmin fuzz corpora.

One operation per line, element indices 1-based::

    init 5
    dk 2 7
    split 3
    fm 1

``init n`` starts a fresh structure with every key at infinity, ``dk e w``
lowers key(e) to w (``inf`` allowed), ``split e`` splits just before e and
``fm e`` emits the minimum of e's sequence. Blank lines and ``#`` comments
are ignored.
"""

from __future__ import annotations

from . import INF, ComparisonCounter, make_sf


class ReplayError(ValueError):
    pass


def _parse_key(token: str, lineno: int):
    if token.lower() in ("inf", "+inf", "infinity"):
        return INF
    try:
        return int(token)
    except ValueError:
        raise ReplayError(f"line {lineno}: bad key {token!r}") from None


def format_key(k) -> str:
    return "inf" if k == INF else str(k)


def replay(lines, variant: str = "recursive", *, counter: ComparisonCounter | None = None,
           binary_search: bool = False):
    """Run a replay script, yielding the key reported by every ``fm`` line."""
    sf = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        op, *args = line.split()
        if op == "init":
            if len(args) != 1:
                raise ReplayError(f"line {lineno}: usage 'init n'")
            try:
                n = int(args[0])
            except ValueError:
                raise ReplayError(f"line {lineno}: bad size {args[0]!r}") from None
            if n < 1:
                raise ReplayError(f"line {lineno}: init needs n >= 1")
            sf = make_sf([INF] * n, variant, counter=counter, binary_search=binary_search)
            continue
        if sf is None:
            raise ReplayError(f"line {lineno}: operation before 'init'")
        expected = {"dk": 2, "split": 1, "fm": 1}
        if op not in expected:
            raise ReplayError(f"line {lineno}: unknown operation {op!r}")
        if len(args) != expected[op]:
            raise ReplayError(f"line {lineno}: {op} takes {expected[op]} argument(s)")
        try:
            e = int(args[0]) - 1
        except ValueError:
            raise ReplayError(f"line {lineno}: bad element {args[0]!r}") from None
        if not 0 <= e < sf.n:
            raise ReplayError(f"line {lineno}: element {e + 1} out of range 1..{sf.n}")
        if op == "dk":
            sf.decreasekey(e, _parse_key(args[1], lineno))
        elif op == "split":
            sf.split(e)
        else:
            yield sf.findmin(e)[0]
