"""Alphabets, words and monomial patterns.

Words are plain Python strings; every symbol is a single code point.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class Alphabet(tuple):
    """An ordered tuple of distinct single-character symbols."""

    def __new__(cls, symbols: Iterable[str]):
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError("alphabet must be nonempty")
        for s in symbols:
            if not isinstance(s, str) or len(s) != 1 or not s.isprintable() or s.isspace():
                raise ValueError(f"invalid alphabet symbol {s!r}")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate symbols in alphabet {''.join(symbols)!r}")
        return super().__new__(cls, symbols)

    @classmethod
    def of(cls, text: str) -> "Alphabet":
        """Alphabet of the distinct symbols of ``text`` in first-occurrence order."""
        return cls(dict.fromkeys(text))

    def check(self, word: str) -> str:
        for i, c in enumerate(word):
            if c not in self:
                raise ValueError(f"symbol {c!r} at position {i + 1} is not in the alphabet {''.join(self)!r}")
        return word

    def words(self, max_len: int, min_len: int = 0) -> Iterator[str]:
        """All words with ``min_len <= |w| <= max_len`` in shortlex order."""
        level = [""]
        for n in range(max_len + 1):
            if n >= min_len:
                yield from level
            level = [w + a for w in level for a in self]

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self)!r})"


def factor_alphabet(u: str, k: int) -> frozenset[str]:
    """The set of factors of length ``k`` of ``u``."""
    if k < 1:
        raise ValueError("k must be positive")
    return frozenset(u[i:i + k] for i in range(len(u) - k + 1))


def bounded_prefix(u: str, k: int) -> str:
    return u[:max(k, 0)]


def bounded_suffix(u: str, k: int) -> str:
    return u[len(u) - min(max(k, 0), len(u)):]


@dataclass(frozen=True)
class MonomialPattern:
    """Anchors ``w1, ..., wl`` separated by uniform gaps.

    ``gap`` is ``"+"`` (at least one letter) or ``"*"`` (any number).
    ``leading_gap``/``trailing_gap`` put a gap of the same kind before the
    first and after the last anchor.
    """

    anchors: tuple[str, ...]
    gap: str = "+"
    leading_gap: bool = False
    trailing_gap: bool = False

    def __post_init__(self):
        if not self.anchors or any(not w for w in self.anchors):
            raise ValueError("a monomial needs at least one anchor and no empty anchors")
        if self.gap not in ("+", "*"):
            raise ValueError(f"gap must be '+' or '*', not {self.gap!r}")
        object.__setattr__(self, "anchors", tuple(self.anchors))

    @property
    def weight(self) -> int:
        return sum(map(len, self.anchors))

    def __str__(self) -> str:
        g = "A" + self.gap
        parts = [g] if self.leading_gap else []
        for i, w in enumerate(self.anchors):
            if i:
                parts.append(g)
            parts.append(w)
        if self.trailing_gap:
            parts.append(g)
        return "".join(parts)


def monomial_member(u: str, p: MonomialPattern) -> bool:
    """Decide ``u`` in ``p`` by a left-to-right reachability sweep.

    ``ends`` holds every position at which the anchors matched so far can
    end; a gap widens it by the minimal gap length onwards.
    """
    min_gap = 1 if p.gap == "+" else 0
    n = len(u)
    # positions where the next anchor may start
    if p.leading_gap:
        starts = set(range(min_gap, n + 1))
    else:
        starts = {0}
    ends: set[int] = set()
    for idx, w in enumerate(p.anchors):
        ends = {s + len(w) for s in starts if u.startswith(w, s)}
        if not ends:
            return False
        if idx + 1 < len(p.anchors):
            lo = min(ends) + min_gap
            starts = set(range(lo, n + 1))
    if p.trailing_gap:
        return min(ends) + min_gap <= n
    return n in ends


@lru_cache(maxsize=None)
def monomial_profile(u: str, n: int) -> frozenset[tuple[str, ...]]:
    """Anchor tuples ``(w1, ..., wl)`` with total length at most ``n`` such
    that ``u`` lies in ``w1 A+ w2 ... A+ wl``."""
    if n < 1:
        raise ValueError("n must be positive")
    size = len(u)
    found: set[tuple[str, ...]] = set()

    def extend(start: int, budget: int, acc: tuple[str, ...]) -> None:
        # place the next anchor at ``start``
        for k in range(1, min(budget, size - start) + 1):
            w = u[start:start + k]
            chain = acc + (w,)
            end = start + k
            if end == size:
                found.add(chain)
                continue
            for nxt in range(end + 1, size):
                extend(nxt, budget - k, chain)

    if size:
        extend(0, n, ())
    return frozenset(found)
