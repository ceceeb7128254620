"""Bounded breadth-first search for a short conjugate of a word.

Best effort only: explores rotations, the band relations
``a2 a1 = a3 a2 = a1 a3`` (and their inverses) and free/cyclic cancellation,
up to a node budget. It never proves minimality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import BraidWord, cyclic_reduce

# each group lists interchangeable two-letter subwords
_RELATION_GROUPS = (
    ((2, 1), (3, 2), (1, 3)),
    ((-1, -2), (-2, -3), (-3, -1)),
)
_REWRITES: dict[tuple[int, int], list[tuple[int, int]]] = {}
for _group in _RELATION_GROUPS:
    for _pair in _group:
        _REWRITES[_pair] = [q for q in _group if q != _pair]


@dataclass(frozen=True)
class SearchResult:
    word: BraidWord
    exhausted: bool  # budget ran out before the reachable set was closed
    explored: int


def _reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    return cyclic_reduce(BraidWord.from_letters(letters)).letters()


def _neighbours(letters: tuple[int, ...]):
    n = len(letters)
    if n > 1:
        yield letters[1:] + letters[:1]
        yield letters[-1:] + letters[:-1]
    for i in range(n - 1):
        pair = (letters[i], letters[i + 1])
        for rep in _REWRITES.get(pair, ()):
            yield letters[:i] + rep + letters[i + 2 :]


def _key(letters: tuple[int, ...]):
    return len(letters), tuple((abs(x), x < 0) for x in letters)


def explore_conjugates(w: BraidWord, budget: int = 2000) -> tuple[list[tuple[int, ...]], bool]:
    """Breadth-first list of cyclically reduced conjugates (as letter tuples)
    reachable from ``w``, capped at ``budget``; the flag reports the cap was hit."""
    if budget <= 0:
        raise ValueError("budget must be positive")
    start = _reduce(w.letters())
    order = [start]
    seen = {start}
    head = 0
    while head < len(order):
        cur = order[head]
        head += 1
        for nxt in _neighbours(cur):
            nxt = _reduce(nxt)
            if nxt in seen:
                continue
            if len(seen) >= budget:
                return order, True
            seen.add(nxt)
            order.append(nxt)
    return order, False


def is_conjugate_within(u: BraidWord, v: BraidWord, budget: int = 2000) -> tuple[bool, bool]:
    """``(found, exhausted)``: whether ``v`` (cyclically reduced) is reached from ``u``."""
    found, exhausted = explore_conjugates(u, budget)
    return _reduce(v.letters()) in set(found), exhausted


def shortest_cyclic_representative(w: BraidWord, budget: int = 2000) -> SearchResult:
    """Shortest conjugate of ``w`` found within ``budget`` visited words.

    The cyclic reduction of ``w`` is kept when nothing shorter turns up;
    otherwise ties go to the shortlex-least candidate (see
    ``canonical_representative``). Deterministic for a fixed budget.
    """
    found, exhausted = explore_conjugates(w, budget)
    best = min(found, key=_key)
    if len(found[0]) == len(best):
        best = found[0]
    return SearchResult(BraidWord.from_letters(best), exhausted, len(found))


def canonical_representative(w: BraidWord, budget: int = 2000) -> SearchResult:
    """Shortlex-least conjugate found within ``budget``, letters compared as
    ``(subscript, is_inverse)``. Two words with the same result are conjugate."""
    found, exhausted = explore_conjugates(w, budget)
    return SearchResult(BraidWord.from_letters(min(found, key=_key)), exhausted, len(found))
