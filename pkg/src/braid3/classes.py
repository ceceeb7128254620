"""Word classes P, N, P*, Pa and the excluded set E, normal-form recognition,
and deterministic enumeration of words by class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .words import (
    BraidWord,
    in_pstar,
    is_cyclically_reduced,
    is_index3_reduced,
    parse_word,
)

ALPHA = BraidWord([(2, 1), (1, 1)])

EXCLUDED_TEXT = (
    "a1^-1 a2 a3^2 a1 a2",
    "a1^-1 a3^2 a1 a2 a3",
    "a1^-1 a3 a1 a2^2 a3",
    "a1^-1 a2 a3 a1 a2^2",
    "a2^-1 a3 a1 a2 a3^2",
    "a2^-1 a3 a1^2 a2 a3",
    "a2^-1 a1 a2 a3^2 a1",
    "a2^-1 a1^2 a2 a3 a1",
    "a3^-1 a1 a2 a3 a1^2",
    "a3^-1 a1 a2^2 a3 a1",
    "a3^-1 a2 a3 a1^2 a2",
    "a3^-1 a2^2 a3 a1 a2",
)
EXCLUDED = tuple(parse_word(t) for t in EXCLUDED_TEXT)
_EXCLUDED_SET = frozenset(EXCLUDED)


def _next_up(s: int) -> int:
    return s % 3 + 1


def _next_down(s: int) -> int:
    return (s - 2) % 3 + 1


def in_p(w: BraidWord) -> bool:
    """Positive with subscripts non-decreasing mod 3 (1 -> 2 -> 3 -> 1)."""
    syl = w.syllables
    if not w.is_positive():
        return False
    return all(syl[j + 1][0] == _next_up(syl[j][0]) for j in range(len(syl) - 1))


def in_n(w: BraidWord) -> bool:
    syl = w.syllables
    if not w.is_negative():
        return False
    return all(syl[j + 1][0] == _next_down(syl[j][0]) for j in range(len(syl) - 1))


def split_pa(w: BraidWord) -> tuple[int, int, BraidWord] | None:
    """Split ``w = a_i^-q delta`` with ``q`` in {0, 1} and ``delta`` positive.

    Returns ``(q, i, delta)`` (``i = 0`` when ``q = 0``) or None when ``w`` has
    no such shape. No class conditions are checked here.
    """
    syl = w.syllables
    if not syl:
        return None
    if syl[0][1] == -1:
        delta = BraidWord(syl[1:])
        if delta.is_positive():
            return 1, syl[0][0], delta
        return None
    if w.is_positive():
        return 0, 0, w
    return None


def in_pa(w: BraidWord) -> bool:
    parts = split_pa(w)
    if parts is None:
        return False
    _, _, delta = parts
    return bool(delta) and is_cyclically_reduced(w) and is_index3_reduced(delta)


def in_excluded(w: BraidWord) -> bool:
    return w in _EXCLUDED_SET


def normal_form(w: BraidWord) -> tuple[str, int] | None:
    """Recognize normal forms (i)-(iii) literally.

    Returns ``("I", k)`` for ``alpha^k p`` (k >= 0, p in P), ``("II", k)`` for
    ``alpha^k n`` (k <= 0, n in N), ``("III", 0)`` for ``p n``, else None.
    Shortest-length minimality is not certified.
    """
    letters = w.letters()
    alpha = (2, 1)
    k = 0
    while True:
        rest = BraidWord.from_letters(letters[2 * k :])
        if in_p(rest):
            return "I", k
        if letters[2 * k : 2 * k + 2] != alpha:
            break
        k += 1
    inv = (-1, -2)
    k = 0
    while True:
        rest = BraidWord.from_letters(letters[2 * k :])
        if in_n(rest):
            return "II", -k
        if letters[2 * k : 2 * k + 2] != inv:
            break
        k += 1
    for cut in range(len(letters) + 1):
        head = BraidWord.from_letters(letters[:cut])
        tail = BraidWord.from_letters(letters[cut:])
        if in_p(head) and in_n(tail):
            return "III", 0
    return None


@dataclass(frozen=True)
class ClassReport:
    in_P: bool
    in_N: bool
    in_Pstar: bool
    is_index3_reduced: bool
    in_Pa: bool
    in_E: bool
    normal_form: tuple[str, int] | None
    s_count: int
    n3_count: int

    def as_dict(self) -> dict:
        nf = None
        if self.normal_form is not None:
            tag, k = self.normal_form
            nf = tag if tag == "III" else f"{tag}({k})"
        return {
            "P": self.in_P,
            "N": self.in_N,
            "Pstar": self.in_Pstar,
            "index3_reduced": self.is_index3_reduced,
            "Pa": self.in_Pa,
            "E": self.in_E,
            "normal_form": nf,
            "syllables": self.s_count,
            "a3_syllables": self.n3_count,
        }


def classify(w: BraidWord) -> ClassReport:
    """Class membership of ``w`` read literally (no rewriting).

    ``is_index3_reduced`` refers to the positive tail ``delta`` when ``w``
    has the shape ``a_i^-1 delta``, otherwise to ``w`` itself.
    """
    parts = split_pa(w)
    tail = parts[2] if parts is not None else w
    return ClassReport(
        in_P=in_p(w),
        in_N=in_n(w),
        in_Pstar=in_pstar(w),
        is_index3_reduced=is_index3_reduced(tail),
        in_Pa=in_pa(w),
        in_E=in_excluded(w),
        normal_form=normal_form(w),
        s_count=w.syllable_count,
        n3_count=w.a3_syllable_count,
    )


# -- enumeration -------------------------------------------------------------

CLASS_FILTERS = ("all", "P", "N", "Pstar", "Pa", "Pa4", "positive-artin")

Syl = tuple[int, int]


def _options_all(prefix: Sequence[Syl], remaining: int) -> Iterator[Syl]:
    prev = prefix[-1][0] if prefix else 0
    for s in (1, 2, 3):
        if s == prev:
            continue
        for p in range(-remaining, remaining + 1):
            if p:
                yield s, p


def _positive(subs: Sequence[int], remaining: int) -> Iterator[Syl]:
    for s in subs:
        for p in range(1, remaining + 1):
            yield s, p


def _options_p(prefix: Sequence[Syl], remaining: int) -> Iterator[Syl]:
    subs = (1, 2, 3) if not prefix else (_next_up(prefix[-1][0]),)
    return _positive(subs, remaining)


def _options_n(prefix: Sequence[Syl], remaining: int) -> Iterator[Syl]:
    subs = (1, 2, 3) if not prefix else (_next_down(prefix[-1][0]),)
    for s in subs:
        for p in range(-remaining, 0):
            yield s, p


def _pstar_ok(delta: Sequence[Syl], s: int) -> bool:
    if s != 3:
        return True
    seen: set[int] = set()
    for t, _ in reversed(delta):
        if t == 3:
            return {1, 2} <= seen
        seen.add(t)
    return True


def _options_pstar(prefix: Sequence[Syl], remaining: int) -> Iterator[Syl]:
    prev = prefix[-1][0] if prefix else 0
    subs = [s for s in (1, 2, 3) if s != prev and _pstar_ok(prefix, s)]
    return _positive(subs, remaining)


def _options_pa(prefix: Sequence[Syl], remaining: int) -> Iterator[Syl]:
    if not prefix:
        # the leading a_i^-1 sorts before positive powers of the same subscript
        for s in (1, 2, 3):
            yield s, -1
            for p in range(1, remaining + 1):
                yield s, p
        return
    delta = prefix[1:] if prefix[0][1] < 0 else prefix
    prev = prefix[-1][0]
    for s in (1, 2, 3):
        if s == prev or not _pstar_ok(delta, s):
            continue
        if delta:
            # index-3 reduced: no a3 right after a1, no a2 right after a3
            if s == 3 and delta[-1][0] == 1:
                continue
            if s == 2 and delta[-1][0] == 3:
                continue
        for p in range(1, remaining + 1):
            yield s, p


def _options_artin(prefix: Sequence[Syl], remaining: int) -> Iterator[Syl]:
    prev = prefix[-1][0] if prefix else 0
    return _positive([s for s in (1, 2) if s != prev], remaining)


def _accept_true(prefix: Sequence[Syl]) -> bool:
    return True


def _accept_pa(prefix: Sequence[Syl]) -> bool:
    if prefix[0][1] < 0:
        if len(prefix) < 2:
            return False
        return prefix[-1][0] != prefix[0][0]
    return True


def _accept_pa4(prefix: Sequence[Syl]) -> bool:
    if not _accept_pa(prefix):
        return False
    q = 1 if prefix[0][1] < 0 else 0
    return len(prefix) - q >= 4


_FILTERS: dict[str, tuple[Callable, Callable]] = {
    "all": (_options_all, _accept_true),
    "P": (_options_p, _accept_true),
    "N": (_options_n, _accept_true),
    "Pstar": (_options_pstar, _accept_true),
    "Pa": (_options_pa, _accept_pa),
    "Pa4": (_options_pa, _accept_pa4),
    "positive-artin": (_options_artin, _accept_true),
}

_MEMBERSHIP: dict[str, Callable[[BraidWord], bool]] = {
    "all": lambda w: True,
    "P": in_p,
    "N": in_n,
    "Pstar": in_pstar,
    "Pa": in_pa,
    "Pa4": lambda w: in_pa(w) and w.syllable_count - split_pa(w)[0] >= 4,
    "positive-artin": lambda w: w.is_positive() and w.subscripts_used() <= {1, 2},
}


def member(class_filter: str, w: BraidWord) -> bool:
    """Membership test matching ``enumerate_words`` for the same filter."""
    return _MEMBERSHIP[class_filter](w)


def enumerate_words(class_filter: str, max_letters: int) -> Iterator[BraidWord]:
    """Yield every nonempty word with at most ``max_letters`` letters in the class.

    Order: by total letter count, then lexicographically on the sequence of
    ``(subscript, power)`` syllables.
    """
    if class_filter not in _FILTERS:
        raise ValueError(f"unknown class filter {class_filter!r}; choose from {CLASS_FILTERS}")
    options, accept = _FILTERS[class_filter]

    def walk(prefix: list[Syl], remaining: int) -> Iterator[BraidWord]:
        if remaining == 0:
            if accept(prefix):
                yield BraidWord(prefix)
            return
        for s, p in options(prefix, remaining):
            if abs(p) > remaining:
                continue
            prefix.append((s, p))
            yield from walk(prefix, remaining - abs(p))
            prefix.pop()

    for n in range(1, max_letters + 1):
        yield from walk([], n)
