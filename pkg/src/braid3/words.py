"""3-braid words in the band generators ``a1, a2, a3``.

The band generators satisfy ``a2 a1 = a3 a2 = a1 a3``; in Artin generators
``a1 = s1``, ``a2 = s2`` and ``a3 = s1^-1 s2 s1``.

Words are stored syllable-compressed: a tuple of ``(subscript, power)`` pairs
in which adjacent subscripts differ and no power is zero. Because the only
inverse pairs in the free group on ``a1, a2, a3`` are same-subscript letters,
this storage form is always freely reduced.

Permutations compose left to right in word order, which is top to bottom in
the canonical projection.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Syllable",
    "BraidWord",
    "WordSyntaxError",
    "Permutation3",
    "ClosureInfo",
    "ExpandedLetter",
    "parse_word",
    "format_word",
    "free_reduce",
    "cyclic_reduce",
    "index3_reduce",
    "to_artin",
    "expand_letters",
    "closure_info",
    "conjugate",
    "cyclic_rotate",
    "bennequin_genus",
]


class WordSyntaxError(ValueError):
    """Malformed word text. ``position`` is the 0-based offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Syllable:
    subscript: int
    power: int

    def __post_init__(self):
        if self.subscript not in (1, 2, 3):
            raise ValueError(f"subscript must be 1, 2 or 3, got {self.subscript}")
        if self.power == 0:
            raise ValueError("syllable power must be nonzero")

    def __str__(self) -> str:
        if self.power == 1:
            return f"a{self.subscript}"
        return f"a{self.subscript}^{self.power}"


def _merge(pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[list[int]] = []
    for s, p in pairs:
        if p == 0:
            continue
        if out and out[-1][0] == s:
            out[-1][1] += p
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([s, p])
    return tuple((s, p) for s, p in out)


@dataclass(frozen=True, init=False, order=True)
class BraidWord:
    """An immutable, syllable-reduced word in ``a1, a2, a3``."""

    syllables: tuple[tuple[int, int], ...]

    def __init__(self, syllables: Iterable[tuple[int, int] | Syllable] = ()):
        pairs = []
        for item in syllables:
            if isinstance(item, Syllable):
                pairs.append((item.subscript, item.power))
            else:
                s, p = item
                if s not in (1, 2, 3):
                    raise ValueError(f"subscript must be 1, 2 or 3, got {s}")
                pairs.append((int(s), int(p)))
        object.__setattr__(self, "syllables", _merge(pairs))

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> BraidWord:
        """Build from signed letters, e.g. ``[1, -2, 3]`` for ``a1 a2^-1 a3``."""
        return cls((abs(x), 1 if x > 0 else -1) for x in letters)

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        return parse_word(text)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"BraidWord({format_word(self)!r})"

    def __len__(self) -> int:
        """Total number of letters (sum of absolute syllable powers)."""
        return sum(abs(p) for _, p in self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.syllables + other.syllables)

    def __pow__(self, n: int) -> BraidWord:
        if n < 0:
            return self.inverse() ** (-n)
        return BraidWord(self.syllables * n)

    def letters(self) -> tuple[int, ...]:
        out: list[int] = []
        for s, p in self.syllables:
            out.extend([s if p > 0 else -s] * abs(p))
        return tuple(out)

    def inverse(self) -> BraidWord:
        return BraidWord((s, -p) for s, p in reversed(self.syllables))

    def mirror(self) -> BraidWord:
        """The mirror-image braid: every Artin crossing changes sign.

        For ``a1`` and ``a2`` this inverts the exponent. Inverting the exponent
        of ``a3^k = s1^-1 s2^k s1`` would not be a mirror, so ``a3^k`` becomes
        ``s1 s2^-k s1^-1 = a2^-1 a1^-k a2`` instead.
        """
        out: list[tuple[int, int]] = []
        for s, p in self.syllables:
            if s == 3:
                out += [(2, -1), (1, -p), (2, 1)]
            else:
                out.append((s, -p))
        return BraidWord(out)

    def exponent_sum(self) -> int:
        return sum(p for _, p in self.syllables)

    def is_positive(self) -> bool:
        return all(p > 0 for _, p in self.syllables)

    def is_negative(self) -> bool:
        return all(p < 0 for _, p in self.syllables)

    @property
    def syllable_count(self) -> int:
        return len(self.syllables)

    @property
    def a3_syllable_count(self) -> int:
        return sum(1 for s, _ in self.syllables if s == 3)

    def subscripts_used(self) -> set[int]:
        return {s for s, _ in self.syllables}


_TOKEN = re.compile(r"a([0-9]+)(?:\^([+-]?[0-9]+))?")


def parse_word(text: str) -> BraidWord:
    """Parse whitespace-separated tokens ``a1``, ``a2^3``, ``a3^-1``.

    Tokens may also be written without separators (``a1a2^-1``). An empty
    string is the identity braid.
    """
    pairs: list[tuple[int, int]] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordSyntaxError(f"unexpected {text[pos]!r}", pos)
        sub = int(m.group(1))
        if sub not in (1, 2, 3):
            raise WordSyntaxError(f"unknown generator a{sub}", pos)
        power = int(m.group(2)) if m.group(2) is not None else 1
        if power == 0:
            raise WordSyntaxError("power 0 is not allowed", m.start(2))
        pairs.append((sub, power))
        pos = m.end()
    return BraidWord(pairs)


def format_word(w: BraidWord) -> str:
    return " ".join(str(Syllable(s, p)) for s, p in w.syllables)


def free_reduce(w: BraidWord) -> BraidWord:
    # storage is already freely reduced; rebuilding keeps the contract explicit
    return BraidWord(w.syllables)


def cyclic_reduce(w: BraidWord) -> BraidWord:
    """Cancel inverse letters between the two ends; the result is conjugate to ``w``."""
    syl = [list(x) for x in w.syllables]
    while len(syl) >= 2 and syl[0][0] == syl[-1][0] and (syl[0][1] > 0) != (syl[-1][1] > 0):
        first, last = syl[0], syl[-1]
        k = min(abs(first[1]), abs(last[1]))
        first[1] += k if first[1] < 0 else -k
        last[1] += k if last[1] < 0 else -k
        if first[1] == 0:
            syl.pop(0)
        if syl and syl[-1][1] == 0:
            syl.pop()
        syl = [list(x) for x in _merge(tuple(x) for x in syl)]
    return BraidWord(tuple(x) for x in syl)


def is_cyclically_reduced(w: BraidWord) -> bool:
    syl = w.syllables
    if len(syl) < 2:
        return True
    (s0, p0), (s1, p1) = syl[0], syl[-1]
    return not (s0 == s1 and (p0 > 0) != (p1 > 0))


# -- index-3 reduction -------------------------------------------------------


def in_pstar(w: BraidWord) -> bool:
    """Positive, and both ``a1`` and ``a2`` occur between any two ``a3`` syllables."""
    if not w.is_positive():
        return False
    seen: set[int] | None = None
    for s, _ in w.syllables:
        if s == 3:
            if seen is not None and not {1, 2} <= seen:
                return False
            seen = set()
        elif seen is not None:
            seen.add(s)
    return True


def _eliminable_a3(syl: Sequence[tuple[int, int]]) -> tuple[int, str] | None:
    for i, (s, _) in enumerate(syl):
        if s != 3:
            continue
        if i > 0 and syl[i - 1][0] == 1:
            return i, "before"
        if i + 1 < len(syl) and syl[i + 1][0] == 2:
            return i, "after"
    return None


def is_index3_reduced(w: BraidWord) -> bool:
    """``w`` is in P* and no ``a3`` syllable is preceded by ``a1`` or followed by ``a2``."""
    return in_pstar(w) and _eliminable_a3(w.syllables) is None


def index3_step(w: BraidWord) -> BraidWord | None:
    """Eliminate the leftmost eliminable ``a3`` syllable, or return None."""
    syl = list(w.syllables)
    hit = _eliminable_a3(syl)
    if hit is None:
        return None
    i, side = hit
    k = syl[i][1]
    if side == "before":
        # a1^p a3^k = a1^(p-1) a2^k a1
        p = syl[i - 1][1]
        new = syl[: i - 1] + [(1, p - 1), (2, k), (1, 1)] + syl[i + 1 :]
    else:
        # a3^k a2^p = a2 a1^k a2^(p-1)
        p = syl[i + 1][1]
        new = syl[:i] + [(2, 1), (1, k), (2, p - 1)] + syl[i + 2 :]
    return BraidWord(new)


def index3_reduce(w: BraidWord) -> BraidWord:
    """Apply ``a1 a3^k = a2^k a1`` and ``a3^k a2 = a2 a1^k`` until neither applies."""
    if not in_pstar(w):
        raise ValueError(f"index-3 reduction needs a word in P*, got {w}")
    while True:
        nxt = index3_step(w)
        if nxt is None:
            return w
        w = nxt


# -- Artin form and crossings ------------------------------------------------


@dataclass(frozen=True)
class ExpandedLetter:
    """One crossing of the canonical projection.

    ``generator`` is 1 or 2 (Artin ``s1``/``s2``), ``sign`` the exponent sign,
    ``syllable`` the index of the band syllable it came from, and ``role`` one
    of ``plain``, ``pre``, ``mid``, ``post`` (the last three inside an
    ``a3^k = a1^-1 a2^k a1`` expansion).
    """

    generator: int
    sign: int
    syllable: int
    role: str


def expand_letters(w: BraidWord) -> tuple[ExpandedLetter, ...]:
    """Crossings of the canonical projection, top to bottom, without cancellation."""
    out: list[ExpandedLetter] = []
    for idx, (s, p) in enumerate(w.syllables):
        sign = 1 if p > 0 else -1
        if s in (1, 2):
            out.extend(ExpandedLetter(s, sign, idx, "plain") for _ in range(abs(p)))
        else:
            out.append(ExpandedLetter(1, -1, idx, "pre"))
            out.extend(ExpandedLetter(2, sign, idx, "mid") for _ in range(abs(p)))
            out.append(ExpandedLetter(1, 1, idx, "post"))
    return tuple(out)


def to_artin(w: BraidWord) -> BraidWord:
    """Rewrite ``a3^k`` as ``a1^-1 a2^k a1`` (any sign of ``k``) and freely reduce."""
    pairs: list[tuple[int, int]] = []
    for s, p in w.syllables:
        if s == 3:
            pairs.extend([(1, -1), (2, p), (1, 1)])
        else:
            pairs.append((s, p))
    return BraidWord(pairs)


# -- permutations and closures ------------------------------------------------

_TRANSPOSITION = {1: (0, 1), 2: (1, 2), 3: (0, 2)}


@dataclass(frozen=True)
class Permutation3:
    """``image[i]`` is the 0-based bottom position of the strand starting at top position ``i``."""

    image: tuple[int, int, int] = (0, 1, 2)

    def __post_init__(self):
        if sorted(self.image) != [0, 1, 2]:
            raise ValueError(f"not a permutation of 3 points: {self.image}")

    @classmethod
    def transposition(cls, subscript: int) -> Permutation3:
        i, j = _TRANSPOSITION[subscript]
        img = [0, 1, 2]
        img[i], img[j] = j, i
        return cls(tuple(img))

    def then(self, other: Permutation3) -> Permutation3:
        """Apply ``self`` first, then ``other``."""
        return Permutation3(tuple(other.image[self.image[i]] for i in range(3)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(3):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.image[i]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in nontrivial)


def compose(p: Permutation3, q: Permutation3) -> Permutation3:
    return p.then(q)


@dataclass(frozen=True)
class ClosureInfo:
    permutation: Permutation3
    component_count: int
    strand_component: tuple[int, int, int]  # component label (1-based) of top positions 1..3

    @property
    def is_knot(self) -> bool:
        return self.component_count == 1


def word_permutation(w: BraidWord) -> Permutation3:
    perm = Permutation3()
    for s, p in w.syllables:
        if p % 2:
            perm = perm.then(Permutation3.transposition(s))
    return perm


def closure_info(w: BraidWord) -> ClosureInfo:
    perm = word_permutation(w)
    cycles = perm.cycles()
    label = [0, 0, 0]
    for n, cyc in enumerate(cycles, start=1):
        for i in cyc:
            label[i] = n
    return ClosureInfo(perm, len(cycles), tuple(label))


def bennequin_genus(w: BraidWord) -> int:
    """Genus of the canonical Seifert surface: 3 disks, one band per letter."""
    c = len(w)
    b = closure_info(w).component_count
    if (c - b - 1) % 2:
        raise ArithmeticError(f"parity violation for {w}: c={c}, b={b}")
    return (c - b - 1) // 2


# -- conjugation ---------------------------------------------------------------


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """Return ``g^-1 w g``."""
    return g.inverse() * w * g


def cyclic_rotate(w: BraidWord, k: int) -> BraidWord:
    """Move the first ``k`` letters to the end (negative ``k`` moves letters from the end)."""
    letters = w.letters()
    if not letters:
        return w
    k %= len(letters)
    return BraidWord.from_letters(letters[k:] + letters[:k])


def rotations(w: BraidWord) -> Iterator[BraidWord]:
    for k in range(max(len(w), 1)):
        yield cyclic_rotate(w, k)
