"""Burau representation, Alexander/Conway/Casson invariants of closures,
linking numbers, and the crossing-change machinery.

Sign conventions
----------------
A positive-exponent Artin letter is a *negative* crossing (sign -1) when
strands are oriented downward, so a positive letter whose two strands lie on
different components contributes -1/2 to the linking number. Under the same
convention the word carrying the negative-exponent letter at a crossing is
``K+`` in the crossing-change identity ``C(K+) - C(K-) = lk(L0)``.

The reduced Burau matrices are::

    s1 -> [[-t, 1], [0, 1]]      s2 -> [[1, 0], [t, -t]]

and ``det(I - B(w)) = (1 + t + t^2) * Delta(t)`` up to a unit ``±t^k``,
which ``symmetrize_normalize`` removes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classes import classify
from .laurent import (
    ONE,
    ZERO,
    ConwayPoly,
    LaurentPoly,
    Mat2,
    NonExactDivision,
    conway_from_alexander,
    symmetrize_normalize,
)
from .words import (
    BraidWord,
    ExpandedLetter,
    bennequin_genus,
    closure_info,
    expand_letters,
    format_word,
    to_artin,
)

_T = LaurentPoly((1,), 1)
_T_INV = LaurentPoly((1,), -1)
_CYCLOTOMIC3 = LaurentPoly((1, 1, 1))

_GEN = {
    (1, 1): Mat2(-_T, ONE, ZERO, ONE),
    (1, -1): Mat2(-_T_INV, _T_INV, ZERO, ONE),
    (2, 1): Mat2(ONE, ZERO, _T, -_T),
    (2, -1): Mat2(ONE, ZERO, ONE, -_T_INV),
}


class NotAKnotError(ValueError):
    def __init__(self, word: BraidWord, component_count: int):
        super().__init__(f"closure of {format_word(word) or '<empty>'} has {component_count} components, expected a knot")
        self.word = word
        self.component_count = component_count


class ComponentCountError(ValueError):
    def __init__(self, word: BraidWord, component_count: int, expected: int):
        super().__init__(
            f"closure of {format_word(word) or '<empty>'} has {component_count} components, expected {expected}"
        )
        self.word = word
        self.component_count = component_count


class InvariantMismatch(AssertionError):
    """Two independent routes to the same invariant disagreed."""


@lru_cache(maxsize=None)
def _syllable_matrix(gen: int, power: int) -> Mat2:
    base = _GEN[(gen, 1 if power > 0 else -1)]
    return base ** abs(power)


def burau(w: BraidWord) -> Mat2:
    """Reduced Burau matrix of ``w``; ``a3`` goes through its Artin expansion."""
    m = Mat2.identity()
    for s, p in to_artin(w).syllables:
        m = m * _syllable_matrix(s, p)
    return m


def same_braid(u: BraidWord, v: BraidWord) -> bool:
    """Equality in B3 (the Burau representation of B3 is faithful)."""
    return burau(u) == burau(v)


def alexander_unnormalized(w: BraidWord) -> LaurentPoly:
    """``det(I - B(w)) / (1 + t + t^2)`` with no unit removed; defined for links too."""
    m = burau(w)
    f = (ONE - m.a) * (ONE - m.d) - m.b * m.c
    try:
        return f.divide_exact(_CYCLOTOMIC3)
    except NonExactDivision as exc:
        raise NonExactDivision(f"Burau determinant of {w} not divisible by 1+t+t^2: {f}") from exc


def _require_knot(w: BraidWord) -> None:
    info = closure_info(w)
    if info.component_count != 1:
        raise NotAKnotError(w, info.component_count)


def alexander(w: BraidWord) -> LaurentPoly:
    """Normalized Alexander polynomial of the closure: ``D(1) = 1``, ``D(1/t) = D(t)``."""
    _require_knot(w)
    return symmetrize_normalize(alexander_unnormalized(w))


def conway(w: BraidWord) -> ConwayPoly:
    return conway_from_alexander(alexander(w))


def casson_from_alexander(delta: LaurentPoly) -> int:
    twice = delta.second_derivative_at_one()
    if twice % 2:
        raise InvariantMismatch(f"second derivative of {delta} at 1 is odd")
    via_derivative = twice // 2
    via_conway = conway_from_alexander(delta).coefficient(2)
    if via_derivative != via_conway:
        raise InvariantMismatch(
            f"Casson routes disagree for {delta}: {via_derivative} vs {via_conway}"
        )
    return via_derivative


def casson(w: BraidWord) -> int:
    """Casson invariant of the closure knot, ``D''(1) / 2``, checked against ``x^2`` of Conway."""
    return casson_from_alexander(alexander(w))


def surgery_casson(w: BraidWord, n: int) -> int:
    """Casson invariant of the ``1/n`` surgery on the closure."""
    return n * casson(w)


# -- linking numbers -----------------------------------------------------------


@dataclass(frozen=True)
class CrossingSite:
    letter_index: int
    positions: tuple[int, int]  # 1-based strand positions, (1, 2) or (2, 3)
    exponent_sign: int


def crossing_sites(w: BraidWord) -> list[CrossingSite]:
    return [
        CrossingSite(i, (x.generator, x.generator + 1), x.sign)
        for i, x in enumerate(expand_letters(w))
    ]


def _strand_trace(letters: tuple[ExpandedLetter, ...]):
    """Yield ``(letter, left_strand, right_strand)``; strands named by top position 0..2."""
    at = [0, 1, 2]
    for x in letters:
        i = x.generator - 1
        yield x, at[i], at[i + 1]
        at[i], at[i + 1] = at[i + 1], at[i]


def _require_two_components(w: BraidWord):
    info = closure_info(w)
    if info.component_count != 2:
        raise ComponentCountError(w, info.component_count, 2)
    return info


def linking_number(w: BraidWord) -> int:
    """Linking number of a 2-component closure as half the signed inter-component count."""
    info = _require_two_components(w)
    comp = info.strand_component
    total = 0
    for x, left, right in _strand_trace(expand_letters(w)):
        if comp[left] != comp[right]:
            total += x.sign
    if total % 2:
        raise InvariantMismatch(f"odd inter-component crossing sum {total} for {w}")
    return -total // 2


OVER_CONVENTIONS = ("left", "right")


def portion_contribution(
    w: BraidWord,
    start: int = 0,
    stop: int | None = None,
    first_component: int = 1,
    over_convention: str = "left",
) -> int:
    """One-sided linking count over expanded crossings ``start <= i < stop``.

    Counts crossings where the ``first_component`` strand passes under the
    other component. ``over_convention="left"`` means the left-position strand
    of a positive letter is the over strand (the right one for a negative
    letter); ``"right"`` is the opposite drawing. A positive letter counts -1,
    a negative one +1. Summed over the whole word this is the linking number
    for either labeling and either convention.
    """
    if over_convention not in OVER_CONVENTIONS:
        raise ValueError(f"over_convention must be one of {OVER_CONVENTIONS}")
    info = _require_two_components(w)
    comp = info.strand_component
    if first_component not in (1, 2):
        raise ValueError("first_component must be 1 or 2")
    letters = expand_letters(w)
    stop = len(letters) if stop is None else stop
    if not 0 <= start <= stop <= len(letters):
        raise IndexError(f"range [{start}, {stop}) outside 0..{len(letters)}")
    total = 0
    for i, (x, left, right) in enumerate(_strand_trace(letters)):
        if not start <= i < stop:
            continue
        left_over = (x.sign > 0) == (over_convention == "left")
        over, under = (left, right) if left_over else (right, left)
        if comp[under] == first_component and comp[over] != first_component:
            total -= x.sign
    return total


# -- crossing changes ------------------------------------------------------------


def _edit_site(w: BraidWord, index: int, smooth: bool) -> BraidWord:
    letters = expand_letters(w)
    if not 0 <= index < len(letters):
        raise IndexError(f"crossing index {index} outside 0..{len(letters) - 1}")
    target = letters[index]
    first = next(i for i, x in enumerate(letters) if x.syllable == target.syllable)
    offset = index - first
    sub, power = w.syllables[target.syllable]
    sign = 1 if power > 0 else -1

    if target.role == "plain" or target.role == "mid":
        # letter inside a run of one generator: a3 runs stay in a3 since
        # a1^-1 a2^x a1 = a3^x for every x
        before = offset - (1 if target.role == "mid" else 0)
        after = abs(power) - before - 1
        middle = [] if smooth else [(sub, -sign)]
        new_syl = [(sub, sign * before)] + middle + [(sub, sign * after)]
    else:
        expansion = [(1, -1), (2, power), (1, 1)]
        k = 0 if target.role == "pre" else 2
        s, p = expansion[k]
        expansion[k] = (s, 0 if smooth else -p)
        new_syl = expansion
    syl = list(w.syllables)
    return BraidWord(syl[: target.syllable] + new_syl + syl[target.syllable + 1 :])


def flip_crossing(w: BraidWord, site: CrossingSite | int) -> BraidWord:
    """Invert the exponent of one crossing of the canonical projection."""
    index = site.letter_index if isinstance(site, CrossingSite) else site
    return _edit_site(w, index, smooth=False)


def smooth_crossing(w: BraidWord, site: CrossingSite | int) -> BraidWord:
    """Delete one crossing of the canonical projection (oriented smoothing)."""
    index = site.letter_index if isinstance(site, CrossingSite) else site
    return _edit_site(w, index, smooth=True)


@dataclass(frozen=True)
class SkeinTriple:
    original: BraidWord
    flipped: BraidWord
    smoothed: BraidWord


def skein_triple(w: BraidWord, site: CrossingSite | int) -> SkeinTriple:
    return SkeinTriple(w, flip_crossing(w, site), smooth_crossing(w, site))


@dataclass(frozen=True)
class SkeinCheck:
    k_plus: BraidWord
    k_minus: BraidWord
    smoothed: BraidWord
    c_plus: int
    c_minus: int
    lk0: int

    @property
    def holds(self) -> bool:
        return self.c_plus - self.c_minus == self.lk0


def skein_check(w: BraidWord, site: CrossingSite | int) -> SkeinCheck:
    """Evaluate both sides of ``C(K+) - C(K-) = lk(L0)`` at one crossing."""
    _require_knot(w)
    index = site.letter_index if isinstance(site, CrossingSite) else site
    triple = skein_triple(w, index)
    sign = expand_letters(w)[index].sign
    if sign < 0:
        k_plus, k_minus = triple.original, triple.flipped
    else:
        k_plus, k_minus = triple.flipped, triple.original
    return SkeinCheck(
        k_plus=k_plus,
        k_minus=k_minus,
        smoothed=triple.smoothed,
        c_plus=casson(k_plus),
        c_minus=casson(k_minus),
        lk0=linking_number(triple.smoothed),
    )


# -- report ------------------------------------------------------------------------


def invariant_report(w: BraidWord, surgery_range: int = 5) -> dict:
    """JSON-ready invariant record for one word."""
    info = closure_info(w)
    report: dict = {
        "word": format_word(w),
        "letters": len(w),
        "components": info.component_count,
        "permutation": str(info.permutation),
        "genus": bennequin_genus(w),
        "classes": classify(w).as_dict(),
    }
    if info.component_count == 1:
        delta = alexander(w)
        c = casson_from_alexander(delta)
        report.update(
            delta=str(delta),
            delta_normalized=True,
            nabla=str(conway_from_alexander(delta)),
            casson=c,
            surgery_casson={str(n): n * c for n in range(-surgery_range, surgery_range + 1)},
            alexander_half_span=delta.span() // 2,
        )
    else:
        report.update(
            delta=str(alexander_unnormalized(w)),
            delta_normalized=False,
            nabla=None,
            casson=None,
            surgery_casson=None,
        )
        if info.component_count == 2:
            report["linking_number"] = linking_number(w)
    return report
