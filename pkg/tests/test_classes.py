from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braid3.classes import (
    CLASS_FILTERS,
    EXCLUDED,
    classify,
    enumerate_words,
    in_excluded,
    in_n,
    in_p,
    in_pa,
    member,
    normal_form,
    split_pa,
)
from braid3.words import BraidWord, closure_info, in_pstar, parse_word

P = parse_word


def all_words(max_letters: int):
    """Every freely reduced word up to ``max_letters`` letters, by brute force."""
    seen = set()
    for n in range(1, max_letters + 1):
        for letters in itertools.product((1, 2, 3, -1, -2, -3), repeat=n):
            w = BraidWord.from_letters(letters)
            if len(w) == n and w not in seen:
                seen.add(w)
                yield w


def subscripts(w):
    return [s for s, _ in w.syllables]


# direct readings of the class definitions, letter by letter
def brute_p(w):
    subs = subscripts(w)
    return w.is_positive() and all(b - a in (1, -2) for a, b in zip(subs, subs[1:]))


def brute_n(w):
    subs = subscripts(w)
    return w.is_negative() and all(a - b in (1, -2) for a, b in zip(subs, subs[1:]))


def brute_pa(w):
    syl = w.syllables
    if syl and syl[0][1] == -1:
        q, delta = 1, BraidWord(syl[1:])
    else:
        q, delta = 0, w
    if not delta or not delta.is_positive() or not in_pstar(delta):
        return False
    ds = delta.syllables
    for i, (s, _) in enumerate(ds):
        if s == 3 and ((i > 0 and ds[i - 1][0] == 1) or (i + 1 < len(ds) and ds[i + 1][0] == 2)):
            return False
    letters = w.letters()
    return letters[0] != -letters[-1]


BRUTE = {
    "all": lambda w: True,
    "P": brute_p,
    "N": brute_n,
    "Pstar": in_pstar,
    "Pa": brute_pa,
    "Pa4": lambda w: brute_pa(w) and w.syllable_count - (1 if w.syllables[0][1] < 0 else 0) >= 4,
    "positive-artin": lambda w: w.is_positive() and 3 not in subscripts(w),
}

SMALL = list(all_words(5))


def test_enumerate_examples():
    assert [str(w) for w in enumerate_words("P", 2)] == [
        "a1", "a2", "a3", "a1 a2", "a1^2", "a2 a3", "a2^2", "a3 a1", "a3^2",
    ]
    assert [str(w) for w in enumerate_words("Pa", 1)] == ["a1", "a2", "a3"]
    assert list(enumerate_words("all", 0)) == []
    with pytest.raises(ValueError):
        list(enumerate_words("bogus", 3))


@pytest.mark.parametrize("class_filter", CLASS_FILTERS)
def test_enumeration_matches_brute_force(class_filter):
    got = list(enumerate_words(class_filter, 5))
    assert len(got) == len(set(got))
    expected = {w for w in SMALL if BRUTE[class_filter](w)}
    assert set(got) == expected
    assert all(member(class_filter, w) for w in got)
    assert sum(member(class_filter, w) for w in SMALL) == len(expected)


@pytest.mark.parametrize("class_filter", CLASS_FILTERS)
def test_enumeration_order_and_monotone(class_filter):
    got = list(enumerate_words(class_filter, 6))
    keys = [(len(w), w.syllables) for w in got]
    assert keys == sorted(keys)
    shorter = list(enumerate_words(class_filter, 5))
    assert got[: len(shorter)] == shorter


def test_classify_examples():
    r = classify(P("a1 a2 a3 a1"))
    assert r.in_P and r.in_Pstar
    r = classify(P("a1^-1 a2 a3^2 a1 a2"))
    assert r.in_Pa and r.in_E and r.s_count == 5 and r.n3_count == 1
    assert not classify(P("a3 a1 a3")).in_Pstar


def test_excluded_words():
    assert len(EXCLUDED) == 12 and len(set(EXCLUDED)) == 12
    for w in EXCLUDED:
        assert in_pa(w) and in_excluded(w)
        assert closure_info(w).component_count == 1


def test_split_pa():
    assert split_pa(P("a3^-1 a1 a2")) == (1, 3, P("a1 a2"))
    assert split_pa(P("a1 a2")) == (0, 0, P("a1 a2"))
    assert split_pa(P("a1^-2 a2")) is None
    assert split_pa(BraidWord()) is None


def test_normal_forms():
    alpha = P("a2 a1")
    assert normal_form(alpha ** 2 * P("a3 a1 a2")) == ("I", 2)
    assert normal_form(P("a1^-1 a2^-1 a1^-1 a3^-2")) == ("II", -1)
    assert normal_form(P("a1 a2 a3^-1 a2^-1")) == ("III", 0)
    assert normal_form(P("a1 a2^-1 a1 a2^-1")) is None


@given(st.sampled_from(SMALL))
def test_class_report_invariants(w):
    r = classify(w)
    assert not r.in_P or r.in_Pstar
    assert not r.in_E or r.in_Pa
    assert r.n3_count <= r.s_count
    assert r.in_P == in_p(w) and r.in_N == in_n(w)
    assert set(r.as_dict()) == {
        "P", "N", "Pstar", "index3_reduced", "Pa", "E", "normal_form", "syllables", "a3_syllables",
    }


def test_every_p_word_is_in_pstar():
    assert all(in_pstar(w) for w in enumerate_words("P", 8))
