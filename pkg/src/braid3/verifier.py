"""Desk-scale reproduction of the computational claims about 3-braid closures.

Every campaign returns a :class:`CampaignResult`; a campaign passes when its
failure list is empty. Failures are sorted shortlex so the smallest failing
word comes first.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Sequence

from .classes import EXCLUDED, classify, enumerate_words, in_excluded, split_pa
from .invariants import (
    alexander,
    alexander_unnormalized,
    burau,
    casson,
    casson_from_alexander,
    conway,
    flip_crossing,
    linking_number,
    same_braid,
    skein_check,
    smooth_crossing,
)
from .laurent import ONE, LaurentPoly, Mat2, conway_from_alexander, symmetrize_normalize
from .search import canonical_representative, is_conjugate_within
from .words import (
    BraidWord,
    bennequin_genus,
    closure_info,
    conjugate,
    cyclic_reduce,
    cyclic_rotate,
    expand_letters,
    format_word,
    parse_word,
)

DEFAULT_PA_LETTERS = 12
DEFAULT_POSITIVE_LETTERS = 14
DEFAULT_N_MAX = 10
DEFAULT_P_MAX = 4


@dataclass
class CampaignResult:
    claim_id: str
    instances_checked: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, word: BraidWord | str, expected, got) -> None:
        text = word if isinstance(word, str) else format_word(word)
        self.failures.append((text, str(expected), str(got)))

    def as_dict(self, timings: bool = False) -> dict:
        out = {
            "claim_id": self.claim_id,
            "passed": self.passed,
            "instances_checked": self.instances_checked,
            "failures": [
                {"word": w, "expected": e, "got": g} for w, e, g in self.failures
            ],
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.as_dict(timings), sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.claim_id}: {self.instances_checked} checked, {len(self.failures)} failed ({self.elapsed:.2f}s)"
        if self.failures:
            w, e, g = self.failures[0]
            line += f"; first: {w or '<empty>'} expected {e} got {g}"
        return line


def _shortlex(entry: tuple[str, str, str]):
    w = parse_word(entry[0]) if entry[0] else BraidWord()
    return len(w), w.syllables, entry


class _Timer:
    def __init__(self, result: CampaignResult):
        self.result = result

    def __enter__(self):
        self.start = time.perf_counter()
        return self.result

    def __exit__(self, *exc):
        self.result.elapsed = time.perf_counter() - self.start
        self.result.failures.sort(key=_shortlex)
        return False


# -- generic word campaigns ----------------------------------------------------

# A check maps a word to None (not an instance), True (instance, passed) or
# (expected, got) (instance, failed).
Check = Callable[[BraidWord], "None | bool | tuple"]


def _apply_chunk(check: Check, chunk: Sequence[BraidWord]) -> list:
    return [check(w) for w in chunk]


def _chunks(words: Iterable[BraidWord], size: int):
    chunk: list[BraidWord] = []
    for w in words:
        chunk.append(w)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def run_word_campaign(
    claim_id: str,
    words: Iterable[BraidWord],
    check: Check,
    workers: int = 1,
    chunk_size: int = 2000,
) -> CampaignResult:
    """Apply ``check`` to every word; with ``workers > 1`` chunks run in
    separate processes and results are merged in enumeration order."""
    result = CampaignResult(claim_id)
    with _Timer(result):
        if workers <= 1:
            outcomes = ((w, check(w)) for w in words)
        else:
            outcomes = _parallel(words, check, workers, chunk_size)
        for w, out in outcomes:
            if out is None:
                continue
            result.instances_checked += 1
            if out is not True:
                expected, got = out
                result.fail(w, expected, got)
    return result


def _parallel(words, check, workers, chunk_size):
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = list(_chunks(words, chunk_size))
        for chunk, outs in zip(chunks, pool.map(_apply_chunk, [check] * len(chunks), chunks)):
            yield from zip(chunk, outs)


# -- torus knots ---------------------------------------------------------------


def verify_torus_formula(n_max: int = DEFAULT_N_MAX) -> CampaignResult:
    """Casson invariant of T(3, n) = closure of (a1 a2)^n equals (n^2 - 1)/3."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    result = CampaignResult("torus-formula")
    with _Timer(result):
        for n in range(2, n_max + 1):
            if gcd(n, 3) != 1:
                continue
            w = parse_word("a1 a2") ** n
            expected = (n * n - 1) // 3
            got = casson(w)
            result.instances_checked += 1
            if got != expected:
                result.fail(w, expected, got)
    return result


# -- crossing-change chain -----------------------------------------------------------------------


def _tail(p: int) -> BraidWord:
    return parse_word("a3 a1 a2") ** (2 * p - 2)


def d4_words(p: int) -> dict[str, BraidWord]:
    """The braids beta, beta_1..beta_6 and lambda_1..lambda_6 for ``m = 2p``."""
    m = 2 * p
    tail = _tail(p)
    P = parse_word
    return {
        "beta": P("a1^-1 a2") * P("a3 a1 a2") ** m,
        "beta1": P("a1 a2") * P("a3 a1 a2") ** m,
        "beta1_expanded": P("a1 a2 a1^-1 a2 a1^2 a2 a1^-1 a2 a1^2 a2") * tail,
        "beta2": P("a1 a2 a1^-1 a2^2 a1^-1 a2 a1^2 a2") * tail,
        "beta3": P("a1 a2 a1^-2 a2 a1^2 a2") * tail,
        "beta4": P("a1 a2^2 a1^2 a2") * tail,
        "beta5": P("a1^3 a2") * tail,
        "beta6": P("a1 a2") * tail,
        "lambda1": P("a2") * P("a3 a1 a2") ** m,
        "lambda2": P("a1 a2 a1^-1 a2 a1 a2 a1^-1 a2 a1^2 a2") * tail,
        "lambda3": P("a1 a2 a1^-1 a2 a1^-1 a2 a1^2 a2") * tail,
        "lambda4": P("a1 a2 a1^-1 a2 a1^2 a2") * tail,
        "lambda5": P("a1 a2 a1^2 a2") * tail,
        "lambda6": P("a1^2 a2") * tail,
    }


def d4_linking_values(p: int) -> dict[str, int]:
    return {
        "lambda1": -p,
        "lambda2": -4 * p + 1,
        "lambda3": -p - 1,
        "lambda4": -p,
        "lambda5": -4 * (p - 1) - 2,
        "lambda6": -p,
    }


# (source word, crossing index, flipped word, smoothed word, C(source) - C(flipped))
def _d4_steps(p: int):
    w = d4_words(p)
    return [
        ("beta", 0, "beta1", "lambda1", -p),
        ("beta1_expanded", 4, "beta2", "lambda2", 4 * p - 1),
        ("beta2", 3, "beta3", "lambda3", p + 1),
        ("beta3", 2, "beta4", "lambda4", -p),
        ("beta4", 1, "beta5", "lambda5", 4 * (p - 1) + 2),
        ("beta5", 0, "beta6", "lambda6", p),
    ], w


def verify_claim_d4(p_max: int = DEFAULT_P_MAX) -> CampaignResult:
    """Linking values of the six smoothed links, each crossing-change step,
    and the telescoped identity ``C(beta1) = C(beta6) + 9p - 2``."""
    if p_max < 1:
        raise ValueError("p_max must be at least 1")
    result = CampaignResult("crossing-chain")

    def check(label: str, word: BraidWord, expected, got):
        result.instances_checked += 1
        if expected != got:
            result.fail(word, f"{label}={expected}", got)

    with _Timer(result):
        for p in range(1, p_max + 1):
            steps, w = _d4_steps(p)
            for name, value in d4_linking_values(p).items():
                check(f"p={p} lk({name})", w[name], value, linking_number(w[name]))
            check(f"p={p} beta1 rewrite", w["beta1_expanded"], True,
                  same_braid(w["beta1"], w["beta1_expanded"]))
            c = {k: casson(v) for k, v in w.items() if k.startswith("beta")}
            for src, site, flipped, smoothed, gap in steps:
                check(f"p={p} flip({src},{site})", w[src], format_word(w[flipped]),
                      format_word(flip_crossing(w[src], site)))
                check(f"p={p} smooth({src},{site})", w[src], format_word(w[smoothed]),
                      format_word(smooth_crossing(w[src], site)))
                sk = skein_check(w[src], site)
                check(f"p={p} skein({src},{site})", w[src], True, sk.holds)
                check(f"p={p} C({src})-C({flipped})", w[src], gap, c[src] - c[flipped])
            check(f"p={p} C(beta1)-C(beta6)", w["beta1"], 9 * p - 2, c["beta1"] - c["beta6"])
            check(f"p={p} C(beta)-C(beta1)", w["beta"], -p, c["beta"] - c["beta1"])
    return result


# -- linking-number signs -----------------------------------------------------


def _check_lk0(w: BraidWord):
    if w.subscripts_used() != {1, 2} or closure_info(w).component_count != 2:
        return None
    lk = linking_number(w)
    return True if lk < 0 else ("lk<0", lk)


def _pa_delta(w: BraidWord) -> tuple[int, BraidWord]:
    q, _, delta = split_pa(w)
    return q, delta


def _check_lk(w: BraidWord):
    q, delta = _pa_delta(w)
    if q != 1 or delta.a3_syllable_count or closure_info(w).component_count != 2:
        return None
    lk = linking_number(w)
    return True if lk < 0 else ("lk<0", lk)


def _check_lk1(w: BraidWord):
    if closure_info(w).component_count != 2:
        return None
    lk = linking_number(w)
    return True if lk <= 0 else ("lk<=0", lk)


def verify_lemma_lk0(max_letters: int = DEFAULT_PA_LETTERS, workers: int = 1) -> CampaignResult:
    """Positive words in a1, a2 using both letters with 2-component closure have lk < 0."""
    return run_word_campaign("lk-artin-positive", enumerate_words("positive-artin", max_letters), _check_lk0, workers)


def verify_lemma_lk(max_letters: int = DEFAULT_PA_LETTERS, workers: int = 1) -> CampaignResult:
    """Pa words a_i^-1 delta, delta free of a3 with >= 4 syllables, 2-component closure: lk < 0."""
    return run_word_campaign("lk-pa-strict", enumerate_words("Pa4", max_letters), _check_lk, workers)


def verify_lemma_lk1(max_letters: int = DEFAULT_PA_LETTERS, workers: int = 1) -> CampaignResult:
    """Pa words with delta of >= 4 syllables and 2-component closure: lk <= 0."""
    return run_word_campaign("lk-pa-nonpositive", enumerate_words("Pa4", max_letters), _check_lk1, workers)


def verify_linking_lemmas(max_letters: int = DEFAULT_PA_LETTERS, workers: int = 1) -> CampaignResult:
    """The three linking-sign campaigns merged into one result (claim ids prefix each failure)."""
    if max_letters < 5:
        raise ValueError("max_letters must be at least 5")
    parts = [
        verify_lemma_lk0(max_letters, workers),
        verify_lemma_lk(max_letters, workers),
        verify_lemma_lk1(max_letters, workers),
    ]
    merged = CampaignResult("linking-signs")
    for part in parts:
        merged.instances_checked += part.instances_checked
        merged.elapsed += part.elapsed
        for w, e, g in part.failures:
            merged.failures.append((w, f"{part.claim_id}: {e}", g))
    merged.failures.sort(key=_shortlex)
    return merged


# -- Casson positivity --------------------------------------------------------------


def _check_pa_casson(w: BraidWord):
    if closure_info(w).component_count != 1 or in_excluded(w):
        return None
    c = casson(w)
    return True if c > 0 else ("casson>0", c)


def verify_prop3(max_letters: int = DEFAULT_PA_LETTERS, workers: int = 1) -> CampaignResult:
    """Pa knots with delta of >= 4 syllables outside E have positive Casson invariant."""
    if max_letters < 5:
        raise ValueError("max_letters must be at least 5")
    return run_word_campaign("pa-casson-positive", enumerate_words("Pa4", max_letters), _check_pa_casson, workers)


def _check_positive_knot(w: BraidWord):
    if closure_info(w).component_count != 1:
        return None
    delta = alexander(w)
    if delta == LaurentPoly((1,)):
        return None
    c = casson(w)
    return True if c > 0 else ("casson>0", c)


def verify_positive_knots(max_letters: int = DEFAULT_POSITIVE_LETTERS, workers: int = 1) -> CampaignResult:
    """Nontrivial closures of positive words in a1, a2 have positive Casson invariant."""
    return run_word_campaign(
        "positive-knots", enumerate_words("positive-artin", max_letters), _check_positive_knot, workers
    )


# -- excluded set ------------------------------------------------------------------

E_REPORT_SCHEMA = {
    "type": "object",
    "required": ["count", "all_knots", "all_in_Pa", "words"],
    "properties": {
        "count": {"type": "integer"},
        "all_knots": {"type": "boolean"},
        "all_in_Pa": {"type": "boolean"},
        "words": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["word", "components", "in_Pa", "in_E", "delta", "nabla", "casson", "genus"],
                "properties": {
                    "word": {"type": "string"},
                    "components": {"type": "integer"},
                    "in_Pa": {"type": "boolean"},
                    "in_E": {"type": "boolean"},
                    "delta": {"type": "string"},
                    "nabla": {"type": "string"},
                    "casson": {"type": "integer"},
                    "genus": {"type": "integer"},
                },
            },
        },
    },
}


def report_excluded_E() -> tuple[dict, CampaignResult]:
    """Invariants of the twelve excluded words; no sign is asserted for Casson."""
    result = CampaignResult("excluded-set")
    rows = []
    with _Timer(result):
        for w in EXCLUDED:
            info = closure_info(w)
            cls = classify(w)
            result.instances_checked += 1
            if info.component_count != 1:
                result.fail(w, "knot", f"{info.component_count} components")
                continue
            if not (cls.in_Pa and cls.in_E):
                result.fail(w, "in Pa and E", f"Pa={cls.in_Pa} E={cls.in_E}")
            rows.append(
                {
                    "word": format_word(w),
                    "components": info.component_count,
                    "in_Pa": cls.in_Pa,
                    "in_E": cls.in_E,
                    "delta": str(alexander(w)),
                    "nabla": str(conway(w)),
                    "casson": casson(w),
                    "genus": bennequin_genus(w),
                }
            )
        if len(EXCLUDED) != 12:
            result.fail("", "12 words", len(EXCLUDED))
    report = {
        "count": len(rows),
        "all_knots": all(r["components"] == 1 for r in rows),
        "all_in_Pa": all(r["in_Pa"] for r in rows),
        "words": rows,
    }
    return report, result


# -- rewrite / conjugacy spot checks --------------------------------------------------


def _raw_alexander_up_to_unit(w: BraidWord) -> LaurentPoly:
    f = alexander_unnormalized(w)
    if f.is_zero():
        return f
    f = f.shift(-f.low)
    return f if f.coeffs[-1] > 0 else -f


def conjugate_by_search(u: BraidWord, v: BraidWord, budget: int = 3000) -> tuple[bool, bool]:
    """Look for ``v`` among conjugates of ``u`` within ``budget``; failing that,
    compare the two canonical representatives. Returns ``(found, exhausted)``."""
    found, exhausted = is_conjugate_within(u, v, budget)
    if found:
        return True, exhausted
    ru = canonical_representative(u, budget)
    rv = canonical_representative(v, budget)
    return ru.word == rv.word, exhausted or ru.exhausted or rv.exhausted


def spot_pairs() -> list[tuple[str, BraidWord, BraidWord, str]]:
    """Rewrite pairs used in proofs: ``(label, source, target, relation)`` with
    relation ``equal`` (same braid) or ``conjugate``."""
    P = parse_word
    pairs = [
        ("D1 j=k=m=1", P("a1^-1 a2 a1 a2 a3^2"), P("a1^-1 a2^3 a1 a2"), "conjugate"),
        ("D1 j=1 k=m=2", P("a1^-1 a2 a1^2 a2^2 a3^2"), P("a1^-1 a2^3 a1^2 a2^2"), "conjugate"),
        ("D1 j=k=2 m=1", P("a1^-1 a2^2 a1^2 a2 a3^2"), P("a1^-1 a2^4 a1^2 a2"), "conjugate"),
        ("a3^2 a1^-1 = a1^-1 a2^2", P("a3^2 a1^-1"), P("a1^-1 a2^2"), "equal"),
        ("lk1 a3^-1 a2^k", P("a3^-1 a2^2 a1 a2 a1 a2"), P("a2 a1^-1 a2 a1 a2 a1 a2"), "equal"),
        ("lk1 a3^-1 a2^k conj", P("a3^-1 a2^2 a1 a2 a1 a2"), P("a1^-1 a2 a1 a2 a1 a2^2"), "conjugate"),
        ("lk1 trailing a3^j", P("a1^-1 a2 a1 a2 a3"), P("a1^-1 a2^2 a1 a2"), "conjugate"),
        ("lk1 a3^-1 a1 = a2 a3^-1", P("a3^-1 a1"), P("a2 a3^-1"), "equal"),
        ("a3 a1 a2 a1 = a2 a1^2 a2", P("a3 a1 a2 a1"), P("a2 a1^2 a2"), "equal"),
        ("(a3a1a2)^2 a3 conj", P("a3 a1 a2 a3 a1 a2 a3"), P("a3^2 a1 a2 a3 a1 a2"), "conjugate"),
        ("(a3a1a2)^2 a3 a1 conj", P("a3 a1 a2 a3 a1 a2 a3 a1"), P("a2 a1^3 a2 a3 a1 a2"), "conjugate"),
        ("a2 (a3a1a2)^2 conj", P("a2 a3 a1 a2 a3 a1 a2"), P("a3 a1 a2 a3 a1 a2^2"), "conjugate"),
    ]
    for w in EXCLUDED[:4]:
        pairs.append((f"rotate {format_word(w)}", w, cyclic_rotate(w, 1), "conjugate"))
    return pairs


def verify_e_set_conjugacy_checks(budget: int = 3000) -> CampaignResult:
    """Each proof rewrite preserves closure invariants and is realized as an
    equality (Burau) or a conjugacy found by bounded search."""
    result = CampaignResult("rewrite-spot-checks")
    with _Timer(result):
        for label, u, v, relation in spot_pairs():
            result.instances_checked += 1
            iu, iv = closure_info(u), closure_info(v)
            if iu.component_count != iv.component_count:
                result.fail(u, f"{label}: same component count", f"{iu.component_count} vs {iv.component_count}")
                continue
            if iu.component_count == 1:
                same = alexander(u) == alexander(v) and casson(u) == casson(v)
            else:
                same = _raw_alexander_up_to_unit(u) == _raw_alexander_up_to_unit(v)
                if iu.component_count == 2:
                    same = same and linking_number(u) == linking_number(v)
            if not same:
                result.fail(u, f"{label}: equal invariants", format_word(v))
            if relation == "equal":
                if not same_braid(u, v):
                    result.fail(u, f"{label}: equal braid", format_word(v))
            else:
                found, exhausted = conjugate_by_search(u, v, budget)
                if not found:
                    why = "budget exhausted" if exhausted else "not found"
                    result.fail(u, f"{label}: conjugate", why)
    return result


# -- randomized campaigns --------------------------------------------------------------


def random_word(rng: random.Random, max_letters: int) -> BraidWord:
    n = rng.randint(1, max_letters)
    return BraidWord.from_letters(rng.choice((1, 2, 3)) * rng.choice((1, -1)) for _ in range(n))


def random_knot_word(rng: random.Random, max_letters: int) -> BraidWord:
    while True:
        w = random_word(rng, max_letters)
        if w and closure_info(w).component_count == 1:
            return w


def skein_campaign(samples: int = 200, seed: int = 0, max_letters: int = 10) -> CampaignResult:
    """Seeded random crossing changes: ``C(K+) - C(K-) = lk(L0)`` exactly."""
    rng = random.Random(seed)
    result = CampaignResult("skein-identity")
    with _Timer(result):
        for _ in range(samples):
            w = random_knot_word(rng, max_letters)
            site = rng.randrange(len(expand_letters(w)))
            sk = skein_check(w, site)
            result.instances_checked += 1
            if not sk.holds:
                result.fail(w, f"site {site}: C+ - C- = {sk.lk0}", sk.c_plus - sk.c_minus)
    return result


def invariance_campaign(samples: int = 200, seed: int = 0, max_letters: int = 10) -> CampaignResult:
    """Alexander, Conway, Casson and linking number under conjugation and rotation."""
    rng = random.Random(seed)
    result = CampaignResult("conjugation-invariance")
    with _Timer(result):
        for _ in range(samples):
            w = random_word(rng, max_letters)
            g = random_word(rng, 4)
            k = rng.randrange(max(len(w), 1))
            variants = [conjugate(w, g), cyclic_rotate(w, k), cyclic_reduce(w)]
            comps = closure_info(w).component_count
            result.instances_checked += 1
            for v in variants:
                if closure_info(v).component_count != comps:
                    result.fail(w, "same components", format_word(v))
                elif comps == 1:
                    if (alexander(v), conway(v), casson(v)) != (alexander(w), conway(w), casson(w)):
                        result.fail(w, "same knot invariants", format_word(v))
                elif comps == 2 and linking_number(v) != linking_number(w):
                    result.fail(w, f"lk={linking_number(w)}", f"{format_word(v)}: {linking_number(v)}")
    return result


def verify_paper(
    max_letters: int = DEFAULT_PA_LETTERS,
    max_letters_positive: int = DEFAULT_POSITIVE_LETTERS,
    n_max: int = DEFAULT_N_MAX,
    p_max: int = DEFAULT_P_MAX,
    workers: int = 1,
) -> list[CampaignResult]:
    """Every verifier suite with the given bounds, in a fixed order."""
    _, e_result = report_excluded_E()
    return [
        verify_torus_formula(n_max),
        verify_claim_d4(p_max),
        verify_lemma_lk0(max_letters, workers),
        verify_lemma_lk(max_letters, workers),
        verify_lemma_lk1(max_letters, workers),
        verify_prop3(max_letters, workers),
        verify_positive_knots(max_letters_positive, workers),
        e_result,
        verify_e_set_conjugacy_checks(),
    ]


# -- normalization sweep ---------------------------------------------------------------


def _shift(t: tuple[int, ...]) -> tuple[int, ...]:
    # conjugation by a2 a1 sends a_i to a_(i+1)
    return tuple((abs(x) % 3 + 1) * (1 if x > 0 else -1) for x in t)


def _is_representative(t: tuple[int, ...]) -> bool:
    n = len(t)
    if t[0] == -t[-1]:
        return False
    u = t
    for k in range(3):
        if any(u[i:] + u[:i] < t for i in range(n)):
            return False
        u = _shift(u)
    return True


def _knot_sweep(max_letters: int):
    """``(letters, burau matrix)`` for one representative of every knot closure
    with at most ``max_letters`` band letters.

    Representatives are cyclically reduced and least among their rotations and
    subscript shifts. Rotation and the shift are both conjugations, which leave
    ``det(I - B)`` unchanged, and a word that is not cyclically reduced has the
    determinant of its cyclic reduction, so nothing is missed. The Burau
    product is carried down the search tree instead of recomputed per word.
    """
    mats = {x: burau(BraidWord.from_letters((x,))) for x in (-3, -2, -1, 1, 2, 3)}
    swaps = {x: ((0, 1) if abs(x) == 1 else (1, 2) if abs(x) == 2 else (0, 2)) for x in mats}

    def walk(prefix: list[int], m: Mat2, perm: tuple[int, int, int], n: int):
        if len(prefix) == n:
            t = tuple(prefix)
            if perm[0] != 0 and perm[1] != 1 and perm[2] != 2 and _is_representative(t):
                yield t, m
            return
        for x in (-3, -2, -1, 1, 2, 3):
            if prefix and (x == -prefix[-1] or x < prefix[0]):
                continue
            i, j = swaps[x]
            p = list(perm)
            p[i], p[j] = p[j], p[i]
            prefix.append(x)
            yield from walk(prefix, m * mats[x], tuple(p), n)
            prefix.pop()

    for n in range(2, max_letters + 1, 2):  # odd words close to links
        yield from walk([], Mat2.identity(), (0, 1, 2), n)


def verify_normalization(max_letters: int = 10) -> CampaignResult:
    """Every knot closure of at most ``max_letters`` band letters has a
    normalized Alexander polynomial, a Conway polynomial that maps back to it,
    and agreeing Casson computations."""
    result = CampaignResult("alexander-normalization")
    with _Timer(result):
        for t, m in _knot_sweep(max_letters):
            result.instances_checked += 1
            f = (ONE - m.a) * (ONE - m.d) - m.b * m.c
            try:
                delta = symmetrize_normalize(f.divide_exact(LaurentPoly((1, 1, 1))))
                casson_from_alexander(delta)
            except (ArithmeticError, ValueError, AssertionError) as exc:
                result.fail(BraidWord.from_letters(t), "normalized", f"{type(exc).__name__}: {exc}")
                continue
            if delta.eval_at_one() != 1 or not delta.is_symmetric():
                result.fail(BraidWord.from_letters(t), "D(1)=1 and symmetric", delta)
            elif conway_from_alexander(delta).to_alexander() != delta:
                result.fail(BraidWord.from_letters(t), "Conway round trip", delta)
    return result
