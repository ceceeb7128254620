"""Independent reference computations for the test suite.

Nothing here imports ``braid3``. The Conway polynomial of a closed 3-braid is
computed as a trace on the Hecke algebra H3 with basis ``T_w`` (w in S3) and
relation ``g^2 = z g + 1``, which encodes the skein relation
``N(L+) - N(L-) = z N(L0)`` for standard positive crossings. Polynomials in
``z`` are plain ``{power: coefficient}`` dicts; sympy is used only to pass
from Conway to Alexander.
"""

from __future__ import annotations

import re
from collections import defaultdict

import sympy

Perm = tuple[int, int, int]

IDENTITY: Perm = (0, 1, 2)
S = {1: (1, 0, 2), 2: (0, 2, 1)}

# closure values of the basis elements; id and the two transpositions close
# to split links, s1 s2 and s2 s1 to the unknot, s1 s2 s1 to a Hopf link
_TRACE = {
    (0, 1, 2): {},
    (1, 0, 2): {},
    (0, 2, 1): {},
    (1, 2, 0): {0: 1},
    (2, 0, 1): {0: 1},
    (2, 1, 0): {1: 1},
}


def _times(p: Perm, q: Perm) -> Perm:
    # act by p first, then q, as positions of a word read left to right
    return tuple(p[q[i]] for i in range(3))


def _length(p: Perm) -> int:
    return sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])


def _padd(a: dict, b: dict, scale: int = 1, zshift: int = 0) -> None:
    for k, v in b.items():
        a[k + zshift] = a.get(k + zshift, 0) + scale * v
        if a[k + zshift] == 0:
            del a[k + zshift]


def _right_mult(elem: dict[Perm, dict], i: int) -> dict[Perm, dict]:
    """``elem * g_i``."""
    out: dict[Perm, dict] = defaultdict(dict)
    s = S[i]
    for w, coeff in elem.items():
        ws = _times(w, s)
        if _length(ws) > _length(w):
            _padd(out[ws], coeff)
        else:
            _padd(out[w], coeff, zshift=1)
            _padd(out[ws], coeff)
    return {w: c for w, c in out.items() if c}


def _right_mult_inverse(elem: dict[Perm, dict], i: int) -> dict[Perm, dict]:
    """``elem * g_i^-1 = elem * g_i - z elem``."""
    out = {w: dict(c) for w, c in _right_mult(elem, i).items()}
    for w, c in elem.items():
        out.setdefault(w, {})
        _padd(out[w], c, scale=-1, zshift=1)
    return {w: c for w, c in out.items() if c}


def conway_of_artin(letters: list[int]) -> dict[int, int]:
    """Conway polynomial of the closure of an Artin word with standard crossing signs.

    ``letters`` holds +-1, +-2 for s1^+-1, s2^+-1.
    """
    elem: dict[Perm, dict] = {IDENTITY: {0: 1}}
    for x in letters:
        elem = _right_mult(elem, x) if x > 0 else _right_mult_inverse(elem, -x)
    total: dict[int, int] = {}
    for w, coeff in elem.items():
        tr = _TRACE[w]
        for a, u in coeff.items():
            for b, v in tr.items():
                total[a + b] = total.get(a + b, 0) + u * v
    return {k: v for k, v in sorted(total.items()) if v}


_TOKEN = re.compile(r"a([123])(?:\^(-?\d+))?")


def band_to_artin(text: str) -> list[int]:
    """Expand a band word; ``a3 = s1^-1 s2 s1``."""
    out: list[int] = []
    for sub, power in _TOKEN.findall(text):
        k = int(power) if power else 1
        sign = 1 if k > 0 else -1
        if sub == "3":
            out += [-1] + [2 * sign] * abs(k) + [1]
        else:
            out += [int(sub) * sign] * abs(k)
    return out


def mirror(letters: list[int]) -> list[int]:
    return [-x for x in letters]


def conway_of_band_word(text: str) -> dict[int, int]:
    """Conway polynomial in the crossing convention where a positive letter is
    a negative crossing (the mirror of the standard reading)."""
    return conway_of_artin(mirror(band_to_artin(text)))


def components(text: str) -> int:
    perm = list(IDENTITY)
    for x in band_to_artin(text):
        i = abs(x) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen, count = set(), 0
    for start in range(3):
        if start in seen:
            continue
        count += 1
        j = start
        while j not in seen:
            seen.add(j)
            j = perm[j]
    return count


def alexander_from_conway(nabla: dict[int, int]) -> dict[int, int]:
    """Substitute ``z^2 = t - 2 + t^-1`` into an even Conway polynomial;
    returns ``{t-exponent: coefficient}``."""
    if any(k % 2 for k in nabla):
        raise ValueError("odd powers of z: not a knot")
    t = sympy.Symbol("t")
    shift = max(nabla, default=0) // 2
    expr = sympy.expand(sum(c * (t - 2 + 1 / t) ** (k // 2) for k, c in nabla.items()) * t**shift)
    poly = sympy.Poly(expr, t)
    return {e - shift: int(c) for (e,), c in sorted(poly.terms()) if c}


def casson_oracle(text: str) -> int:
    return conway_of_band_word(text).get(2, 0)


def linking_oracle(text: str) -> int:
    """Linking number of a 2-component closure, positive letters counting negative."""
    return conway_of_band_word(text).get(1, 0)
