"""Exact integer Laurent polynomials in ``t``, Conway polynomials in ``x``,
and 2x2 matrices over the Laurent ring.

Coefficients are Python ints, so nothing overflows. A polynomial is stored as
``(low, coeffs)`` meaning ``sum(c * t**(low + i) for i, c in enumerate(coeffs))``
with nonzero first and last coefficient; the zero polynomial has empty
``coeffs`` and ``low == 0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping


class NonExactDivision(ArithmeticError):
    """Raised when a Laurent polynomial division leaves a remainder."""


class NormalizationError(ValueError):
    """Raised when a polynomial cannot be brought to normalized Alexander form."""


def _trim(low: int, coeffs: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    cs = list(coeffs)
    start = 0
    while start < len(cs) and cs[start] == 0:
        start += 1
    if start == len(cs):
        return 0, ()
    end = len(cs)
    while cs[end - 1] == 0:
        end -= 1
    return low + start, tuple(cs[start:end])


@dataclass(frozen=True, init=False)
class LaurentPoly:
    low: int
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        low, cs = _trim(low, coeffs)
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> LaurentPoly:
        """Build from an ``{exponent: coefficient}`` mapping."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> LaurentPoly:
        return cls((c,), exponent)

    # -- structure -----------------------------------------------------------

    @property
    def high(self) -> int:
        """Largest exponent with nonzero coefficient (``low - 1`` for zero)."""
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def coefficient(self, exponent: int) -> int:
        i = exponent - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def span(self) -> int:
        """Difference between the highest and lowest exponent."""
        return len(self.coeffs) - 1 if self.coeffs else 0

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self.coeffs) != 1 or abs(self.coeffs[0]) != 1:
                raise ValueError("only units can be raised to negative powers")
            return LaurentPoly((self.coeffs[0] ** n,), self.low * n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.low + k)

    def divide_exact(self, divisor: LaurentPoly) -> LaurentPoly:
        """Return ``q`` with ``q * divisor == self``; raise if the division is not exact."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        rem = list(self.coeffs)
        d = divisor.coeffs
        n = len(rem) - len(d) + 1
        if n <= 0:
            raise NonExactDivision(f"{self} is not divisible by {divisor}")
        lead = d[-1]
        quot = [0] * n
        for k in range(n - 1, -1, -1):
            top = rem[k + len(d) - 1]
            if top % lead:
                raise NonExactDivision(f"{self} is not divisible by {divisor}")
            q = top // lead
            quot[k] = q
            if q:
                for j, c in enumerate(d):
                    rem[k + j] -= q * c
        if any(rem):
            raise NonExactDivision(f"{self} is not divisible by {divisor}")
        return LaurentPoly(quot, self.low - divisor.low)

    # -- evaluation ----------------------------------------------------------

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def derivative_at_one(self) -> int:
        return sum(c * e for e, c in self.terms().items())

    def second_derivative_at_one(self) -> int:
        return sum(c * e * (e - 1) for e, c in self.terms().items())

    def invert_variable(self) -> LaurentPoly:
        """Substitute ``t -> 1/t``."""
        return LaurentPoly(self.coeffs[::-1], -self.high) if self.coeffs else self

    def is_symmetric(self) -> bool:
        return self == self.invert_variable()

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        return _render(self.terms(), "t")

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        return cls.from_terms(_parse_terms(text, "t"))


ZERO = LaurentPoly()
ONE = LaurentPoly((1,))
T = LaurentPoly((1,), 1)
T_INV = LaurentPoly((1,), -1)


def _coerce(value: LaurentPoly | int) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly((value,))
    return NotImplemented


def symmetrize_normalize(p: LaurentPoly) -> LaurentPoly:
    """Multiply ``p`` by the unit ``±t^k`` making it symmetric with value 1 at ``t = 1``."""
    value = p.eval_at_one()
    if value not in (1, -1):
        raise NormalizationError(f"{p} evaluates to {value} at t=1, expected ±1")
    # a symmetric polynomial is centred on exponent 0, so the shift is -(low+high)/2
    total = p.low + p.high
    if total % 2:
        raise NormalizationError(f"{p} has odd exponent span and cannot be symmetric")
    q = p.shift(-total // 2)
    if value == -1:
        q = -q
    if not q.is_symmetric():
        raise NormalizationError(f"{p} is not symmetric up to a unit")
    return q


# -- Conway polynomials ------------------------------------------------------


@dataclass(frozen=True, init=False)
class ConwayPoly:
    """Integer polynomial in ``x``; ``coeffs[i]`` is the coefficient of ``x**i``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def has_only_even_powers(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def to_alexander(self) -> LaurentPoly:
        """Substitute ``x**2 = t - 2 + 1/t``; only defined for even polynomials."""
        if not self.has_only_even_powers():
            raise ValueError("odd Conway polynomials have no Laurent image in t")
        z = LaurentPoly((1, -2, 1), -1)
        out = ZERO
        power = ONE
        for i in range(0, len(self.coeffs), 2):
            if self.coeffs[i]:
                out = out + power * self.coeffs[i]
            power = power * z
        return out

    def __str__(self) -> str:
        return _render({i: c for i, c in enumerate(self.coeffs) if c}, "x")

    def __repr__(self) -> str:
        return f"ConwayPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> ConwayPoly:
        terms = _parse_terms(text, "x")
        if any(e < 0 for e in terms):
            raise ValueError("Conway polynomials have no negative powers")
        top = max(terms, default=-1)
        return cls([terms.get(i, 0) for i in range(top + 1)])


def conway_from_alexander(p: LaurentPoly) -> ConwayPoly:
    """Express a symmetric Laurent polynomial as a polynomial in ``x**2 = t - 2 + 1/t``."""
    if not p.is_symmetric():
        raise NormalizationError(f"{p} is not symmetric, no Conway form")
    rest = p.terms()
    out: dict[int, int] = {}
    while rest:
        d = max(rest)
        c = rest[d]
        out[2 * d] = c
        # x^(2d) = sum_k (-1)^k C(2d, k) t^(d-k)
        for k in range(2 * d + 1):
            e = d - k
            rest[e] = rest.get(e, 0) - c * (-1) ** k * comb(2 * d, k)
            if rest[e] == 0:
                del rest[e]
    top = max(out, default=-1)
    return ConwayPoly([out.get(i, 0) for i in range(top + 1)])


# -- 2x2 matrices ------------------------------------------------------------


@dataclass(frozen=True)
class Mat2:
    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    @classmethod
    def identity(cls) -> Mat2:
        return cls(ONE, ZERO, ZERO, ONE)

    def __mul__(self, o: Mat2) -> Mat2:
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __sub__(self, o: Mat2) -> Mat2:
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c

    def trace(self) -> LaurentPoly:
        return self.a + self.d

    def __pow__(self, n: int) -> Mat2:
        if n < 0:
            raise ValueError("use an explicit inverse for negative powers")
        result, base = Mat2.identity(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


# -- text form ---------------------------------------------------------------


def _render(terms: Mapping[int, int], var: str) -> str:
    if not terms:
        return "0"
    parts: list[str] = []
    for e in sorted(terms):
        c = terms[e]
        if e == 0:
            body = str(abs(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def _parse_terms(text: str, var: str) -> dict[int, int]:
    term_re = re.compile(
        rf"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?(?:({var})(?:\^(-?\d+))?)?\s*"
    )
    s = text.strip()
    if s == "0":
        return {}
    out: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = term_re.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        sign, num, v, exp = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at position {pos}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp is not None else 1) if v else 0
        out[e] = out.get(e, 0) + c
        pos = m.end()
        first = False
    return {e: c for e, c in out.items() if c}
