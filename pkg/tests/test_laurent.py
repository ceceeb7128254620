from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from braid3.laurent import (
    ONE,
    T,
    T_INV,
    ZERO,
    ConwayPoly,
    LaurentPoly,
    Mat2,
    NonExactDivision,
    NormalizationError,
    conway_from_alexander,
    symmetrize_normalize,
)

t = sympy.Symbol("t")

polys = st.builds(
    LaurentPoly,
    st.lists(st.integers(-20, 20), max_size=6),
    st.integers(-4, 4),
)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def to_sympy(p: LaurentPoly):
    return sum(c * t**e for e, c in p.terms().items())


def P(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text)


def test_canonical_form_trims_zeros():
    p = LaurentPoly((0, 0, 3, 0, 1, 0), -2)
    assert p.low == 0 and p.coeffs == (3, 0, 1)
    assert LaurentPoly((0, 0)) == ZERO
    assert ZERO.coeffs == ()


def test_small_products():
    assert (T - 1) * T_INV == P("-t^-1 + 1")
    assert P("1 + t + t^2") * (T - 1) == P("-1 + t^3")
    assert Mat2.identity().det() == ONE


def test_divide_exact_examples():
    assert P("t^3 - 1").divide_exact(P("1 + t + t^2")) == T - 1
    assert P("t^-1 + 7 - 2*t").divide_exact(ONE) == P("t^-1 + 7 - 2*t")
    with pytest.raises(NonExactDivision):
        P("t^2 + 1").divide_exact(P("t + 1"))
    with pytest.raises(ZeroDivisionError):
        ONE.divide_exact(ZERO)


def test_evaluations():
    trefoil = P("t^-1 - 1 + t")
    assert trefoil.eval_at_one() == 1
    assert trefoil.second_derivative_at_one() == 2
    assert ONE.derivative_at_one() == 0 and ONE.second_derivative_at_one() == 0
    assert P("t^2 + 3*t").invert_variable() == P("t^-2 + 3*t^-1")


def test_symmetrize_normalize_examples():
    assert symmetrize_normalize(P("-t^2 + t - 1")) == P("t^-1 - 1 + t")
    assert symmetrize_normalize(ONE) == ONE
    with pytest.raises(NormalizationError):
        symmetrize_normalize(T + 1)
    with pytest.raises(NormalizationError):
        symmetrize_normalize(P("1 - t + 2*t^2 - t^3"))  # right value at 1, not symmetric


def test_conway_examples():
    assert str(conway_from_alexander(P("t^-1 - 1 + t"))) == "1 + x^2"
    assert str(conway_from_alexander(ONE)) == "1"
    assert str(conway_from_alexander(P("-t^-1 + 3 - t"))) == "1 - x^2"
    assert ConwayPoly.parse("1 + 5*x^2 + 5*x^4 + x^6").coefficient(4) == 5
    with pytest.raises(ValueError):
        conway_from_alexander(P("1 + t - t^2"))


def test_rendering():
    assert str(P("t^-1 - 1 + t")) == "t^-1 - 1 + t"
    assert str(ZERO) == "0"
    assert str(P("-2*t^3")) == "-2*t^3"


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys)
def test_product_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(polys, nonzero_polys)
def test_divide_exact_round_trip(a, b):
    assert (a * b).divide_exact(b) == a


@given(polys)
def test_parse_round_trip(a):
    assert LaurentPoly.parse(str(a)) == a


@given(polys)
def test_invert_variable_is_involution(a):
    assert a.invert_variable().invert_variable() == a
    assert a.eval_at_one() == a.invert_variable().eval_at_one()


@given(st.lists(st.integers(-9, 9), max_size=5))
def test_conway_round_trip(cs):
    even = [1]
    for c in cs:
        even += [0, c]
    nabla = ConwayPoly(even)
    delta = nabla.to_alexander()
    assert delta.is_symmetric() and delta.eval_at_one() == 1
    assert conway_from_alexander(delta) == nabla
    assert delta.second_derivative_at_one() == 2 * nabla.coefficient(2)


@given(st.lists(st.integers(-9, 9), max_size=4), st.integers(-5, 5), st.sampled_from([1, -1]))
def test_symmetrize_normalize_removes_units(cs, k, sign):
    even = [1]
    for c in cs:
        even += [0, c]
    sym = ConwayPoly(even).to_alexander()
    assert symmetrize_normalize(sym.shift(k) * sign) == sym


@settings(max_examples=50)
@given(st.lists(polys, min_size=8, max_size=8))
def test_mat2_det_multiplicative(entries):
    m = Mat2(*entries[:4])
    n = Mat2(*entries[4:])
    assert (m * n).det() == m.det() * n.det()
    assert (m * Mat2.identity()) == m
