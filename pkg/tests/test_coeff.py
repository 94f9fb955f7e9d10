"""Coefficient rings: rationals, parameter polynomials, univariate polys."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opcalc.coeff import (
    NotAUnitError,
    ParamPoly,
    Poly,
    PolyRing,
    QQ,
    RingMismatchError,
    format_poly,
    param_ring,
    parse_rational,
    ring_add,
    ring_from_json,
    ring_inv,
    ring_mul,
    ring_to_json,
    substitute,
    substitute_poly,
)

RZY = param_ring("z", "y")
Z, Y = RZY.gen("z"), RZY.gen("y")


def test_rational_add():
    assert ring_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_rational_inverse():
    assert ring_inv(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(NotAUnitError):
        ring_inv(Fraction(0))


def test_param_square():
    assert ring_mul(Z, Z) == ParamPoly(("z", "y"), {(2, 0): 1})


def test_param_constant_inverse():
    four = ParamPoly.constant(("z", "y"), 4)
    assert ring_inv(four) == ParamPoly.constant(("z", "y"), Fraction(1, 4))
    with pytest.raises(NotAUnitError):
        ring_inv(Z)


def test_mixed_ring_rejected():
    other = param_ring("a").gen("a")
    with pytest.raises(RingMismatchError):
        ring_add(Z, other)
    with pytest.raises(RingMismatchError):
        ring_add(Fraction(1, 2), Z)


def test_substitute_example_values():
    # the constant coefficient of the quadratic row of the squares-sequence family
    p = 2 * Z * Z + 4 * Y
    assert substitute(p, {"z": 0, "y": 1}) == 4
    assert substitute(Z, {"z": Fraction(5, 7), "y": 0}) == Fraction(5, 7)
    assert substitute(18 * Z * Z + 36 * Y, {"z": 1, "y": 1}) == 54


def test_substitute_missing_variable():
    with pytest.raises(KeyError):
        substitute(Z + Y, {"z": 1})


def test_substitute_poly_collapses_parameters():
    t = Poly.t(RZY)
    u2 = t * t + (4 * Z) * t + Poly(RZY, [2 * Z * Z + 4 * Y])
    assert substitute_poly(u2, {"z": 0, "y": 0}) == Poly(QQ, [0, 0, 1])


def test_parse_and_format_rational():
    assert parse_rational("5/7") == Fraction(5, 7)
    assert parse_rational("-3") == Fraction(-3)


def test_ring_json_round_trip():
    for ring in (QQ, RZY):
        assert ring_from_json(ring_to_json(ring)) == ring


def test_parampoly_json_round_trip():
    p = 2 * Z * Z + 4 * Y - Fraction(1, 3)
    assert RZY.element_from_json(RZY.element_to_json(p)) == p


def test_poly_formatting_matches_display_style():
    t = Poly.t(RZY)
    u2 = t * t + (4 * Z) * t + Poly(RZY, [2 * Z * Z + 4 * Y])
    assert format_poly(u2) == "t^2 + 4*z*t + 2*z^2 + 4*y"
    assert format_poly(Poly(QQ, [1, -2, 1])) == "t^2 - 2*t + 1"
    assert format_poly(Poly.zero(QQ)) == "0"


def test_poly_eval_and_derivative():
    p = Poly(QQ, [1, 2, 3])
    assert p(Fraction(2)) == 1 + 4 + 12
    assert p.derivative() == Poly(QQ, [2, 6])
    assert p.shift(2) == Poly(QQ, [0, 0, 1, 2, 3])


rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)


@given(rationals, rationals, rationals)
@settings(max_examples=60, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    if a:
        assert a * ring_inv(a) == 1


small_fracs = st.fractions(min_value=-40, max_value=40, max_denominator=8)
exponents = st.tuples(*(st.integers(min_value=0, max_value=6) for _ in range(4)))


@st.composite
def parampolys(draw):
    ring = param_ring("a", "b", "c", "d")
    terms = draw(st.dictionaries(exponents, small_fracs, max_size=5))
    return ParamPoly(ring.vars, terms)


@given(parampolys(), parampolys(), parampolys())
@settings(max_examples=50, deadline=None)
def test_parampoly_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(parampolys(), parampolys())
@settings(max_examples=50, deadline=None)
def test_substitute_is_a_homomorphism(p, q):
    point = {"a": Fraction(1, 2), "b": Fraction(-2), "c": Fraction(3, 5), "d": Fraction(0)}
    assert substitute(p * q, point) == substitute(p, point) * substitute(q, point)
    assert substitute(p + q, point) == substitute(p, point) + substitute(q, point)
