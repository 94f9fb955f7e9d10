"""Truncated power series, the matrix homomorphisms, factorial sequences."""

import math
import random
from fractions import Fraction

import pytest

from opcalc import matrix as mat
from opcalc import series as ser
from opcalc.checks import random_rational
from opcalc.coeff import NotAUnitError, Poly, QQ, param_ring
from opcalc.series import CFactorial, DivergentSeriesError, PowerSeries

N = 12


def exp_series(order, ring=QQ):
    return PowerSeries(ring, [Fraction(1, math.factorial(k)) for k in range(order)])


def test_mul_trivial():
    one_plus = PowerSeries.from_coeffs(QQ, [1, 1], N)
    one_minus = PowerSeries.from_coeffs(QQ, [1, -1], N)
    assert ser.ps_mul(one_plus, one_minus) == PowerSeries.from_coeffs(QQ, [1, 0, -1], N)


def test_derivative_of_exp():
    e = exp_series(N)
    assert ser.ps_derivative(e) == e.truncate(N - 1)


def test_derivative_loses_one_order():
    assert ser.ps_derivative(exp_series(N)).order == N - 1
    assert ser.ps_integrate(exp_series(N)).order == N + 1


def test_log_derivative_of_quadratic_exponential():
    # f = f0 exp(h0 t + h1 t^2 / 2) has f'/f = h0 + h1 t exactly
    f0, f1, f2 = Fraction(2), Fraction(1, 3), Fraction(-1, 5)
    h0 = f1 / f0
    h1 = (f0 * f2 - f1 * f1) / (f0 * f0)
    f = f0 * ser.ps_exp(PowerSeries.from_poly(Poly(QQ, [0, h0, h1 / 2]), N))
    h = ser.ps_div(ser.ps_derivative(f), f.truncate(N - 1))
    assert h.coeffs[0] == h0 and h.coeffs[1] == h1
    assert all(c == 0 for c in h.coeffs[2:])


def test_div_group_law():
    rng = random.Random(0)
    f = PowerSeries(QQ, [Fraction(1)] + [random_rational(rng) for _ in range(N - 1)])
    inv = ser.ps_div(PowerSeries.one(QQ, N), f)
    assert ser.ps_mul(inv, f) == PowerSeries.one(QQ, N)


def test_div_needs_unit():
    f = PowerSeries.from_coeffs(QQ, [0, 1], N)
    with pytest.raises(NotAUnitError):
        ser.ps_div(PowerSeries.one(QQ, N), f)


def test_exp_log_inverse_pair():
    assert ser.ps_exp(PowerSeries.zero(QQ, N)) == PowerSeries.one(QQ, N)
    x = PowerSeries.x(QQ, N)
    assert ser.ps_log(ser.ps_exp(x)) == x
    assert ser.ps_exp(x) == exp_series(N)


def test_exp_of_quadratic_matches_factorial_weights():
    # ordinary coefficients of exp(z t + y t^2) times (k!)^2 at k = 0, 1, 2
    ring = param_ring("z", "y")
    z, y = ring.gen("z"), ring.gen("y")
    g = ser.ps_exp(PowerSeries.from_poly(Poly(ring, [ring.zero, z, y]), N))
    c = CFactorial.squares(ring)
    weighted = [g.coeffs[k] * c.factorial(k) for k in range(3)]
    assert weighted[0] == ring.one
    assert weighted[1] == z
    assert weighted[2] == 2 * z * z + 4 * y


def test_compose():
    g = PowerSeries(QQ, [random_rational(random.Random(1)) for _ in range(N)])
    x = PowerSeries.x(QQ, N)
    assert ser.ps_compose(g, x) == g
    em1 = exp_series(N) - PowerSeries.one(QQ, N)
    log1p = ser.ps_log(PowerSeries.from_coeffs(QQ, [1, 1], N))
    assert ser.ps_compose(em1, log1p) == x
    f = ser.ps_div(x, PowerSeries.from_coeffs(QQ, [1, -1], N))
    g2 = ser.ps_div(x, PowerSeries.from_coeffs(QQ, [1, 1], N))
    assert ser.ps_compose(f, g2) == x


def test_reversion():
    x = PowerSeries.x(QQ, N)
    assert ser.ps_reversion(x) == x
    em1 = exp_series(N) - PowerSeries.one(QQ, N)
    log1p = ser.ps_log(PowerSeries.from_coeffs(QQ, [1, 1], N))
    assert ser.ps_reversion(em1) == log1p
    assert ser.ps_compose(em1, ser.ps_reversion(em1)) == x
    assert ser.ps_compose(ser.ps_reversion(em1), em1) == x


def test_reversion_with_parameters():
    # t / (1 - w t) reverses to t / (1 + w t)
    ring = param_ring("w")
    w = ring.gen("w")
    coeffs = [ring.zero, ring.one]
    for k in range(2, N):
        coeffs.append(coeffs[-1] * w)
    f = PowerSeries(ring, coeffs)
    rev = ser.ps_reversion(f)
    x = PowerSeries.x(ring, N)
    assert ser.ps_compose(f, rev) == x
    expected = [ring.zero, ring.one]
    for k in range(2, N):
        expected.append(expected[-1] * (-w))
    assert rev == PowerSeries(ring, expected)


def test_series_of_matrix_trivials():
    D = mat.basis_matrix("D", N)
    assert ser.series_of_matrix(PowerSeries.one(QQ, N), D) == mat.identity(N)
    assert ser.series_of_matrix(PowerSeries.x(QQ, N), D) == D


def test_series_of_matrix_exp_is_binomial_pattern():
    E = ser.series_of_matrix(exp_series(N), mat.basis_matrix("D", N))
    for i in range(N):
        for j in range(i + 1):
            assert E.entry(i, j) == math.comb(i, j)


def test_series_of_matrix_rejects_negative_index():
    with pytest.raises(DivergentSeriesError):
        ser.series_of_matrix(exp_series(N), mat.basis_matrix("X", N))
    # polynomial arguments are fine for any index
    W = ser.series_of_matrix(Poly(QQ, [1, 1]), mat.basis_matrix("X", N))
    assert W == mat.add(mat.identity(N), mat.basis_matrix("X", N))


def test_series_of_matrix_is_a_homomorphism():
    rng = random.Random(2)
    D = mat.basis_matrix("D", N)
    g = PowerSeries(QQ, [random_rational(rng) for _ in range(N)])
    h = PowerSeries(QQ, [random_rational(rng) for _ in range(N)])
    lhs = ser.series_of_matrix(ser.ps_mul(g, h), D)
    rhs = mat.mul(ser.series_of_matrix(g, D), ser.series_of_matrix(h, D))
    assert lhs == rhs


def test_inverse_of_series_matrix():
    f = PowerSeries(QQ, [Fraction(1)] + [random_rational(random.Random(3)) for _ in range(N - 1)])
    fD = ser.series_of_matrix(f, mat.basis_matrix("D", N))
    inv = ser.ps_div(PowerSeries.one(QQ, N), f)
    assert mat.invert(fD) == ser.series_of_matrix(inv, mat.basis_matrix("D", N))


def test_toeplitz_conjugation():
    rng = random.Random(4)
    n = 8
    g = PowerSeries(QQ, [random_rational(rng) for _ in range(n)])
    T = ser.toeplitz_of_series(g, n)
    F = mat.basis_matrix("F", n)
    Finv = mat.basis_matrix("Finv", n)
    assert mat.mul(mat.mul(F, T), Finv) == ser.series_of_matrix(g, mat.basis_matrix("D", n))


def test_toeplitz_invertible_iff_unit_constant():
    g = PowerSeries.from_coeffs(QQ, [1, 5, -2], 8)
    assert mat.mul(mat.invert(ser.toeplitz_of_series(g, 8)), ser.toeplitz_of_series(g, 8)) == mat.identity(8)
    g0 = PowerSeries.from_coeffs(QQ, [0, 1], 8)
    with pytest.raises(mat.NotInGroupError):
        mat.invert(ser.toeplitz_of_series(g0, 8))


def test_c_exponential():
    assert ser.c_exponential(CFactorial.integers(), N) == exp_series(N)
    sq = ser.c_exponential(CFactorial.squares(), 5)
    assert sq.coeffs == tuple(Fraction(1, math.factorial(k) ** 2) for k in range(5))
    q2 = ser.c_exponential(CFactorial.q_numbers(Fraction(2)), 4)
    assert q2.coeffs == (1, 1, Fraction(1, 3), Fraction(1, 21))


def test_cfactorial_binomial():
    c = CFactorial.squares()
    assert c.binomial(3, 1) == 9  # 36 / (1 * 4)
    assert c.binomial(4, 2) == Fraction(math.factorial(4) ** 2, (math.factorial(2) ** 2) ** 2)


def test_egf_constructor_divides():
    f = PowerSeries.from_egf(QQ, [1, 1, 1], 5)
    assert f.coeffs == (1, 1, Fraction(1, 2), 0, 0)
    c = CFactorial.squares()
    g = PowerSeries.from_cegf(QQ, [1, 1, 1], c, 5)
    assert g.coeffs == (1, 1, Fraction(1, 4), 0, 0)


def test_gf_check_requires_same_order():
    a = PowerSeries.one(QQ, 4)
    with pytest.raises(ValueError):
        ser.gf_check(a, PowerSeries.one(QQ, 5))
    assert ser.gf_check(a, PowerSeries.one(QQ, 4))


def test_series_json_round_trip():
    rng = random.Random(5)
    g = PowerSeries(QQ, [random_rational(rng) for _ in range(6)])
    assert ser.series_from_json(ser.series_to_json(g)) == g
