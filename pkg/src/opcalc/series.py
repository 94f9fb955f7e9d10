"""Truncated formal power series with exact coefficients.

Coefficients are stored in the ordinary convention (g = sum a_k x^k); the
exponential and factorial-sequence conventions used when describing
families are handled by the explicit ``from_egf`` / ``from_cegf``
constructors, which divide the supplied coefficients by k! or by the
factorial function of a ``CFactorial``.  Keeping one internal convention is
deliberate: mixing the two silently is the main source of bugs in this kind
of code.

Exactness bookkeeping mirrors the matrix layer: the order of a result is
the largest order at which every coefficient is exactly determined by the
inputs, so derivatives lose one order and integrals gain one.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import matrix as mat
from .coeff import NotAUnitError, Poly, QQ, RingMismatchError, ring_from_json, ring_to_json

__all__ = [
    "PowerSeries",
    "DivergentSeriesError",
    "ps_add",
    "ps_sub",
    "ps_mul",
    "ps_div",
    "ps_derivative",
    "ps_integrate",
    "ps_exp",
    "ps_log",
    "ps_compose",
    "ps_reversion",
    "series_of_matrix",
    "toeplitz_of_series",
    "CFactorial",
    "c_exponential",
    "gf_check",
    "series_to_json",
    "series_from_json",
]


class DivergentSeriesError(ArithmeticError):
    """A series of a matrix would need infinitely many terms per entry."""


class PowerSeries:
    """Truncated series: exactly the coefficients of x^0 .. x^(order-1)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = tuple(ring.coerce(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a PowerSeries needs order at least 1")

    @property
    def order(self):
        return len(self.coeffs)

    @classmethod
    def zero(cls, ring, order):
        return cls(ring, (ring.zero,) * order)

    @classmethod
    def one(cls, ring, order):
        return cls(ring, (ring.one,) + (ring.zero,) * (order - 1))

    @classmethod
    def x(cls, ring, order):
        if order < 2:
            raise ValueError("the series x needs order at least 2")
        return cls(ring, (ring.zero, ring.one) + (ring.zero,) * (order - 2))

    @classmethod
    def from_coeffs(cls, ring, coeffs, order=None):
        """Pad a finite coefficient list with exact zeros up to `order`."""
        coeffs = list(coeffs)
        if order is not None:
            if order < len(coeffs):
                coeffs = coeffs[:order]
            coeffs += [ring.zero] * (order - len(coeffs))
        return cls(ring, coeffs)

    @classmethod
    def from_egf(cls, ring, coeffs, order=None):
        """Interpret coeffs as c_k/k!-weighted: the series sum c_k x^k / k!."""
        cs = [ring.coerce(c) * Fraction(1, math.factorial(k)) for k, c in enumerate(coeffs)]
        return cls.from_coeffs(ring, cs, order)

    @classmethod
    def from_cegf(cls, ring, coeffs, cfact, order=None):
        """Interpret coeffs against a c-factorial: the series sum c_k x^k / f_c(k)."""
        cs = [
            ring.coerce(c) * cfact.inv_factorial(k)
            for k, c in enumerate(coeffs)
        ]
        return cls.from_coeffs(ring, cs, order)

    @classmethod
    def from_poly(cls, p, order):
        return cls.from_coeffs(p.ring, p.coeffs, order)

    def coeff(self, k):
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient {k} is beyond order {self.order}")
        return self.coeffs[k]

    def truncate(self, order):
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        return PowerSeries(self.ring, self.coeffs[:order])

    def to_poly(self):
        return Poly(self.ring, self.coeffs)

    def egf_coeffs(self):
        return tuple(c * math.factorial(k) for k, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other):
        return ps_add(self, other)

    def __sub__(self, other):
        return ps_sub(self, other)

    def __neg__(self):
        return PowerSeries(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        c = self.ring.coerce(other)
        return PowerSeries(self.ring, [c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 6 else ""
        return f"PowerSeries([{shown}{tail}], order={self.order})"


def _common(a, b):
    if a.ring != b.ring:
        raise RingMismatchError(f"mixed-ring series: {a.ring} vs {b.ring}")
    return min(a.order, b.order)


def ps_add(a, b):
    n = _common(a, b)
    return PowerSeries(a.ring, [a.coeffs[k] + b.coeffs[k] for k in range(n)])


def ps_sub(a, b):
    n = _common(a, b)
    return PowerSeries(a.ring, [a.coeffs[k] - b.coeffs[k] for k in range(n)])


def ps_mul(a, b):
    n = _common(a, b)
    ring = a.ring
    out = [ring.zero] * n
    for i, x in enumerate(a.coeffs[:n]):
        if ring.is_zero(x):
            continue
        for j in range(n - i):
            y = b.coeffs[j]
            if not ring.is_zero(y):
                out[i + j] = out[i + j] + x * y
    return PowerSeries(ring, out)


def ps_div(a, b):
    """Quotient a/b; b must have an invertible constant term."""
    n = _common(a, b)
    ring = a.ring
    if not ring.is_unit(b.coeffs[0]):
        raise NotAUnitError("division by a series whose constant term is not a unit")
    binv = ring.inv(b.coeffs[0])
    out = []
    for k in range(n):
        acc = a.coeffs[k]
        for j in range(k):
            acc = acc - out[j] * b.coeffs[k - j]
        out.append(binv * acc)
    return PowerSeries(ring, out)


def ps_derivative(a):
    """Termwise derivative, exact to order - 1."""
    if a.order < 2:
        raise ValueError("cannot differentiate below order 2")
    return PowerSeries(a.ring, [a.coeffs[k] * k for k in range(1, a.order)])


def ps_integrate(a):
    """Antiderivative with constant 0, exact to order + 1."""
    ring = a.ring
    out = [ring.zero]
    out.extend(a.coeffs[k] * Fraction(1, k + 1) for k in range(a.order))
    return PowerSeries(ring, out)


def ps_exp(a):
    """exp of a series with zero constant term, via the ODE recurrence."""
    ring = a.ring
    if not ring.is_zero(a.coeffs[0]):
        raise ValueError("ps_exp needs a zero constant term")
    n = a.order
    out = [ring.one]
    for k in range(1, n):
        acc = ring.zero
        for j in range(1, k + 1):
            c = a.coeffs[j]
            if not ring.is_zero(c):
                acc = acc + (c * j) * out[k - j]
        out.append(acc * Fraction(1, k))
    return PowerSeries(ring, out)


def ps_log(a):
    """log of a series with constant term 1."""
    ring = a.ring
    if a.coeffs[0] != ring.one:
        raise ValueError("ps_log needs constant term 1")
    n = a.order
    out = [ring.zero]
    for k in range(1, n):
        acc = a.coeffs[k] * k
        for j in range(1, k):
            acc = acc - (out[j] * j) * a.coeffs[k - j]
        out.append(acc * Fraction(1, k))
    return PowerSeries(ring, out)


def ps_compose(outer, inner):
    """outer(inner) for inner with zero constant term."""
    ring = outer.ring
    if ring != inner.ring:
        raise RingMismatchError(f"mixed-ring series: {ring} vs {inner.ring}")
    if not ring.is_zero(inner.coeffs[0]):
        raise ValueError("composition needs an inner series with zero constant term")
    n = min(outer.order, inner.order)
    f = inner.truncate(n)
    acc = PowerSeries.from_coeffs(ring, [outer.coeffs[n - 1]], n)
    for k in range(n - 2, -1, -1):
        acc = ps_mul(acc, f)
        acc = PowerSeries(ring, (acc.coeffs[0] + outer.coeffs[k],) + acc.coeffs[1:])
    return acc


def ps_reversion(f):
    """Compositional inverse of a series with f(0)=0 and unit linear term."""
    ring = f.ring
    if f.order < 2:
        raise ValueError("reversion needs order at least 2")
    if not ring.is_zero(f.coeffs[0]):
        raise ValueError("reversion needs a zero constant term")
    if not ring.is_unit(f.coeffs[1]):
        raise NotAUnitError("reversion needs an invertible linear coefficient")
    n = f.order
    # powers[k] holds the coefficients of f^k up to x^(n-1)
    powers = [PowerSeries.one(ring, n), f]
    for _ in range(2, n):
        powers.append(ps_mul(powers[-1], f))
    out = [ring.zero, ring.inv(f.coeffs[1])]
    for m in range(2, n):
        acc = ring.zero
        for k in range(1, m):
            acc = acc + out[k] * powers[k].coeffs[m]
        lead = powers[m].coeffs[m]  # equals f1^m, a unit
        out.append(-(ring.inv(lead) * acc))
    return PowerSeries(ring, out)


def series_of_matrix(g, B):
    """sum_k a_k B^k for the ordinary coefficients a_k of g.

    For a PowerSeries argument B must have index >= 1 (each corner entry
    then receives finitely many terms and the result is exact on the full
    corner).  A Poly argument is evaluated by Horner for any B, with the
    usual valid-row shrinkage when B has negative index.
    """
    if isinstance(g, Poly):
        return mat.matrix_poly_eval(g, B)
    if g.ring != B.ring:
        raise RingMismatchError(f"mixed rings: {g.ring} vs {B.ring}")
    if mat.index_of(B) < 1:
        raise DivergentSeriesError(
            "series of a matrix needs index >= 1; pass a Poly for banded arguments"
        )
    n = B.valid_rows
    acc = mat.scale(g.coeffs[0], mat.identity(n, B.ring))
    power = None
    for k in range(1, min(g.order, n)):
        power = B if power is None else mat.mul(power, B)
        if not B.ring.is_zero(g.coeffs[k]):
            acc = mat.add(acc, mat.scale(g.coeffs[k], power))
    return acc


def toeplitz_of_series(g, n):
    """g(Xhat): the lower triangular Toeplitz matrix with g_k on diagonal k."""
    ring = g.ring
    vr = min(n, g.order)
    return mat.TruncMatrix.build(
        ring, 0, vr,
        lambda i, k: g.coeffs[i - k],
    )


class CFactorial:
    """A sequence of nonzero ring elements c_1, c_2, ... and its factorial.

    factorial(n) = c_1 * ... * c_n with factorial(0) = 1; binomial(n, k) is
    the quotient factorial(n) / (factorial(k) factorial(n-k)), which needs
    the involved factorials to be units.
    """

    def __init__(self, fn, ring=QQ, label="custom"):
        self.ring = ring
        self.label = label
        self._fn = fn
        self._c = [None]  # 1-indexed
        self._fact = [ring.one]

    def c(self, k):
        if k < 1:
            raise IndexError("c is indexed from 1")
        while len(self._c) <= k:
            value = self.ring.coerce(self._fn(len(self._c)))
            if self.ring.is_zero(value):
                raise ValueError(f"c_{len(self._c)} is zero")
            self._c.append(value)
        return self._c[k]

    def factorial(self, n):
        while len(self._fact) <= n:
            k = len(self._fact)
            self._fact.append(self._fact[k - 1] * self.c(k))
        return self._fact[n]

    def inv_factorial(self, n):
        return self.ring.inv(self.factorial(n))

    def binomial(self, n, k):
        if not 0 <= k <= n:
            return self.ring.zero
        return self.factorial(n) * self.ring.inv(self.factorial(k) * self.factorial(n - k))

    @classmethod
    def integers(cls, ring=QQ):
        """c_k = k, the ordinary factorial."""
        return cls(lambda k: k, ring, label="k")

    @classmethod
    def squares(cls, ring=QQ):
        """c_k = k**2."""
        return cls(lambda k: k * k, ring, label="k2")

    @classmethod
    def from_poly(cls, coeffs, ring=QQ, label=None):
        """c_k = a_1 k + a_2 k^2 + ... for the given coefficient list."""
        coeffs = [ring.coerce(c) for c in coeffs]

        def fn(k):
            acc = ring.zero
            for j, a in enumerate(coeffs, start=1):
                acc = acc + a * (k ** j)
            return acc

        return cls(fn, ring, label=label or "poly")

    @classmethod
    def q_numbers(cls, q, ring=QQ, label=None):
        """c_k = [k] = 1 + q + ... + q^(k-1) for a fixed q != 1."""
        q = ring.coerce(q)
        if q == ring.one:
            raise ValueError("q-numbers need q != 1")

        def fn(k):
            acc = ring.zero
            p = ring.one
            for _ in range(k):
                acc = acc + p
                p = p * q
            return acc

        return cls(fn, ring, label=label or "q")


def c_exponential(cfact, order):
    """The series sum x^k / f_c(k), the factorial-sequence exponential."""
    ring = cfact.ring
    return PowerSeries(ring, [cfact.inv_factorial(k) for k in range(order)])


def gf_check(lhs, rhs):
    """Exact coefficientwise equality of two series of the same order."""
    if lhs.ring != rhs.ring:
        raise RingMismatchError(f"mixed-ring series: {lhs.ring} vs {rhs.ring}")
    if lhs.order != rhs.order:
        raise ValueError(f"order mismatch: {lhs.order} vs {rhs.order}")
    return lhs.coeffs == rhs.coeffs


def series_to_json(g):
    enc = g.ring.element_to_json
    return {"order": g.order, "ring": ring_to_json(g.ring), "coeffs": [enc(c) for c in g.coeffs]}


def series_from_json(obj):
    ring = ring_from_json(obj["ring"])
    coeffs = [ring.element_from_json(c) for c in obj["coeffs"]]
    if len(coeffs) != obj["order"]:
        raise ValueError("order does not match the number of coefficients")
    return PowerSeries(ring, coeffs)
