"""Constructors for the classical polynomial-sequence families.

Each family is realized as a truncated matrix whose rows hold the
polynomials, together with closed forms for its raising (M), lowering (P)
and coordinate-multiplication (L) operators:

* exponential-series families A = f(D) with binomial row formula,
* modified composition matrices F C_f F^-1 of binomial type,
* their products, the Sheffer matrices, and the parallel Riordan form,
* the banded-eigenproblem class solved row by row from A B = H A,
* factorial-sequence generalizations built on a generalized derivative
  D_c (Ward derivatives, including the Jackson q-derivative).

Series arguments follow the explicit-convention rule: constructors taking
exponential-type coefficient lists are suffixed ``from_egf``/``from_cegf``
and divide by k! or by the c-factorial once, on entry.  Everything
downstream works with ordinary coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import matrix as mat
from . import series as ser
from .coeff import NotAUnitError, Poly, QQ, ring_of
from .matrix import TruncMatrix
from .series import CFactorial, PowerSeries

__all__ = [
    "DegenerateSpectrumError",
    "AppellSpec",
    "BinomialSpec",
    "ShefferSpec",
    "OrthoSpec",
    "WardSpec",
    "appell_matrix",
    "appell_M",
    "appell_L",
    "appell_from_h",
    "appell_orthogonal",
    "composition_matrix",
    "binomial_type",
    "sheffer",
    "riordan_matrix",
    "ortho_operator",
    "ortho_solve",
    "ortho_L_closed",
    "ortho_M_closed",
    "ortho_P_closed",
    "ward_basis",
    "ward_family",
    "ward_to_hermite",
    "laguerre_general",
    "jackson_derivative",
]


class DegenerateSpectrumError(ArithmeticError):
    """The banded eigenproblem has colliding diagonal eigenvalues."""


def _unit_or_raise(ring, value, what):
    if not ring.is_unit(value):
        raise NotAUnitError(f"{what} must be a unit, got {value}")


# ---------------------------------------------------------------------------
# Specs


@dataclass(frozen=True)
class AppellSpec:
    """f stored with ordinary coefficients; rows of f(D) are the family."""

    f: PowerSeries
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("truncation must be at least 2")
        if self.f.order <= self.n:
            raise ValueError(f"need series order > {self.n}, got {self.f.order}")
        _unit_or_raise(self.f.ring, self.f.coeffs[0], "constant coefficient")

    @classmethod
    def from_egf(cls, coeffs, n, ring=QQ):
        return cls(PowerSeries.from_egf(ring, coeffs, n + 1), n)

    @property
    def ring(self):
        return self.f.ring


@dataclass(frozen=True)
class BinomialSpec:
    """Delta series f (f0 = 0, f1 = 1) with ordinary coefficients."""

    f: PowerSeries
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("truncation must be at least 2")
        if self.f.order <= self.n + 1:
            raise ValueError(f"need series order > {self.n + 1}, got {self.f.order}")
        ring = self.f.ring
        if not ring.is_zero(self.f.coeffs[0]) or self.f.coeffs[1] != ring.one:
            raise ValueError("binomial type needs a delta series with unit slope")

    @classmethod
    def from_egf(cls, coeffs, n, ring=QQ):
        return cls(PowerSeries.from_egf(ring, coeffs, n + 2), n)

    @property
    def ring(self):
        return self.f.ring


@dataclass(frozen=True)
class ShefferSpec:
    """Invertible g times a binomial-type part driven by a delta series f."""

    g: PowerSeries
    f: PowerSeries
    n: int

    def __post_init__(self):
        if self.g.ring != self.f.ring:
            raise ValueError("g and f must share a ring")
        BinomialSpec(self.f, self.n)
        if self.g.order <= self.n:
            raise ValueError(f"need g order > {self.n}, got {self.g.order}")
        _unit_or_raise(self.g.ring, self.g.coeffs[0], "constant coefficient of g")

    @classmethod
    def from_egf(cls, g_coeffs, f_coeffs, n, ring=QQ):
        return cls(
            PowerSeries.from_egf(ring, g_coeffs, n + 2),
            PowerSeries.from_egf(ring, f_coeffs, n + 2),
            n,
        )

    @property
    def ring(self):
        return self.g.ring


@dataclass(frozen=True)
class OrthoSpec:
    """Coefficients of g(t) = g0 + g1 t and f(t) = f0 + f1 t + f2 t^2."""

    f0: object
    f1: object
    f2: object
    g0: object
    g1: object
    n: int
    ring: object = QQ

    def __post_init__(self):
        for name in ("f0", "f1", "f2", "g0", "g1"):
            object.__setattr__(self, name, self.ring.coerce(getattr(self, name)))
        _unit_or_raise(self.ring, self.g1, "g1")
        if self.n < 2:
            raise ValueError("truncation must be at least 2")


@dataclass(frozen=True)
class WardSpec:
    """A factorial sequence c and a unit series g, ordinary coefficients."""

    c: CFactorial
    g: PowerSeries
    n: int

    def __post_init__(self):
        if self.g.ring != self.c.ring:
            raise ValueError("g and c must share a ring")
        if self.g.order <= self.n:
            raise ValueError(f"need series order > {self.n}, got {self.g.order}")
        _unit_or_raise(self.g.ring, self.g.coeffs[0], "constant coefficient")

    @classmethod
    def from_cegf(cls, c, coeffs, n, ring=QQ):
        return cls(c, PowerSeries.from_cegf(ring, coeffs, c, n + 1), n)

    @property
    def ring(self):
        return self.g.ring


# ---------------------------------------------------------------------------
# Exponential-series (Appell) families


def appell_matrix(spec):
    """The matrix f(D); row k holds sum_j C(k, j) f_{k-j} t^j."""
    D = mat.basis_matrix("D", spec.n, spec.ring)
    return ser.series_of_matrix(spec.f, D)


def _log_derivative(f):
    """f'/f, exact to one order less than f."""
    return ser.ps_div(ser.ps_derivative(f), f.truncate(f.order - 1))


def appell_M(spec):
    """Raising operator in closed form: X plus the log-derivative series of D."""
    n, ring = spec.n, spec.ring
    h = _log_derivative(spec.f)
    X = mat.basis_matrix("X", n, ring)
    D = mat.basis_matrix("D", n, ring)
    return mat.add(X, ser.series_of_matrix(h, D))


def appell_L(spec):
    """Multiplication-by-t in family coordinates: X minus the same series."""
    n, ring = spec.n, spec.ring
    h = _log_derivative(spec.f)
    X = mat.basis_matrix("X", n, ring)
    D = mat.basis_matrix("D", n, ring)
    return mat.sub(X, ser.series_of_matrix(h, D))


def appell_from_h(htilde, n):
    """Family matrix exp(htilde(D)) for a polynomial htilde with htilde(0) = 0.

    The raising operator is then X + htilde'(D), a finite-order
    differential operator.
    """
    ring = htilde.ring
    if not ring.is_zero(htilde.coeff(0)):
        raise ValueError("the exponent polynomial must have zero constant term")
    f = ser.ps_exp(PowerSeries.from_poly(htilde, n + 1))
    return appell_matrix(AppellSpec(f, n))


class AppellOrthogonal(NamedTuple):
    A: TruncMatrix
    L: TruncMatrix


def appell_orthogonal(f0, f1, f2, n, ring=QQ):
    """The f(D) family whose log-derivative is linear, plus its tridiagonal L.

    Rows satisfy the three-term recurrence
    t u_k + k h1 u_{k-1} + h0 u_k - u_{k+1} = 0 with h0 = f1/f0 and
    h1 = (f0 f2 - f1^2) / f0^2.
    """
    f0, f1, f2 = ring.coerce(f0), ring.coerce(f1), ring.coerce(f2)
    _unit_or_raise(ring, f0, "f0")
    inv0 = ring.inv(f0)
    h0 = f1 * inv0
    h1 = (f0 * f2 - f1 * f1) * inv0 * inv0
    exponent = Poly(ring, [ring.zero, h0, h1 * Fraction(1, 2)])
    f = f0 * ser.ps_exp(PowerSeries.from_poly(exponent, n + 1))
    A = appell_matrix(AppellSpec(f, n))
    X = mat.basis_matrix("X", n, ring)
    I = mat.identity(n, ring)
    D = mat.basis_matrix("D", n, ring)
    L = mat.sub(mat.sub(X, mat.scale(h0, I)), mat.scale(h1, D))
    return AppellOrthogonal(A, L)


# ---------------------------------------------------------------------------
# Composition matrices, binomial type, Sheffer, Riordan


def composition_matrix(f, n):
    """Column j holds the coefficients of the j-th composition power of f."""
    ring = f.ring
    if f.order < n:
        raise ValueError(f"need series order >= {n}, got {f.order}")
    if not ring.is_zero(f.coeffs[0]) or f.coeffs[1] != ring.one:
        raise ValueError("composition matrices need a delta series with unit slope")
    work = f.truncate(n) if f.order > n else f
    powers = [PowerSeries.one(ring, n), work]
    for _ in range(2, n):
        powers.append(ser.ps_mul(powers[-1], work))
    return TruncMatrix.build(ring, 0, n, lambda k, j: powers[j].coeffs[k])


class BinomialFamily(NamedTuple):
    B: TruncMatrix
    M: TruncMatrix
    P: TruncMatrix


def binomial_type(spec):
    """Rows of F C_f F^-1; M = (1/ftilde')(D) X and P = ftilde(D)."""
    n, ring = spec.n, spec.ring
    Cf = composition_matrix(spec.f, n)
    F = mat.basis_matrix("F", n, ring)
    Finv = mat.basis_matrix("Finv", n, ring)
    B = mat.mul(mat.mul(F, Cf), Finv)
    ftilde = ser.ps_reversion(spec.f)
    D = mat.basis_matrix("D", n, ring)
    X = mat.basis_matrix("X", n, ring)
    inv_slope = ser.ps_div(PowerSeries.one(ring, ftilde.order - 1), ser.ps_derivative(ftilde))
    M = mat.mul(ser.series_of_matrix(inv_slope, D), X)
    P = ser.series_of_matrix(ftilde, D)
    return BinomialFamily(B, M, P)


class ShefferFamily(NamedTuple):
    S: TruncMatrix
    M: TruncMatrix
    P: TruncMatrix


def sheffer(spec):
    """S = (F C_f F^-1) g(D) with the closed raising/lowering forms."""
    n, ring = spec.n, spec.ring
    bspec = BinomialSpec(spec.f, n)
    B, _, P = binomial_type(bspec)
    D = mat.basis_matrix("D", n, ring)
    X = mat.basis_matrix("X", n, ring)
    A = ser.series_of_matrix(spec.g, D)
    S = mat.mul(B, A)
    ftilde = ser.ps_reversion(spec.f)
    inv_slope = ser.ps_div(PowerSeries.one(ring, ftilde.order - 1), ser.ps_derivative(ftilde))
    gh = _log_derivative(spec.g)
    inner = mat.add(ser.series_of_matrix(gh, D), X)
    M = mat.mul(ser.series_of_matrix(inv_slope, D), inner)
    return ShefferFamily(S, M, P)


def riordan_matrix(g, f, n):
    """C_f g(Xhat): the ordinary-coefficient counterpart of a Sheffer matrix."""
    ring = g.ring
    _unit_or_raise(ring, g.coeffs[0], "constant coefficient of g")
    Cf = composition_matrix(f, n)
    return mat.mul(Cf, ser.toeplitz_of_series(g, n))


# ---------------------------------------------------------------------------
# The banded-eigenproblem class


def ortho_operator(spec):
    """The band operator B = D g(X) + (D^2/2) f(X) and its diagonal H."""
    ring, n = spec.ring, spec.n
    D = mat.basis_matrix("D", n, ring)
    D2 = mat.mul(D, D)
    gX = mat.poly_of_X(Poly(ring, [spec.g0, spec.g1]), n, ring)
    fX = mat.poly_of_X(Poly(ring, [spec.f0, spec.f1, spec.f2]), n, ring)
    B = mat.add(mat.mul(D, gX), mat.scale(Fraction(1, 2), mat.mul(D2, fX)))
    hs = [spec.g1 * i + spec.f2 * math.comb(i, 2) for i in range(n)]
    return B, hs


class OrthoFamily(NamedTuple):
    A: TruncMatrix
    L: TruncMatrix
    M: TruncMatrix
    P: TruncMatrix


def ortho_solve(spec):
    """Solve A B = H A row by row for the monic A, then conjugate.

    Back-substitution runs down each row from the monic diagonal entry;
    it needs the diagonal of B to take pairwise distinct values.
    """
    ring, n = spec.ring, spec.n
    B, hs = ortho_operator(spec)
    seen = {}
    for i, h in enumerate(hs):
        if h in seen:
            raise DegenerateSpectrumError(
                f"diagonal eigenvalues collide at indices {seen[h]} and {i}"
            )
        seen[h] = i
    rows = [[ring.one]]
    for i in range(1, n):
        row = [ring.zero] * (i + 1)
        row[i] = ring.one
        for k in range(i - 1, -1, -1):
            acc = ring.zero
            for j in range(k + 1, min(i, k + 2) + 1):
                b = B.entry(j, k)
                if b:
                    acc = acc + row[j] * b
            row[k] = acc * ring.inv(hs[i] - hs[k])
        rows.append(row)
    A = TruncMatrix(ring, 0, rows, coerce=False)
    Ainv = mat.invert(A)
    X = mat.basis_matrix("X", n, ring)
    D = mat.basis_matrix("D", n, ring)
    L = mat.mul(mat.mul(A, X), Ainv)
    M = mat.mul(mat.mul(Ainv, X), A)
    P = mat.mul(mat.mul(Ainv, D), A)
    return OrthoFamily(A, L, M, P)


def _require_simple(spec):
    if not spec.ring.is_zero(spec.f2):
        raise ValueError("closed forms are provided for f2 = 0 only")


def ortho_L_closed(spec):
    """Tridiagonal coordinate matrix for the f2 = 0 subclass."""
    _require_simple(spec)
    ring, n = spec.ring, spec.n
    inv_g1 = ring.inv(spec.g1)
    X = mat.basis_matrix("X", n, ring)
    I = mat.identity(n, ring)
    D = mat.basis_matrix("D", n, ring)
    DX = mat.mul(D, X)
    D2X = mat.mul(mat.mul(D, D), X)
    out = mat.sub(X, mat.scale(spec.g0 * inv_g1, I))
    out = mat.sub(out, mat.scale(spec.f1 * inv_g1, DX))
    out = mat.add(
        out,
        mat.scale((spec.f1 * spec.g0 - spec.f0 * spec.g1) * inv_g1 * inv_g1 * Fraction(1, 2), D),
    )
    return mat.add(out, mat.scale(spec.f1 * spec.f1 * inv_g1 * inv_g1 * Fraction(1, 4), D2X))


def ortho_M_closed(spec):
    """Tetradiagonal raising matrix for the f2 = 0 subclass."""
    _require_simple(spec)
    ring, n = spec.ring, spec.n
    inv_g1 = ring.inv(spec.g1)
    inv_g1_sq = inv_g1 * inv_g1
    w0 = Poly(ring, [spec.g0 * inv_g1, ring.one])
    w1 = Poly(
        ring,
        [(spec.f0 * spec.g1 + spec.f1 * spec.g0) * inv_g1_sq * Fraction(1, 2), spec.f1 * inv_g1],
    )
    w2 = Poly(
        ring,
        [
            spec.f0 * spec.f1 * inv_g1_sq * Fraction(1, 2),
            spec.f1 * spec.f1 * inv_g1_sq * Fraction(1, 2),
        ],
    )
    D = mat.basis_matrix("D", n, ring)
    out = mat.poly_of_X(w0, n, ring)
    out = mat.add(out, mat.mul(D, mat.poly_of_X(w1, n, ring)))
    return mat.add(
        out,
        mat.scale(Fraction(1, 2), mat.mul(mat.mul(D, D), mat.poly_of_X(w2, n, ring))),
    )


def ortho_P_closed(spec):
    """Lowering matrix D exp(-f1/(2 g1) D) for the f2 = 0 subclass."""
    _require_simple(spec)
    ring, n = spec.ring, spec.n
    beta = -(spec.f1 * ring.inv(spec.g1)) * Fraction(1, 2)
    coeffs = [ring.zero]
    power = ring.one
    for _ in range(1, n):
        coeffs.append(power)
        power = power * beta
    D = mat.basis_matrix("D", n, ring)
    return ser.series_of_matrix(PowerSeries(ring, coeffs), D)


# ---------------------------------------------------------------------------
# Ward-derivative families


class WardBasis(NamedTuple):
    Dc: TruncMatrix
    Xc: TruncMatrix


def ward_basis(c, n):
    """Generalized derivative and shift for a unit factorial sequence.

    Dc has c_{k+1} at (k+1, k); Xc has (k+1)/c_{k+1} at (k, k+1); together
    they satisfy the same commutation relation as D and X.
    """
    ring = c.ring
    for k in range(1, n + 1):
        if not ring.is_unit(c.c(k)):
            raise NotAUnitError(f"c_{k} = {c.c(k)} is not a unit")
    Dc = TruncMatrix.build(
        ring, 1, n, lambda j, k: c.c(j) if k == j - 1 else ring.zero
    )
    Xc = TruncMatrix.build(
        ring, -1, n,
        lambda j, k: (j + 1) * ring.inv(c.c(j + 1)) if k == j + 1 else ring.zero,
    )
    return WardBasis(Dc, Xc)


class WardFamily(NamedTuple):
    A: TruncMatrix
    M: TruncMatrix
    P: TruncMatrix
    L: TruncMatrix


def ward_family(spec):
    """Rows of g(Dc) with M = Xc + h(Dc), P = Dc, L = Xc - h(Dc) for h = g'/g."""
    n, ring = spec.n, spec.ring
    Dc, Xc = ward_basis(spec.c, n)
    A = ser.series_of_matrix(spec.g, Dc)
    h = _log_derivative(spec.g)
    hDc = ser.series_of_matrix(h, Dc)
    M = mat.add(Xc, hDc)
    L = mat.sub(Xc, hDc)
    return WardFamily(A=A, M=M, P=Dc, L=L)


class WardHermite(NamedTuple):
    v: list
    u: list


def ward_to_hermite(spec):
    """Orthogonal companions of a Ward family with linear log-derivative.

    Returns the rows v_k of the plain-derivative matrix built from the same
    ordinary coefficients, together with the factorial-reweighted rows u_k,
    which coincide with the rows of g(Dc).
    """
    n, ring = spec.n, spec.ring
    h = _log_derivative(spec.g)
    for k in range(2, h.order):
        if not ring.is_zero(h.coeffs[k]):
            raise ValueError("the log-derivative must have degree at most 1")
    D = mat.basis_matrix("D", n, ring)
    FD = ser.series_of_matrix(spec.g, D)
    v = [mat.row_poly(FD, k) for k in range(n)]
    u = []
    for k in range(n):
        fck = spec.c.factorial(k)
        kfact = Fraction(1, math.factorial(k))
        coeffs = []
        for j in range(k + 1):
            w = fck * math.factorial(j) * kfact * spec.c.inv_factorial(j)
            coeffs.append(w * FD.entry(k, j))
        u.append(Poly(ring, coeffs))
    return WardHermite(v, u)


class LaguerreFamily(NamedTuple):
    A: TruncMatrix
    L: TruncMatrix
    M: TruncMatrix
    P: TruncMatrix


def laguerre_general(a, y, n, ring=None):
    """exp(-Dc) for the quadratic sequence c_k = a k + y k^2.

    The coordinate matrix L and raising matrix M come out tridiagonal (they
    swap under a -> -a) and the lowering matrix is the geometric series
    P = sum (a y)^k D^{k+1}.
    """
    if ring is None:
        ring = ring_of(a) if not isinstance(a, (int, Fraction)) else ring_of(y)
    a = ring.coerce(a)
    y = ring.coerce(y)
    if ring.is_zero(a):
        raise NotAUnitError("a must be nonzero")
    D = mat.basis_matrix("D", n, ring)
    U = TruncMatrix.build(
        ring, 1, n, lambda j, k: ring.coerce(j * j) if k == j - 1 else ring.zero
    )
    Dc = mat.scale(a, mat.add(D, mat.scale(y, U)))
    exp_neg = PowerSeries(
        ring, [Fraction((-1) ** k, math.factorial(k)) for k in range(n)]
    )
    A = ser.series_of_matrix(exp_neg, Dc)

    X = mat.basis_matrix("X", n, ring)
    I = mat.identity(n, ring)

    def closed_coordinate(sign_a):
        band = Poly(ring, [sign_a * sign_a * y * (ring.one + y), 2 * sign_a * y])
        out = mat.add(X, mat.scale(sign_a * (ring.one + y), I))
        out = mat.add(out, mat.mul(D, mat.poly_of_X(band, n, ring)))
        return mat.add(
            out, mat.scale(sign_a * sign_a * y * y, mat.mul(mat.mul(D, D), X))
        )

    L = closed_coordinate(a)
    M = closed_coordinate(-a)
    ay = a * y
    coeffs = [ring.zero]
    power = ring.one
    for _ in range(1, n):
        coeffs.append(power)
        power = power * ay
    P = ser.series_of_matrix(PowerSeries(ring, coeffs), D)
    return LaguerreFamily(A, L, M, P)


def jackson_derivative(p, q):
    """(p(qt) - p(t)) / ((q - 1) t), computed coefficientwise.

    The coefficient of t^j in the result is [j+1] p_{j+1} with
    [m] = 1 + q + ... + q^{m-1}; this matches the row action of the
    generalized derivative for the q-number sequence.
    """
    ring = p.ring
    q = ring.coerce(q)
    if q == ring.one:
        raise ValueError("the q-derivative needs q != 1")
    out = []
    qnum = ring.one  # [j+1] as j advances
    qpow = q
    for j in range(max(p.degree, 0)):
        out.append(qnum * p.coeff(j + 1))
        qnum = qnum + qpow
        qpow = qpow * q
    return Poly(ring, out)
