"""Identity suites: the runnable verification battery behind `check`.

Each suite replays a set of exact identities and returns one Report per
identity.  A failing report carries the first counterexample location so
the command line can print something actionable.  Suites draw any random
data from a seeded generator, so identical invocations produce identical
output.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import diffop as dop
from . import families as fam
from . import matrix as mat
from . import monomial as mono
from . import series as ser
from .coeff import Poly, QQ, param_ring
from .matrix import TruncMatrix
from .series import CFactorial, PowerSeries

__all__ = [
    "Report",
    "SUITES",
    "check_suite",
    "random_rational",
    "random_index0_matrix",
    "random_negative_index_matrix",
    "format_report",
]


@dataclass(frozen=True)
class Report:
    name: str
    passed: bool
    location: tuple | None = None
    detail: str | None = None


def format_report(r):
    if r.passed:
        return f"PASS {r.name}"
    where = f" at {r.location}" if r.location else ""
    extra = f": {r.detail}" if r.detail else ""
    return f"FAIL {r.name}{where}{extra}"


def _cmp(name, A, B, rows=None):
    loc = mat.first_difference(A, B, rows)
    if loc is None:
        return Report(name, True)
    j, k = loc
    return Report(name, False, loc, f"{A.entry(j, k)} != {B.entry(j, k)}")


def _claim(name, ok, detail=None):
    return Report(name, bool(ok), None, None if ok else detail)


def random_rational(rng, num=9, den=9):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_index0_matrix(rng, n, ring=QQ, monic=False):
    """Random invertible index-0 truncation with unit diagonal entries."""
    rows = []
    for j in range(n):
        row = [ring.coerce(random_rational(rng)) for _ in range(j)]
        if monic:
            diag = ring.one
        else:
            diag = ring.coerce(Fraction(rng.choice([x for x in range(-5, 6) if x]), rng.randint(1, 5)))
        row.append(diag)
        rows.append(row)
    return TruncMatrix(ring, 0, rows, coerce=False)


def random_negative_index_matrix(rng, n, m, ring=QQ):
    """Random truncation of index exactly -m."""
    rows = []
    for j in range(n):
        row = [ring.coerce(random_rational(rng)) for _ in range(j + m)]
        row.append(ring.one)  # pin the -m diagonal so the index is exact
        rows.append(row)
    return TruncMatrix(ring, -m, rows, coerce=False)


def _random_unit_series(rng, order, ring=QQ):
    coeffs = [Fraction(rng.choice([1, 2, 3, -1, -2]))]
    coeffs += [random_rational(rng, 6, 6) for _ in range(order - 1)]
    return PowerSeries(ring, coeffs)


def _random_delta_series(rng, order, ring=QQ):
    coeffs = [Fraction(0), Fraction(1)]
    coeffs += [random_rational(rng, 6, 6) for _ in range(order - 2)]
    return PowerSeries(ring, coeffs)


# ---------------------------------------------------------------------------
# pincherle


def suite_pincherle(order, rng):
    n = max(order, 12)
    X = mat.basis_matrix("X", n)
    D = mat.basis_matrix("D", n)
    I = mat.identity(n)
    yield _cmp("commutation X D - D X = I", mat.sub(mat.mul(X, D), mat.mul(D, X)), I)
    dpow = [I, D]
    for j in range(2, 11):
        dpow.append(mat.mul(dpow[-1], D))
    for j in range(11):
        lhs = mat.sub(mat.mul(X, dpow[j]), mat.mul(dpow[j], X))
        rhs = mat.scale(j, dpow[j - 1]) if j else mat.TruncMatrix.zeros(QQ, 0, n)
        yield _cmp(f"X D^{j} - D^{j} X = {j} D^{j-1}", lhs, rhs)
    for j in range(11):
        xj = mat.x_power(j, n)
        lhs = mat.sub(mat.mul(xj, D), mat.mul(D, xj))
        rhs = mat.scale(j, mat.x_power(j - 1, n)) if j else mat.TruncMatrix.zeros(QQ, -1, n)
        yield _cmp(f"X^{j} D - D X^{j} = {j} X^{j-1}", lhs, rhs)
    for k in range(9):
        for j in range(9):
            lhs = mat.mul(mat.x_power(k, n), mat.deriv_power_scaled(j, n))
            rhs = mat.TruncMatrix.zeros(QQ, j - k, n)
            for i in range(min(j, k) + 1):
                term = mat.mul(mat.deriv_power_scaled(j - i, n), mat.x_power(k - i, n))
                rhs = mat.add(rhs, mat.scale(math.comb(k, i), term))
            yield _cmp(f"X^{k} D^{j}/{j}! expansion", lhs, rhs)


# ---------------------------------------------------------------------------
# diffop-roundtrip


def _gf_identity_holds(A, rep, order):
    """sum p_k(t) x^k/k! == exp(-t x) sum u_k(t) x^k/k! at rational t values."""
    n = min(A.valid_rows, order)
    for t in (Fraction(0), Fraction(1), Fraction(-2, 3)):
        lhs = PowerSeries(
            QQ, [rep.poly(k)(t) * Fraction(1, math.factorial(k)) for k in range(n)]
        )
        ut = PowerSeries(
            QQ,
            [mat.row_poly(A, k)(t) * Fraction(1, math.factorial(k)) for k in range(n)],
        )
        exp_neg = PowerSeries(
            QQ, [Fraction((-t) ** k, math.factorial(k)) for k in range(n)]
        )
        if not ser.gf_check(lhs, ser.ps_mul(exp_neg, ut)):
            return False
    return True


def suite_diffop_roundtrip(order, rng):
    n = min(order, 16)
    ok_round = True
    ok_gf = True
    for i in range(20):
        A = random_index0_matrix(rng, n, monic=(i % 2 == 0))
        rep = dop.decompose(A)
        if dop.reconstruct(rep, n) != A:
            ok_round = False
        if not _gf_identity_holds(A, rep, n):
            ok_gf = False
    yield _claim(f"reconstruct(decompose(A)) = A, 20 matrices at n={n}", ok_round)
    yield _claim("generating-function identity at t in {0, 1, -2/3}", ok_gf)

    n2 = 12
    ok_mul = True
    for _ in range(20):
        A = random_index0_matrix(rng, n2)
        B = random_index0_matrix(rng, n2)
        left = dop.mul_in_rep(A, dop.decompose(B))
        right = dop.decompose(mat.mul(A, B))
        if left.ps != right.ps:
            ok_mul = False
    yield _claim("mul_in_rep = decompose(A B), 20 pairs at n=12", ok_mul)

    ok_s = True
    A = random_index0_matrix(rng, 10)
    rep = dop.decompose(A)
    if dop.s_table(A) != dop.s_table_from_rep(rep):
        ok_s = False
    yield _claim("s-table: row form equals coefficient form", ok_s)

    ok_neg = True
    ranges = []
    for m in (1, 2):
        for _ in range(5):
            R = random_negative_index_matrix(rng, 12, m)
            nrep = dop.neg_decompose(R)
            if not mat.equal(dop.neg_reconstruct(nrep, 12 - m), mat.truncate(R, 12 - m)):
                ok_neg = False
            ranges.append((m, nrep.effective_k_max))
    max_needed = max(k for _, k in ranges)
    yield _claim(
        "negative-index split reconstructs exactly (10 matrices, index -1/-2)", ok_neg
    )
    yield _claim(
        f"banded part needs power terms up to k={max_needed}, beyond the band width",
        max_needed > 2,
        "expected the truncation-limited range to exceed the band width",
    )
    witness = dop.neg_decompose(mat.basis_matrix("X", 8))
    bounded = dop.neg_reconstruct(witness, 7, k_max=witness.band)
    yield _claim(
        "band-width-bounded reconstruction fails on the shift matrix (witness)",
        not mat.equal(bounded, mat.truncate(mat.basis_matrix("X", 8), 7)),
    )


# ---------------------------------------------------------------------------
# monomiality


def _example1_spec(n, ring=None):
    ring = ring or param_ring("z", "y")
    z, y = ring.gen("z"), ring.gen("y")
    c = CFactorial.squares(ring)
    g = ser.ps_exp(PowerSeries.from_poly(Poly(ring, [ring.zero, z, y]), n + 1))
    return fam.WardSpec(c, g, n)


def _example1_rational_spec(n):
    c = CFactorial.squares(QQ)
    g = ser.ps_exp(
        PowerSeries.from_poly(Poly(QQ, [0, Fraction(1, 2), Fraction(1, 3)]), n + 1)
    )
    return fam.WardSpec(c, g, n)


def suite_monomiality(order, rng):
    n = max(order, 8)
    X = mat.basis_matrix("X", n)
    D = mat.basis_matrix("D", n)

    def pair_holds(A, raising, lowering, up=None, down=None):
        up = up if up is not None else X
        down = down if down is not None else D
        return mat.equal(mat.mul(A, raising), mat.mul(up, A)) and mat.equal(
            mat.mul(A, lowering), mat.mul(down, A)
        )

    aspec = fam.AppellSpec.from_egf([1] * (n + 1), n)
    A = fam.appell_matrix(aspec)
    yield _claim(
        f"exponential family: A M = X A and A P = D A at n={n}",
        pair_holds(A, fam.appell_M(aspec), D),
    )

    bspec = fam.BinomialSpec.from_egf([0] + [1] * (n + 2), n)
    B, M, P = fam.binomial_type(bspec)
    yield _claim(f"binomial family: B M = X B and B P = D B at n={n}", pair_holds(B, M, P))

    sspec = fam.ShefferSpec.from_egf(
        [1, 1, -2, 3] + [1] * (n + 1), [0, 1, 2, -1] + [1] * (n + 1), n
    )
    S, MS, PS = fam.sheffer(sspec)
    yield _claim(f"Sheffer family: S M = X S and S P = D S at n={n}", pair_holds(S, MS, PS))

    ospec = fam.OrthoSpec(Fraction(1, 2), Fraction(-1, 3), 0, Fraction(2), Fraction(1), n)
    Ao, Lo, Mo, Po = fam.ortho_solve(ospec)
    yield _claim(f"banded-eigenproblem family at n={n}", pair_holds(Ao, Mo, Po))

    wspec = _example1_rational_spec(n)
    Aw, Mw, Pw, Lw = fam.ward_family(wspec)
    Dc, Xc = fam.ward_basis(wspec.c, n)
    yield _claim(
        f"Ward family: A M = Xc A and A P = Dc A at n={n}",
        pair_holds(Aw, Mw, Pw, up=Xc, down=Dc),
    )

    Al, Ll, Ml, Pl = fam.laguerre_general(Fraction(2), Fraction(1, 2), n)
    yield _claim(f"generalized Laguerre family at n={n}", pair_holds(Al, Ml, Pl))

    n_dual, bound = 16, 12
    dual_families = (
        ("exponential", fam.appell_matrix(fam.AppellSpec.from_egf([1] * (n_dual + 1), n_dual))),
        ("binomial", fam.binomial_type(fam.BinomialSpec.from_egf([0] + [1] * (n_dual + 2), n_dual)).B),
    )
    for label, Af in dual_families:
        Ainv = mat.invert(Af)
        Lf = mat.mul(mat.mul(Af, mat.basis_matrix("X", n_dual)), Ainv)
        ok = True
        for k in range(bound + 1):
            W = mat.matrix_poly_eval(mat.row_poly(Af, k), Lf)
            for m in range(bound + 1):
                value = W.entry(0, m) if m <= k else QQ.zero
                if value != (QQ.one if m == k else QQ.zero):
                    ok = False
        yield _claim(
            f"dual-basis biorthogonality on the {label} family, m, n <= {bound}", ok
        )

    pair = mono.monomiality_pair(random_index0_matrix(rng, n, monic=True))
    yield _claim("conjugate pair of a random monic matrix verifies", mono.verify_monomiality(pair))
    perturbed = mat.add(
        pair.M,
        TruncMatrix.build(QQ, 0, pair.M.valid_rows, lambda j, k: QQ.one if (j, k) == (1, 1) else QQ.zero),
    )
    broken = mono.MonomialityPair(pair.source, perturbed, pair.P, pair.L, pair.Q)
    yield _claim("a perturbed raising matrix is rejected", not mono.verify_monomiality(broken))


# ---------------------------------------------------------------------------
# appell


def suite_appell(order, rng):
    n = max(order, 10)
    X = mat.basis_matrix("X", n)
    D = mat.basis_matrix("D", n)
    coeffs = [Fraction(1)] + [random_rational(rng, 5, 5) for _ in range(n)]
    spec = fam.AppellSpec.from_egf(coeffs, n)
    A = fam.appell_matrix(spec)
    M = fam.appell_M(spec)
    L = fam.appell_L(spec)
    Ainv = mat.invert(A)
    yield _cmp("closed M equals the conjugate", M, mat.mul(mat.mul(Ainv, X), A))
    yield _cmp("closed L equals the conjugate", L, mat.mul(mat.mul(A, X), Ainv))
    yield _cmp("L + M = 2X", mat.add(L, M), mat.scale(2, X))
    yield _cmp("P = D", mat.mul(mat.mul(Ainv, D), A), mat.truncate(D, n))

    ok = all(
        mat.row_poly(A, k).derivative() == k * mat.row_poly(A, k - 1)
        for k in range(1, n)
    )
    yield _claim("row derivative lowers the index: u_k' = k u_{k-1}", ok)

    pair = mono.monomiality_pair(A)
    yield _cmp("Q P = I (integration conjugate is a left inverse)",
               mat.mul(pair.Q, pair.P), mat.identity(n))
    Qc = mono.coordinate_lowering(A)
    lhs = mat.sub(mat.mul(pair.L, Qc), mat.mul(Qc, pair.L))
    yield _cmp("L Q - Q L = I for the coordinate-side pair", lhs, mat.identity(n))

    f1, f2 = random_rational(rng, 5, 5), random_rational(rng, 5, 5)
    nr = max(order, 22)
    Ao, Lo = fam.appell_orthogonal(Fraction(1), f1, f2, nr)
    h0, h1 = f1, f2 - f1 * f1
    ok = True
    for k in range(1, min(21, nr - 1)):
        u_km1, u_k, u_kp1 = (mat.row_poly(Ao, k - 1), mat.row_poly(Ao, k), mat.row_poly(Ao, k + 1))
        lhs = u_k.shift(1) + (k * h1) * u_km1 + h0 * u_k - u_kp1
        if not lhs.is_zero():
            ok = False
    yield _claim("three-term recurrence for the linear-log-derivative family, n <= 20", ok)
    yield _claim("its L is tridiagonal", mat.occupied_diagonals(Lo) <= {-1, 0, 1})

    quad = fam.AppellSpec(
        ser.ps_exp(PowerSeries.from_poly(Poly(QQ, [0, 1, 1, 1]), n + 1)), n
    )
    Lq = fam.appell_L(quad)
    yield _claim(
        "degree-2 log-derivative breaks tridiagonality (negative control)",
        not (mat.occupied_diagonals(Lq) <= {-1, 0, 1}),
    )

    t = Fraction(1)
    ut = PowerSeries(QQ, [mat.row_poly(A, k)(t) * Fraction(1, math.factorial(k)) for k in range(n)])
    etz = PowerSeries(QQ, [Fraction(t**k, math.factorial(k)) for k in range(n)])
    yield _claim(
        "exponential generating function matches the rows at t=1",
        ser.gf_check(ser.ps_mul(spec.f.truncate(n), etz), ut),
    )


# ---------------------------------------------------------------------------
# binomial


def suite_binomial(order, rng):
    n = max(order, 10)
    X = mat.basis_matrix("X", n)
    D = mat.basis_matrix("D", n)
    egf = [0, 1] + [random_rational(rng, 5, 5) for _ in range(n + 2)]
    spec = fam.BinomialSpec.from_egf(egf, n)
    B, M, P = fam.binomial_type(spec)
    Binv = mat.invert(B)
    yield _cmp("closed M = (1/ftilde')(D) X equals the conjugate", M, mat.mul(mat.mul(Binv, X), B))
    yield _cmp("closed P = ftilde(D) equals the conjugate", P, mat.mul(mat.mul(Binv, D), B))

    ftilde = ser.ps_reversion(spec.f)
    ratio = ser.ps_div(ftilde.truncate(ftilde.order - 1), ser.ps_derivative(ftilde))
    yield _cmp(
        "P M = (ftilde/ftilde')(D) X",
        mat.mul(P, M),
        mat.mul(ser.series_of_matrix(ratio, D), X),
    )

    Cf = fam.composition_matrix(spec.f, n)
    Cft = fam.composition_matrix(ftilde, n)
    yield _cmp("composition matrix of the reversion inverts C_f", mat.mul(Cf, Cft), mat.identity(n))

    t, x = Fraction(1), Fraction(2)
    ok = True
    for m in range(min(n, 11)):
        lhs = mat.row_poly(B, m)(t + x)
        rhs = QQ.zero
        for k in range(m + 1):
            rhs += math.comb(m, k) * mat.row_poly(B, k)(t) * mat.row_poly(B, m - k)(x)
        if lhs != rhs:
            ok = False
    yield _claim("binomial convolution identity at t=1, x=2, n <= 10", ok)

    t = Fraction(-2, 3)
    ut = PowerSeries(QQ, [mat.row_poly(B, k)(t) * Fraction(1, math.factorial(k)) for k in range(n)])
    lhs = ser.ps_exp(t * spec.f.truncate(n))
    yield _claim(
        "exponential of t f(z) generates the rows at t=-2/3", ser.gf_check(lhs, ut)
    )


# ---------------------------------------------------------------------------
# sheffer


def suite_sheffer(order, rng):
    n = max(order, 10)
    X = mat.basis_matrix("X", n)
    D = mat.basis_matrix("D", n)
    g_egf = [1] + [random_rational(rng, 5, 5) for _ in range(n + 2)]
    f_egf = [0, 1] + [random_rational(rng, 5, 5) for _ in range(n + 2)]
    spec = fam.ShefferSpec.from_egf(g_egf, f_egf, n)
    S, MS, PS = fam.sheffer(spec)
    Sinv = mat.invert(S)
    yield _cmp("closed M_S equals the conjugate", MS, mat.mul(mat.mul(Sinv, X), S))
    yield _cmp("closed P_S equals the conjugate", PS, mat.mul(mat.mul(Sinv, D), S))

    ftilde = ser.ps_reversion(spec.f)
    ratio = ser.ps_div(ftilde.truncate(ftilde.order - 1), ser.ps_derivative(ftilde))
    gh = ser.ps_div(ser.ps_derivative(spec.g), spec.g.truncate(spec.g.order - 1))
    rhs = mat.mul(
        ser.series_of_matrix(ratio, D),
        mat.add(ser.series_of_matrix(gh, D), X),
    )
    yield _cmp("P_S M_S = (ftilde/ftilde')(D) ((g'/g)(D) + X)", mat.mul(PS, MS), rhs)

    g2 = [1] + [random_rational(rng, 4, 4) for _ in range(n + 2)]
    f2 = [0, 1] + [random_rational(rng, 4, 4) for _ in range(n + 2)]
    S2 = fam.sheffer(fam.ShefferSpec.from_egf(g2, f2, n)).S
    prod = mat.mul(S, S2)
    diag_ok = mat.index_of(prod) == 0 and all(
        QQ.is_unit(prod.entry(j, j)) for j in range(prod.valid_rows)
    )
    P3 = mat.mul(mat.mul(mat.invert(prod), D), prod)
    Finv = mat.basis_matrix("Finv", n)
    Fm = mat.basis_matrix("F", n)
    T = mat.mul(mat.mul(Finv, P3), Fm)
    toeplitz = all(
        T.entry(j, k) == T.entry(j - k, 0)
        for j in range(T.valid_rows)
        for k in range(j + 1)
    )
    delta = all(QQ.is_zero(T.entry(j, j)) for j in range(T.valid_rows))
    yield _claim(
        "the product of two Sheffer matrices is Sheffer (unit diagonal, delta P)",
        diag_ok and toeplitz and delta,
    )

    Rm = fam.riordan_matrix(spec.g, spec.f, n)
    yield _cmp(
        "factorial conjugation carries the Riordan form to the Sheffer matrix",
        mat.mul(mat.mul(Fm, Rm), Finv),
        S,
    )
    yield _claim(
        "column 0 of the Riordan form holds g composed with f",
        mat.col_series(Rm, 0) == ser.ps_compose(spec.g.truncate(n), spec.f.truncate(n)),
    )
    Rg = fam.riordan_matrix(spec.g, PowerSeries.x(QQ, n + 1), n)
    yield _claim(
        "with f = z the Riordan form is Toeplitz with column 0 = g",
        mat.col_series(Rg, 0) == spec.g.truncate(n),
    )


# ---------------------------------------------------------------------------
# ortho7


def suite_ortho7(order, rng, f0=None, f1=None, f2=None, g0=None, g1=None):
    n = max(order, 12)
    fixed = all(v is not None for v in (f0, f1, g0, g1))
    trials = 1 if fixed else 5
    for trial in range(trials):
        if fixed:
            spec = fam.OrthoSpec(f0, f1, f2 or 0, g0, g1, n)
        else:
            g1v = Fraction(0)
            while not g1v:
                g1v = random_rational(rng, 5, 5)
            spec = fam.OrthoSpec(
                random_rational(rng, 5, 5),
                random_rational(rng, 5, 5),
                0,
                random_rational(rng, 5, 5),
                g1v,
                n,
            )
        A, L, M, P = fam.ortho_solve(spec)
        B, hs = fam.ortho_operator(spec)
        H = TruncMatrix.build(QQ, 0, n, lambda j, k: hs[j] if j == k else QQ.zero)
        tag = f"set {trial}"
        yield _cmp(f"A B = H A exactly ({tag})", mat.mul(A, B), mat.mul(H, A))
        yield _cmp(f"L matches the tridiagonal closed form ({tag})", L, fam.ortho_L_closed(spec))
        yield _cmp(f"M matches the tetradiagonal closed form ({tag})", M, fam.ortho_M_closed(spec))
        yield _cmp(f"P matches D exp(-f1/(2 g1) D) ({tag})", P, fam.ortho_P_closed(spec))
        yield _claim(f"L is tridiagonal ({tag})", mat.occupied_diagonals(L) <= {-1, 0, 1})

    spec = fam.OrthoSpec(Fraction(1, 2), Fraction(-2, 3), Fraction(3, 5), 1, 2, min(n, 14))
    A, L, M, P = fam.ortho_solve(spec)
    B, hs = fam.ortho_operator(spec)
    H = TruncMatrix.build(QQ, 0, spec.n, lambda j, k: hs[j] if j == k else QQ.zero)
    yield _cmp("A B = H A with a quadratic band (f2 != 0)", mat.mul(A, B), mat.mul(H, A))
    yield _claim("L stays tridiagonal with f2 != 0", mat.occupied_diagonals(L) <= {-1, 0, 1})


# ---------------------------------------------------------------------------
# ward


def suite_ward(order, rng):
    n = max(min(order, 16), 10)
    for c, label in (
        (CFactorial.squares(), "squares"),
        (CFactorial.q_numbers(Fraction(2)), "q=2"),
        (CFactorial.q_numbers(Fraction(1, 3)), "q=1/3"),
    ):
        Dc, Xc = fam.ward_basis(c, n)
        lhs = mat.sub(mat.mul(Xc, Dc), mat.mul(Dc, Xc))
        yield _cmp(f"Xc Dc - Dc Xc = I for c = {label}", lhs, mat.identity(n))

    c = CFactorial.squares()
    Dc, Xc = fam.ward_basis(c, n)
    D = mat.basis_matrix("D", n)
    X = mat.basis_matrix("X", n)
    yield _cmp("Xc D = I for the squares sequence", mat.mul(Xc, D), mat.identity(n))
    yield _cmp("Dc = D X D for the squares sequence", Dc, mat.mul(mat.mul(D, X), D))

    spec = _example1_rational_spec(n)
    A, M, P, L = fam.ward_family(spec)
    yield _cmp("L - Xc = -(M - Xc)", mat.sub(L, Xc), mat.scale(-1, mat.sub(M, Xc)))
    yield _claim("L of the linear-log-derivative Ward family is tridiagonal",
                 mat.occupied_diagonals(L) <= {-1, 0, 1})
    Ainv = mat.invert(A)
    yield _cmp("L equals the conjugate through Xc", L, mat.mul(mat.mul(A, Xc), Ainv))

    mult_by_t = mat.mul(mat.mul(A, X), Ainv)
    yield _claim(
        "multiplication by t in family coordinates is NOT tridiagonal for c = k^2",
        not (mat.occupied_diagonals(mult_by_t) <= {-1, 0, 1}),
    )

    cubic = CFactorial.from_poly([1, 1, 1])
    gc = ser.ps_exp(PowerSeries.from_poly(Poly(QQ, [0, Fraction(1, 2)]), n + 1))
    Ac = fam.ward_family(fam.WardSpec(cubic, gc, n)).A
    Lc = mat.mul(mat.mul(Ac, X), mat.invert(Ac))
    yield _claim(
        "a cubic factorial sequence breaks orthogonality (L not tridiagonal)",
        not (mat.occupied_diagonals(Lc) <= {-1, 0, 1}),
    )

    v, u = fam.ward_to_hermite(spec)
    yield _claim(
        "factorial reweighting of the plain-derivative rows reproduces the family",
        all(u[k] == mat.row_poly(A, k) for k in range(n)),
    )

    ec = ser.c_exponential(CFactorial.integers(), n)
    plain = PowerSeries(QQ, [Fraction(1, math.factorial(k)) for k in range(n)])
    yield _claim("the factorial exponential with c_k = k is exp", ec == plain)

    t = Fraction(1)
    gz = spec.g.truncate(n)
    ect = PowerSeries(QQ, [t**k * c.inv_factorial(k) for k in range(n)])
    rows = PowerSeries(QQ, [mat.row_poly(A, k)(t) * c.inv_factorial(k) for k in range(n)])
    yield _claim(
        "g(z) e_c(t z) generates the rows at t=1",
        ser.gf_check(ser.ps_mul(gz, ect), rows),
    )


# ---------------------------------------------------------------------------
# examples


def suite_examples(order, rng):
    ring = param_ring("z", "y")
    z, y = ring.gen("z"), ring.gen("y")
    n = max(min(order, 16), 6)
    spec = _example1_spec(n, ring)
    A, M, P, L = fam.ward_family(spec)
    Dc, Xc = fam.ward_basis(spec.c, n)
    I = mat.identity(n, ring)
    t = Poly(ring, [ring.zero, ring.one])

    u1 = t + Poly(ring, [z])
    u2 = t * t + (4 * z) * t + Poly(ring, [2 * z * z + 4 * y])
    u3 = (
        t * t * t
        + (9 * z) * (t * t)
        + Poly(ring, [ring.zero, 18 * z * z + 36 * y])
        + Poly(ring, [6 * z * z * z + 36 * y * z])
    )
    yield _claim("first example, u_1 = t + z", mat.row_poly(A, 1) == u1)
    yield _claim("first example, u_2 = t^2 + 4zt + 2z^2 + 4y", mat.row_poly(A, 2) == u2)
    yield _claim(
        "first example, u_3 = t^3 + 9zt^2 + (18z^2 + 36y)t + 6z^3 + 36yz",
        mat.row_poly(A, 3) == u3,
    )
    closed = mat.add(Xc, mat.add(mat.scale(z, I), mat.scale(2 * y, Dc)))
    yield _cmp("first example, M = Xc + z I + 2y Dc (validated coefficient)", M, closed)
    Ainv = mat.invert(A)
    yield _cmp("first example, M agrees with the conjugate", M, mat.mul(mat.mul(Ainv, Xc), A))

    ok = True
    AXc = mat.mul(A, Xc)
    for k in range(1, n - 1):
        lhs = (
            (-2 * y) * (k * k) * mat.row_poly(A, k - 1)
            - z * mat.row_poly(A, k)
            + Fraction(1, k + 1) * mat.row_poly(A, k + 1)
        )
        if lhs != mat.row_poly(AXc, k):
            ok = False
    yield _claim("first example, integro-recurrence holds as displayed", ok)

    n16 = 16
    Xn = mat.basis_matrix("X", n16)
    Dn = mat.basis_matrix("D", n16)
    In = mat.identity(n16)
    for av in (2, 3, 5):
        a = Fraction(av)
        A2, L2, M2, P2 = fam.laguerre_general(a, 1 / a, n16)
        jac = mat.add(
            mat.add(
                mat.scale(1 + a, In),
                mat.mul(Dn, mat.add(mat.scale(1 + a, In), mat.scale(2, Xn))),
            ),
            mat.add(mat.mul(mat.mul(Dn, Dn), Xn), Xn),
        )
        conj = mat.mul(mat.mul(A2, Xn), mat.invert(A2))
        yield _cmp(f"second example, y=1/a with a={av}: Laguerre coordinate matrix", conj, jac)

    ring2 = param_ring("a", "y")
    a, yv = ring2.gen("a"), ring2.gen("y")
    n14 = 14
    A3, L3, M3, P3 = fam.laguerre_general(a, yv, n14, ring2)
    Ainv3 = mat.invert(A3)
    X14 = mat.basis_matrix("X", n14, ring2)
    D14 = mat.basis_matrix("D", n14, ring2)
    yield _cmp("second example, symbolic closed L vs conjugation", L3, mat.mul(mat.mul(A3, X14), Ainv3))
    yield _cmp("second example, symbolic closed M vs conjugation", M3, mat.mul(mat.mul(Ainv3, X14), A3))
    yield _cmp("second example, symbolic closed P vs conjugation", P3, mat.mul(mat.mul(Ainv3, D14), A3))

    for qv in (Fraction(2), Fraction(1, 3)):
        c = CFactorial.q_numbers(qv)
        f1v, f2v = Fraction(1, 3), Fraction(2, 5)
        two = c.c(2)
        h1 = (2 * f2v - two * f1v * f1v) / two
        g = ser.ps_exp(
            PowerSeries.from_poly(Poly(QQ, [0, f1v, h1 * Fraction(1, 2)]), 11)
        )
        wspec = fam.WardSpec(c, g, 10)
        Aq, Mq, Pq, Lq = fam.ward_family(wspec)
        Dq, Xq = fam.ward_basis(c, 10)
        closed = mat.add(
            Xq, mat.add(mat.scale(f1v, mat.identity(10)), mat.scale(h1, Dq))
        )
        yield _cmp(f"third example, q={qv}: M = Xc + f1 I + ((2f2-[2]f1^2)/[2]) Dc", Mq, closed)
        ok = True
        for k in range(1, 10):
            p = Poly(QQ, [0] * k + [1])
            if fam.jackson_derivative(p, qv) != Poly(QQ, [0] * (k - 1) + [c.c(k)]):
                ok = False
        yield _claim(f"third example, q={qv}: the q-derivative matches the Dc row action", ok)


SUITES = {
    "pincherle": suite_pincherle,
    "diffop-roundtrip": suite_diffop_roundtrip,
    "monomiality": suite_monomiality,
    "appell": suite_appell,
    "binomial": suite_binomial,
    "sheffer": suite_sheffer,
    "ortho7": suite_ortho7,
    "ward": suite_ward,
    "examples": suite_examples,
}


def check_suite(name, order=12, seed=0, **kwargs):
    """Run one suite (or 'all') and return its reports."""
    if name == "all":
        reports = []
        for key in SUITES:
            reports.extend(check_suite(key, order=order, seed=seed))
        return reports
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    rng = random.Random(seed)
    return list(SUITES[name](order, rng, **kwargs))
