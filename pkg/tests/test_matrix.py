"""The truncated Hessenberg algebra: basis elements, products, inverses."""

import math
import random
from fractions import Fraction

import pytest

from opcalc import matrix as mat
from opcalc.checks import random_index0_matrix, random_rational
from opcalc.coeff import Poly, QQ, RingMismatchError, param_ring
from opcalc.matrix import (
    NotInGroupError,
    TruncationError,
    TruncMatrix,
    basis_matrix,
    identity,
)

N = 10


def test_basis_products():
    X = basis_matrix("X", N)
    Xh = basis_matrix("Xhat", N)
    D = basis_matrix("D", N)
    assert mat.mul(X, Xh) == identity(N)
    assert mat.mul(Xh, X) == basis_matrix("J0", N)
    assert mat.mul(X, D) == basis_matrix("N", N)
    DX = mat.mul(D, X)
    assert all(DX.entry(k, k) == k for k in range(N))


def test_unknown_basis_name():
    with pytest.raises(KeyError):
        basis_matrix("Z", N)


def test_commutation():
    X = basis_matrix("X", N)
    D = basis_matrix("D", N)
    assert mat.sub(mat.mul(X, D), mat.mul(D, X)) == identity(N)


def test_add_scale_trivials():
    A = random_index0_matrix(random.Random(1), N)
    zero = TruncMatrix.zeros(QQ, 0, N)
    assert mat.add(A, zero) == A
    assert mat.add(mat.scale(2, identity(N)), mat.scale(-2, identity(N))) == zero


def test_mul_identity_preserves_valid_rows():
    A = random_index0_matrix(random.Random(2), N)
    prod = mat.mul(A, identity(N))
    assert prod is not A and prod == A
    assert prod.valid_rows == N


def _dense_product(A, B, size):
    """Schoolbook oracle on a dense square corner."""
    a = [[A.entry(j, k) if k <= j - A.index_bound else Fraction(0) for k in range(size)]
         for j in range(size)]
    b = [[B.entry(j, k) if k <= j - B.index_bound else Fraction(0) for k in range(size)]
         for j in range(size)]
    return [
        [sum(a[i][j] * b[j][k] for j in range(size)) for k in range(size)]
        for i in range(size)
    ]


def test_mul_matches_dense_oracle():
    rng = random.Random(3)
    A = random_index0_matrix(rng, 8)
    B = random_index0_matrix(rng, 8)
    C = mat.mul(A, B)
    dense = _dense_product(A, B, 8)
    for i in range(8):
        for k in range(i + 1):
            assert C.entry(i, k) == dense[i][k]


def test_mul_valid_rows_rule():
    X = basis_matrix("X", N)
    D = basis_matrix("D", N)
    assert mat.mul(X, X).valid_rows == N - 1   # negative index eats a row
    assert mat.mul(D, D).valid_rows == N       # positive index restores it
    with pytest.raises(TruncationError):
        A = mat.x_power(5, 4)
        mat.mul(A, A)  # no exactly-known rows remain


def test_mixed_ring_mul_rejected():
    A = identity(N)
    B = identity(N, param_ring("z"))
    with pytest.raises(RingMismatchError):
        mat.mul(A, B)


def test_index_of():
    assert mat.index_of(basis_matrix("X", N)) == -1
    assert mat.index_of(basis_matrix("D", N)) == 1
    assert mat.index_of(TruncMatrix.zeros(QQ, -2, N)) == math.inf


def test_index_of_product_bound():
    rng = random.Random(4)
    for _ in range(10):
        A = random_index0_matrix(rng, 8)
        B = random_index0_matrix(rng, 8)
        assert mat.index_of(mat.mul(A, B)) >= mat.index_of(A) + mat.index_of(B)


def test_invert_basics():
    assert mat.invert(identity(N)) == identity(N)
    F = basis_matrix("F", N)
    assert mat.mul(mat.invert(F), F) == identity(N)
    assert mat.invert(F) == basis_matrix("Finv", N)


def test_invert_random_and_group_errors():
    rng = random.Random(5)
    A = random_index0_matrix(rng, N)
    assert mat.mul(A, mat.invert(A)) == identity(N)
    assert mat.mul(mat.invert(A), A) == identity(N)
    bad = TruncMatrix.build(QQ, 0, N, lambda j, k: Fraction(0) if j == k == 2 else (Fraction(1) if j == k else Fraction(0)))
    with pytest.raises(NotInGroupError):
        mat.invert(bad)
    with pytest.raises(NotInGroupError):
        mat.invert(basis_matrix("X", N))


def test_unique_conjugates():
    # A (A^-1 U A) = U A and (A U A^-1) A = A U
    rng = random.Random(6)
    A = random_index0_matrix(rng, N)
    U = random_index0_matrix(rng, N)
    Ainv = mat.invert(A)
    Ur = mat.mul(mat.mul(Ainv, U), A)
    Ul = mat.mul(mat.mul(A, U), Ainv)
    assert mat.mul(A, Ur) == mat.mul(U, A)
    assert mat.mul(Ul, A) == mat.mul(A, U)


def test_row_poly():
    assert mat.row_poly(identity(N), 3) == Poly(QQ, [0, 0, 0, 1])
    assert mat.row_poly(basis_matrix("F", N), 2) == Poly(QQ, [0, 0, 2])
    with pytest.raises(IndexError):
        mat.row_poly(identity(N), N)


def test_col_series():
    ones = mat.col_series(identity(N), 0)
    assert ones.coeffs[0] == 1 and all(c == 0 for c in ones.coeffs[1:])
    xcol = mat.col_series(basis_matrix("Xhat", N), 0)
    assert xcol.coeffs[1] == 1 and xcol.coeffs[0] == 0
    with pytest.raises(IndexError):
        mat.col_series(identity(N), N)


def test_apply_to_poly_uses_rows():
    p = Poly(QQ, [1, 2, 0, 5])
    assert mat.apply_to_poly(identity(N), p) == p
    # row k of X holds t^{k+1}; row k of Xhat holds t^{k-1}
    assert mat.apply_to_poly(basis_matrix("X", N), Poly(QQ, [0, 0, 1])) == Poly(QQ, [0, 0, 0, 1])
    assert mat.apply_to_poly(basis_matrix("Xhat", N), Poly(QQ, [0, 0, 1])) == Poly(QQ, [0, 1])
    with pytest.raises(TruncationError):
        mat.apply_to_poly(basis_matrix("X", N), Poly(QQ, [0] * (N - 1) + [1]))


def test_apply_to_poly_derivative_rows():
    # rows of a series in D implement the constant-coefficient operator
    from opcalc.families import AppellSpec, appell_matrix

    k = 6
    spec = AppellSpec.from_egf([1, 1, 1, 1, 1, 1, 1], N)
    A = appell_matrix(spec)
    image = mat.apply_to_poly(A, Poly(QQ, [0] * k + [1]))
    assert image == Poly(QQ, [math.comb(k, j) for j in range(k + 1)])


def test_matrix_poly_eval():
    X = basis_matrix("X", N)
    assert mat.matrix_poly_eval(Poly.one(QQ), X) == identity(N)
    assert mat.matrix_poly_eval(Poly.t(QQ), X) == X
    w = Poly(QQ, [2, 0, 1])
    W = mat.matrix_poly_eval(w, X)
    assert W == mat.add(mat.scale(2, identity(N)), mat.x_power(2, N))


def test_shift_semantics():
    rng = random.Random(7)
    A = random_index0_matrix(rng, N)
    X = basis_matrix("X", N)
    Xh = basis_matrix("Xhat", N)
    D = basis_matrix("D", N)
    AX = mat.mul(A, X)
    AXh = mat.mul(A, Xh)
    AD = mat.mul(A, D)
    DA = mat.mul(D, A)
    for k in range(1, N - 1):
        u = mat.row_poly(A, k)
        assert mat.row_poly(AX, k) == u.shift(1)
        assert mat.row_poly(AXh, k) == Poly(QQ, u.coeffs[1:])
        assert mat.row_poly(AD, k) == u.derivative()
        assert mat.row_poly(DA, k) == k * mat.row_poly(A, k - 1)


def test_associativity_on_common_corner():
    rng = random.Random(8)
    A = random_index0_matrix(rng, 8)
    B = mat.add(random_index0_matrix(rng, 8), basis_matrix("X", 8))
    C = random_index0_matrix(rng, 8)
    assert mat.mul(mat.mul(A, B), C) == mat.mul(A, mat.mul(B, C))


def test_monicity_and_diagonals():
    X = basis_matrix("X", N)
    assert mat.is_monic(X)
    assert mat.occupied_diagonals(X) == {-1}
    A = mat.add(X, basis_matrix("D", N))
    assert mat.occupied_diagonals(A) == {-1, 1}


def test_json_round_trip():
    rng = random.Random(9)
    A = random_index0_matrix(rng, 6)
    assert mat.matrix_from_json(mat.matrix_to_json(A)) == A
    R = param_ring("z")
    B = mat.scale(R.gen("z"), identity(5, R))
    again = mat.matrix_from_json(mat.matrix_to_json(B))
    assert again == B and again.ring == R
