"""Raising/lowering conjugates, dual-basis functionals, one-sided inverses."""

import math
import random
from fractions import Fraction

import pytest

from opcalc import diffop as dop
from opcalc import matrix as mat
from opcalc import monomial as mono
from opcalc import series as ser
from opcalc.checks import random_index0_matrix
from opcalc.coeff import Poly, QQ
from opcalc.families import AppellSpec, appell_matrix
from opcalc.matrix import NotInGroupError
from opcalc.series import PowerSeries

N = 12


def exp_family(n):
    return appell_matrix(AppellSpec.from_egf([1] * (n + 1), n))


def test_identity_pair():
    pair = mono.monomiality_pair(mat.identity(N))
    assert pair.M == mat.basis_matrix("X", N)
    assert pair.P == mat.basis_matrix("D", N)
    assert pair.L == mat.basis_matrix("X", N)
    assert pair.Q == mat.basis_matrix("J", N)
    assert mono.verify_monomiality(pair)


def test_exponential_family_pair():
    A = exp_family(N)
    pair = mono.monomiality_pair(A)
    assert pair.P == mat.truncate(mat.basis_matrix("D", N), N)
    assert mono.verify_monomiality(pair)
    # row action: applying M's rows to u_k climbs the family
    AM = mat.mul(A, pair.M)
    for k in range(N - 1):
        assert mat.row_poly(AM, k) == mat.row_poly(A, k + 1)


def test_pair_needs_group_membership():
    with pytest.raises(NotInGroupError):
        mono.monomiality_pair(mat.basis_matrix("Xhat", N))


def test_perturbed_pair_fails():
    A = exp_family(N)
    pair = mono.monomiality_pair(A)
    bump = mat.TruncMatrix.build(
        QQ, 0, pair.M.valid_rows, lambda j, k: QQ.one if (j, k) == (2, 1) else QQ.zero
    )
    broken = mono.MonomialityPair(A, mat.add(pair.M, bump), pair.P, pair.L, pair.Q)
    assert not mono.verify_monomiality(broken)


def test_q_is_left_inverse_of_p():
    rng = random.Random(0)
    A = random_index0_matrix(rng, N)
    pair = mono.monomiality_pair(A)
    assert mat.mul(pair.Q, pair.P) == mat.identity(N)


def test_commutator_of_coordinate_pair():
    rng = random.Random(1)
    A = random_index0_matrix(rng, N, monic=True)
    pair = mono.monomiality_pair(A)
    Qc = mono.coordinate_lowering(A)
    lhs = mat.sub(mat.mul(pair.L, Qc), mat.mul(Qc, pair.L))
    assert lhs == mat.identity(N)


def test_monic_matrices_keep_shift_shape():
    rng = random.Random(2)
    A = random_index0_matrix(rng, N, monic=True)
    pair = mono.monomiality_pair(A)
    X = mat.basis_matrix("X", N)
    D = mat.basis_matrix("D", N)
    assert mat.index_of(mat.sub(pair.M, X)) >= 0
    assert mat.index_of(mat.sub(D, mat.truncate(pair.P, N))) >= 0


def test_pair_via_coefficient_polynomials():
    # M = X + A^-1 sum (D^k/k!) p_{k+1}(X); P = D - A^-1 sum (D^k/k!) p_k'(X)
    rng = random.Random(3)
    A = random_index0_matrix(rng, N, monic=True)
    rep = dop.decompose(A)
    Ainv = mat.invert(A)
    pair = mono.monomiality_pair(A)
    X = mat.basis_matrix("X", N)
    D = mat.basis_matrix("D", N)
    up = dop.reconstruct(dop.pincherle_x(rep), N - 1)
    assert mat.add(X, mat.mul(Ainv, up)) == pair.M
    down = dop.reconstruct(dop.pincherle_d(rep), N)
    assert mat.sub(D, mat.mul(Ainv, down)) == pair.P


def test_dual_functional_identity_family():
    for m in range(6):
        for k in range(6):
            w = Poly(QQ, [0] * k + [1])
            assert mono.dual_functional(mat.identity(N), m, w) == (1 if m == k else 0)
    assert mono.dual_functional(mat.identity(N), 0, Poly.one(QQ)) == 1


def test_dual_functional_biorthogonality():
    A = exp_family(N)
    for m in range(6):
        for k in range(6):
            w = mat.row_poly(A, k)
            assert mono.dual_functional(A, m, w) == (1 if m == k else 0)


def test_dual_functional_of_constant():
    rng = random.Random(4)
    A = random_index0_matrix(rng, N, monic=True)
    assert mono.dual_functional(A, 0, Poly.one(QQ)) == 1


def test_right_inverse():
    assert mono.right_inverse_of_M(mat.identity(N)) == mat.basis_matrix("Xhat", N)
    A = exp_family(16)
    pair = mono.monomiality_pair(A)
    Ninv = mono.right_inverse_of_M(A)
    assert mat.mul(pair.M, Ninv) == mat.identity(15)
    # not a left inverse: N M = A^-1 J0 A
    Ainv = mat.invert(A)
    J0 = mat.basis_matrix("J0", 16)
    assert mat.mul(Ninv, pair.M) == mat.mul(mat.mul(Ainv, J0), A)


def test_appell_l_plus_m():
    spec = AppellSpec.from_egf([1, 2, 3, 1, 1, 2, 1, 5, 1, 1, 1, 1, 1], N)
    A = appell_matrix(spec)
    pair = mono.monomiality_pair(A)
    X = mat.basis_matrix("X", N)
    assert mat.add(pair.L, pair.M) == mat.scale(2, X)


def test_monic_rescale():
    rng = random.Random(5)
    A = random_index0_matrix(rng, N)
    scaled = mono.monic_rescale(A)
    assert mat.is_monic(scaled)
    assert mono.verify_monomiality(mono.monomiality_pair(scaled))
