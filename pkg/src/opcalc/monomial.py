"""Raising/lowering operator pairs attached to an invertible matrix.

For A in the group of unit-diagonal index-0 matrices, conjugation produces
the four companions

    M = A^-1 X A    raising:   row action sends u_k to u_{k+1}
    P = A^-1 D A    lowering:  row action sends u_k to k u_{k-1}
    L = A X A^-1    multiplication by t in the u_k coordinate basis
    Q = A^-1 J A    a left inverse of P (integration conjugate)

where u_k are the row polynomials of A.  The dual-basis functionals of the
sequence evaluate polynomials at L and read the first row.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import matrix as mat
from .matrix import NotInGroupError, TruncMatrix

__all__ = [
    "MonomialityPair",
    "monomiality_pair",
    "verify_monomiality",
    "dual_functional",
    "coordinate_lowering",
    "right_inverse_of_M",
    "monic_rescale",
]


@dataclass(frozen=True)
class MonomialityPair:
    source: TruncMatrix
    M: TruncMatrix
    P: TruncMatrix
    L: TruncMatrix
    Q: TruncMatrix


def _group_inverse(A):
    try:
        return mat.invert(A)
    except NotInGroupError:
        raise NotInGroupError(
            "monomiality companions need an index-0 matrix with unit diagonal"
        ) from None


def monomiality_pair(A):
    """All four conjugates of A; valid rows shrink by one where X is involved."""
    n = A.valid_rows
    ring = A.ring
    Ainv = _group_inverse(A)
    X = mat.basis_matrix("X", n, ring)
    D = mat.basis_matrix("D", n, ring)
    J = mat.basis_matrix("J", n, ring)
    M = mat.mul(mat.mul(Ainv, X), A)
    P = mat.mul(mat.mul(Ainv, D), A)
    L = mat.mul(mat.mul(A, X), Ainv)
    Q = mat.mul(mat.mul(Ainv, J), A)
    return MonomialityPair(A, M, P, L, Q)


def verify_monomiality(pair):
    """True iff A M = X A and A P = D A hold on the common valid corners."""
    A = pair.source
    n = A.valid_rows
    ring = A.ring
    X = mat.basis_matrix("X", n, ring)
    D = mat.basis_matrix("D", n, ring)
    if not mat.equal(mat.mul(A, pair.M), mat.mul(X, A)):
        return False
    if not mat.equal(mat.mul(A, pair.P), mat.mul(D, A)):
        return False
    return True


def dual_functional(A, m, w):
    """The m-th dual-basis functional applied to the polynomial w.

    Evaluates w at L = A X A^-1 and reads entry (0, m); on the row
    polynomials of a monic A this gives exactly the Kronecker delta.
    """
    if m < 0:
        raise IndexError("functional index must be nonnegative")
    Ainv = _group_inverse(A)
    L = mat.mul(mat.mul(A, mat.basis_matrix("X", A.valid_rows, A.ring)), Ainv)
    W = mat.matrix_poly_eval(w, L)
    if m > w.degree:
        return A.ring.zero
    return W.entry(0, m)


def coordinate_lowering(A):
    """A D A^-1: the lowering matrix in family coordinates.

    Together with L it closes the commutator L Q - Q L = I; it is the
    raising/lowering pair of the inverse family, not the Q of the pair
    (which conjugates the other way and is only a one-sided inverse).
    """
    Ainv = _group_inverse(A)
    D = mat.basis_matrix("D", A.valid_rows, A.ring)
    return mat.mul(mat.mul(A, D), Ainv)


def right_inverse_of_M(A):
    """A^-1 Xhat A: a right (not two-sided) inverse of the raising matrix."""
    Ainv = _group_inverse(A)
    Xhat = mat.basis_matrix("Xhat", A.valid_rows, A.ring)
    return mat.mul(mat.mul(Ainv, Xhat), A)


def monic_rescale(A):
    """Rescale rows by the inverse diagonal, making the matrix monic."""
    ring = A.ring
    rows = []
    for j, row in enumerate(A.rows):
        d = A.entry(j, j)
        if not ring.is_unit(d):
            raise NotInGroupError(f"diagonal entry at ({j}, {j}) is not a unit")
        inv = ring.inv(d)
        rows.append([inv * x for x in row])
    return TruncMatrix(ring, A.index_bound, rows, coerce=False)
