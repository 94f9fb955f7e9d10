"""Differential-operator representations of triangular matrices.

Every index-0 truncation decomposes as sum_k (D^k / k!) p_k(X) with
polynomial coefficients p_k of degree at most k; the representation
multiplies, shifts and differentiates without leaving coefficient space.
Matrices of negative index split into a triangular part plus a banded part
written in powers of Xhat and Dhat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import matrix as mat
from .coeff import Poly, ring_from_json, ring_to_json
from .matrix import TruncationError, TruncMatrix

__all__ = [
    "DiffOpRep",
    "NegIndexRep",
    "decompose",
    "reconstruct",
    "binom_transform",
    "binom_transform_inverse",
    "s_table",
    "s_table_from_rep",
    "mul_in_rep",
    "pincherle_x",
    "pincherle_d",
    "xn_mul",
    "neg_decompose",
    "neg_reconstruct",
    "rep_to_json",
    "rep_from_json",
]


@dataclass(frozen=True)
class DiffOpRep:
    """Coefficient polynomials p_0 .. p_{K-1} of an operator expansion."""

    ring: object
    ps: tuple

    @property
    def K(self):
        return len(self.ps)

    def poly(self, k):
        if 0 <= k < len(self.ps):
            return self.ps[k]
        return Poly.zero(self.ring)


def decompose(A):
    """Expansion of an index >= 0 matrix; the k-th polynomial has degree <= k."""
    if mat.index_of(A) < 0:
        raise ValueError("decompose needs index >= 0; use neg_decompose")
    K = A.valid_rows
    ps = []
    for k in range(K):
        # coefficient of t^(k-r) is the alternating binomial sum down diagonal r
        coeffs = [A.ring.zero] * (k + 1)
        for r in range(k + 1):
            d = A.ring.zero
            for j in range(r, k + 1):
                a = A.entry(j, j - r)
                if a:
                    c = math.comb(k, j)
                    d = d + a * (c if (k - j) % 2 == 0 else -c)
            coeffs[k - r] = d
        ps.append(Poly(A.ring, coeffs))
    return DiffOpRep(A.ring, tuple(ps))


def reconstruct(rep, n):
    """sum_k (D^k / k!) p_k(X) on an n-row corner; exact rows: min(n, K)."""
    ring = rep.ring
    vr = min(n, rep.K)
    acc = mat.TruncMatrix.zeros(ring, 0, n)
    for k in range(min(rep.K, n)):
        p = rep.ps[k]
        if p.is_zero():
            continue
        term = mat.mul(mat.deriv_power_scaled(k, n, ring), mat.poly_of_X(p, n, ring))
        acc = mat.add(acc, term)
    return mat.truncate(acc, vr)


def binom_transform(us):
    """From row polynomials u_j to coefficient polynomials p_k."""
    if not us:
        return []
    ring = us[0].ring
    out = []
    for k in range(len(us)):
        acc = Poly.zero(ring)
        for j in range(k + 1):
            c = math.comb(k, j) * (1 if (k - j) % 2 == 0 else -1)
            acc = acc + c * us[j].shift(k - j)
        out.append(acc)
    return out


def binom_transform_inverse(ps):
    """From coefficient polynomials p_j back to row polynomials u_k."""
    if not ps:
        return []
    ring = ps[0].ring
    out = []
    for k in range(len(ps)):
        acc = Poly.zero(ring)
        for j in range(k + 1):
            acc = acc + math.comb(k, j) * ps[j].shift(k - j)
        out.append(acc)
    return out


def s_table(A, K=None):
    """The triangular table s[k][i] built from the row polynomials of A."""
    if K is None:
        K = A.valid_rows
    if K > A.valid_rows:
        raise TruncationError(f"only {A.valid_rows} valid rows, asked for {K}")
    ring = A.ring
    us = [mat.row_poly(A, k) for k in range(K)]
    table = []
    for k in range(K):
        row = []
        for i in range(k + 1):
            acc = Poly.zero(ring)
            inv_ifact = Fraction(1, math.factorial(i))
            for j in range(i, k + 1):
                c = math.comb(k, j) * (1 if (k - j) % 2 == 0 else -1)
                term = us[j].derivative(i) * inv_ifact
                acc = acc + c * term.shift(k - j)
            row.append(acc)
        table.append(row)
    return table


def s_table_from_rep(rep, K=None):
    """The same table computed from the coefficient polynomials instead."""
    if K is None:
        K = rep.K
    ring = rep.ring
    table = []
    for k in range(K):
        row = []
        for i in range(k + 1):
            acc = Poly.zero(ring)
            for j in range(i + 1):
                term = rep.poly(k - j).derivative(i - j) * Fraction(1, math.factorial(i - j))
                acc = acc + math.comb(k, j) * term
            row.append(acc)
        table.append(row)
    return table


def mul_in_rep(A, repB):
    """Representation of A @ B from A's rows and B's representation."""
    K = min(A.valid_rows, repB.K)
    table = s_table(A, K)
    ring = A.ring
    out = []
    for k in range(K):
        acc = Poly.zero(ring)
        for i in range(k + 1):
            q = repB.poly(i)
            if not q.is_zero():
                acc = acc + table[k][i] * q
        out.append(acc)
    return DiffOpRep(ring, tuple(out))


def pincherle_x(rep):
    """Representation of X @ A - A @ X: polynomials shift down one slot."""
    if rep.K < 2:
        raise TruncationError("need at least two coefficient polynomials")
    return DiffOpRep(rep.ring, tuple(rep.ps[1:]))


def pincherle_d(rep):
    """Representation of A @ D - D @ A: polynomials differentiate."""
    ps = [Poly.zero(rep.ring)]
    ps.extend(rep.ps[k].derivative() for k in range(1, rep.K))
    return DiffOpRep(rep.ring, tuple(ps))


def xn_mul(rep, n):
    """Representation of X^n @ A."""
    if rep.K <= n:
        raise TruncationError(f"need more than {n} coefficient polynomials")
    ring = rep.ring
    out = []
    for k in range(rep.K - n):
        acc = Poly.zero(ring)
        for j in range(n + 1):
            acc = acc + math.comb(n, j) * rep.ps[k + j].shift(n - j)
        out.append(acc)
    return DiffOpRep(ring, tuple(out))


@dataclass(frozen=True)
class NegIndexRep:
    """Split of a negative-index matrix into triangular + banded parts.

    ``upper_ps`` holds the banded part's polynomials indexed from 0 (the
    0-th is always zero); ``effective_k_max`` is the brute-force validated
    number of power terms the band actually needs, which in general exceeds
    the band width.
    """

    ring: object
    lower: DiffOpRep
    upper_ps: tuple
    band: int
    effective_k_max: int

    @property
    def K(self):
        return len(self.upper_ps)


def _band_part(rep, n, k_max):
    ring = rep.ring
    acc = mat.TruncMatrix.zeros(ring, -rep.band, n)
    for k in range(1, min(k_max + 1, len(rep.upper_ps))):
        p = rep.upper_ps[k]
        if p.is_zero():
            continue
        term = mat.mul(mat.poly_of_Xhat(p, n, ring), mat.dhat_power_scaled(k, n, ring))
        acc = mat.add(acc, term)
    return acc


def neg_decompose(R):
    """Split a negative-index matrix and expand both parts.

    The banded part is written as sum_k p_k(Xhat) Dhat^k / k!.  The number
    of terms needed is found empirically: terms are added until the band
    reconstructs exactly on the rows that are fully determined.
    """
    idx = mat.index_of(R)
    if idx is math.inf or idx >= 0:
        raise ValueError(f"neg_decompose needs negative index, got {idx}")
    m = -idx
    K = R.valid_rows
    if K <= m:
        raise TruncationError(f"need more than {m} valid rows to split a {m}-band")
    ring = R.ring

    lower_matrix = TruncMatrix.build(ring, 0, K, lambda i, k: R.entry(i, k))
    lower = decompose(lower_matrix)

    ps = [Poly.zero(ring)]
    for k in range(1, K):
        coeffs = [ring.zero] * k  # degree at most k-1
        for j in range(1, min(m, k) + 1):
            e = ring.zero
            for i in range(k):
                b = R.entry(i, i + j)
                if b:
                    c = math.comb(k, i + j)
                    if c:
                        e = e + b * (c if (k - i - j) % 2 == 0 else -c)
            coeffs[k - j] = e
        ps.append(Poly(ring, coeffs))

    rep = NegIndexRep(ring, lower, tuple(ps), m, K - 1)
    n_exact = K - m
    target = TruncMatrix.build(
        ring, -m, n_exact,
        lambda i, k: R.entry(i, k) if k > i else ring.zero,
    )
    effective = None
    for k_max in range(m, K):
        if mat.equal(_band_part(rep, n_exact, k_max), target):
            effective = k_max
            break
    if effective is None:
        raise ArithmeticError("band reconstruction failed at every candidate range")
    return NegIndexRep(ring, lower, tuple(ps), m, effective)


def neg_reconstruct(rep, n, k_max=None):
    """Rebuild the matrix; rows are exact up to min(n, K - band)."""
    vr = min(n, rep.K - rep.band)
    if vr < 1:
        raise TruncationError("no fully determined rows at this size")
    lower = reconstruct(rep.lower, vr)
    band = _band_part(rep, vr, k_max if k_max is not None else rep.K - 1)
    return mat.add(lower, band)


def rep_to_json(rep):
    enc = rep.ring.element_to_json
    return {
        "K": rep.K,
        "ring": ring_to_json(rep.ring),
        "ps": [[enc(c) for c in p.coeffs] for p in rep.ps],
    }


def rep_from_json(obj):
    ring = ring_from_json(obj["ring"])
    ps = tuple(Poly(ring, [ring.element_from_json(c) for c in coeffs]) for coeffs in obj["ps"])
    if len(ps) != obj["K"]:
        raise ValueError("K does not match the number of polynomials")
    return DiffOpRep(ring, ps)
