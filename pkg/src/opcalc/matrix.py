"""Truncated lower generalized Hessenberg matrices.

A ``TruncMatrix`` is the finite, exactness-tracked view of an infinite
matrix whose entries vanish above a fixed diagonal: entry (j, k) is zero
whenever j - k < index_bound.  Rows 0 .. valid_rows-1 are stored in full
(row j holds columns 0 .. j - index_bound) and are exactly the rows of the
infinite matrix; rows past valid_rows are never materialized.  Products
shrink valid_rows by the rule

    valid_rows(A*B) = min(valid_rows(A), valid_rows(B) + index_bound(A))

so every row a computation returns is exact, never approximately truncated.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .coeff import (
    NotAUnitError,
    Poly,
    QQ,
    RingMismatchError,
    ring_from_json,
    ring_to_json,
)

__all__ = [
    "TruncMatrix",
    "TruncationError",
    "NotInGroupError",
    "BASIS_NAMES",
    "basis_matrix",
    "identity",
    "x_power",
    "xhat_power",
    "deriv_power_scaled",
    "dhat_power_scaled",
    "poly_of_X",
    "poly_of_Xhat",
    "mul",
    "add",
    "sub",
    "scale",
    "index_of",
    "invert",
    "row_poly",
    "col_series",
    "apply_to_poly",
    "matrix_poly_eval",
    "truncate",
    "change_ring",
    "equal",
    "first_difference",
    "occupied_diagonals",
    "is_monic",
    "matrix_to_json",
    "matrix_from_json",
]


class TruncationError(ArithmeticError):
    """An operation would leave no exactly-known rows."""


class NotInGroupError(ArithmeticError):
    """The matrix is not index 0 with invertible diagonal entries."""


def _row_len(j, index_bound):
    return max(0, j - index_bound + 1)


class TruncMatrix:
    """Finite truncation of a generalized lower Hessenberg matrix."""

    __slots__ = ("ring", "index_bound", "valid_rows", "rows")

    def __init__(self, ring, index_bound, rows, coerce=True):
        self.ring = ring
        self.index_bound = int(index_bound)
        self.valid_rows = len(rows)
        if self.valid_rows < 1:
            raise TruncationError("a TruncMatrix needs at least one valid row")
        fixed = []
        for j, row in enumerate(rows):
            want = _row_len(j, self.index_bound)
            row = [ring.coerce(x) for x in row] if coerce else list(row)
            if len(row) != want:
                raise ValueError(
                    f"row {j} has {len(row)} entries, expected {want} for index {self.index_bound}"
                )
            fixed.append(row)
        self.rows = fixed

    @classmethod
    def build(cls, ring, index_bound, n, fn):
        """Entries from fn(j, k) for the stored positions of an n-row corner."""
        rows = [
            [ring.coerce(fn(j, k)) for k in range(_row_len(j, index_bound))]
            for j in range(n)
        ]
        return cls(ring, index_bound, rows, coerce=False)

    @classmethod
    def zeros(cls, ring, index_bound, n):
        return cls.build(ring, index_bound, n, lambda j, k: ring.zero)

    def entry(self, j, k):
        if not 0 <= j < self.valid_rows:
            raise IndexError(f"row {j} is outside the {self.valid_rows} valid rows")
        if k < 0:
            raise IndexError(f"column {k} is negative")
        row = self.rows[j]
        return row[k] if k < len(row) else self.ring.zero

    def __eq__(self, other):
        """Entrywise equality on the common valid corner."""
        if not isinstance(other, TruncMatrix):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return equal(self, other)

    __hash__ = None

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, TruncMatrix):
            return mul(self, other)
        return scale(other, self)

    def __rmul__(self, c):
        return scale(c, self)

    def __repr__(self):
        return (
            f"TruncMatrix(index={self.index_bound}, valid_rows={self.valid_rows}, "
            f"ring={self.ring!r})"
        )


BASIS_NAMES = ("X", "Xhat", "D", "Dhat", "F", "Finv", "N", "J", "J0", "I")


def basis_matrix(name, n, ring=QQ):
    """One of the distinguished matrices, exact on an n-row corner.

    X      shift up:       X[j, j+1] = 1           (index -1)
    Xhat   transpose of X: Xhat[j+1, j] = 1        (index 1)
    D      derivative:     D[k+1, k] = k + 1       (index 1)
    Dhat   transpose of D: Dhat[k, k+1] = k + 1    (index -1)
    F      Diag(0!, 1!, 2!, ...);  Finv its inverse
    N      Diag(1, 2, 3, ...)
    J      integration:    J[k, k+1] = 1/(k+1)     (index -1)
    J0     Diag(0, 1, 1, 1, ...)
    I      identity
    """
    if n < 1:
        raise ValueError("size must be at least 1")
    one, zero = ring.one, ring.zero

    def diag0(value_fn):
        return TruncMatrix.build(ring, 0, n, lambda j, k: value_fn(j) if k == j else zero)

    if name == "X":
        return TruncMatrix.build(ring, -1, n, lambda j, k: one if k == j + 1 else zero)
    if name == "Xhat":
        return TruncMatrix.build(ring, 1, n, lambda j, k: one if k == j - 1 else zero)
    if name == "D":
        return TruncMatrix.build(ring, 1, n, lambda j, k: ring.coerce(j) if k == j - 1 else zero)
    if name == "Dhat":
        return TruncMatrix.build(ring, -1, n, lambda j, k: ring.coerce(k) if k == j + 1 else zero)
    if name == "F":
        return diag0(lambda j: ring.coerce(math.factorial(j)))
    if name == "Finv":
        return diag0(lambda j: ring.coerce(Fraction(1, math.factorial(j))))
    if name == "N":
        return diag0(lambda j: ring.coerce(j + 1))
    if name == "J":
        return TruncMatrix.build(
            ring, -1, n,
            lambda j, k: ring.coerce(Fraction(1, j + 1)) if k == j + 1 else zero,
        )
    if name == "J0":
        return diag0(lambda j: zero if j == 0 else one)
    if name == "I":
        return diag0(lambda j: one)
    raise KeyError(f"unknown basis matrix {name!r}; choose from {BASIS_NAMES}")


def identity(n, ring=QQ):
    return basis_matrix("I", n, ring)


def x_power(j, n, ring=QQ):
    """X**j exactly: ones on the diagonal of index -j."""
    one, zero = ring.one, ring.zero
    return TruncMatrix.build(ring, -j, n, lambda i, k: one if k == i + j else zero)


def xhat_power(j, n, ring=QQ):
    """Xhat**j exactly: ones on the diagonal of index j."""
    one, zero = ring.one, ring.zero
    return TruncMatrix.build(ring, j, n, lambda i, k: one if k == i - j else zero)


def deriv_power_scaled(k, n, ring=QQ):
    """D**k / k! exactly: binomial(i, k) at position (i, i-k)."""
    zero = ring.zero
    return TruncMatrix.build(
        ring, k, n,
        lambda i, c: ring.coerce(math.comb(i, k)) if c == i - k else zero,
    )


def dhat_power_scaled(k, n, ring=QQ):
    """Dhat**k / k! exactly: binomial(i+k, k) at position (i, i+k)."""
    zero = ring.zero
    return TruncMatrix.build(
        ring, -k, n,
        lambda i, c: ring.coerce(math.comb(i + k, k)) if c == i + k else zero,
    )


def poly_of_X(p, n, ring=None):
    """p(X) exactly: the Toeplitz band with p's coefficient j on diagonal -j."""
    ring = ring or p.ring
    if p.is_zero():
        return TruncMatrix.zeros(ring, 0, n)
    deg = p.degree
    return TruncMatrix.build(
        ring, -deg, n,
        lambda i, k: ring.coerce(p.coeff(k - i)) if k >= i else ring.zero,
    )


def poly_of_Xhat(p, n, ring=None):
    """p(Xhat) exactly: the lower Toeplitz band with coefficient j on diagonal j."""
    ring = ring or p.ring
    return TruncMatrix.build(
        ring, 0, n,
        lambda i, k: ring.coerce(p.coeff(i - k)),
    )


def _check_ring(A, B):
    if A.ring != B.ring:
        raise RingMismatchError(f"mixed-ring matrices: {A.ring} vs {B.ring}")


def mul(A, B):
    """Exact product; valid_rows = min(vr(A), vr(B) + index_bound(A))."""
    _check_ring(A, B)
    ring = A.ring
    m = A.index_bound + B.index_bound
    vr = min(A.valid_rows, B.valid_rows + A.index_bound)
    if vr < 1:
        raise TruncationError(
            f"product has no valid rows (valid_rows {A.valid_rows} * {B.valid_rows}, "
            f"index {A.index_bound})"
        )
    zero = ring.zero
    rows = []
    for i in range(vr):
        out = [zero] * _row_len(i, m)
        for j, a in enumerate(A.rows[i]):
            if not a:
                continue
            for k, b in enumerate(B.rows[j]):
                if not b:
                    continue
                out[k] = out[k] + a * b
        rows.append(out)
    return TruncMatrix(ring, m, rows, coerce=False)


def add(A, B):
    _check_ring(A, B)
    m = min(A.index_bound, B.index_bound)
    vr = min(A.valid_rows, B.valid_rows)
    return TruncMatrix.build(A.ring, m, vr, lambda j, k: A.entry(j, k) + B.entry(j, k))


def sub(A, B):
    return add(A, scale(-1, B))


def scale(c, A):
    c = A.ring.coerce(c)
    rows = [[c * x for x in row] for row in A.rows]
    return TruncMatrix(A.ring, A.index_bound, rows, coerce=False)


def index_of(A):
    """Least diagonal index with a nonzero entry in the valid corner; +inf for zero."""
    for d in range(A.index_bound, A.valid_rows):
        for j in range(max(d, 0), A.valid_rows):
            if A.entry(j, j - d):
                return d
    return math.inf


def invert(A):
    """Forward-substitution inverse of an index-0 matrix with unit diagonal."""
    ring = A.ring
    for d in range(A.index_bound, 0):
        for j in range(max(d, 0), A.valid_rows):
            if A.entry(j, j - d):
                raise NotInGroupError(f"nonzero entry on diagonal {d}")
    n = A.valid_rows
    inv_diag = []
    for j in range(n):
        a = A.entry(j, j)
        if not ring.is_unit(a):
            raise NotInGroupError(f"diagonal entry at ({j}, {j}) is not a unit")
        inv_diag.append(ring.inv(a))
    rows = []
    for i in range(n):
        out = [ring.zero] * (i + 1)
        out[i] = inv_diag[i]
        arow = A.rows[i] if A.index_bound >= 0 else A.rows[i][: i + 1]
        for k in range(i - 1, -1, -1):
            acc = ring.zero
            for j in range(k, i):
                a = arow[j] if j < len(arow) else ring.zero
                if not a:
                    continue
                b = rows[j][k]
                if not b:
                    continue
                acc = acc + a * b
            out[k] = -(inv_diag[i] * acc)
        rows.append(out)
    return TruncMatrix(ring, 0, rows, coerce=False)


def row_poly(A, k):
    """The polynomial sum_j A[k, j] t^j held in row k."""
    if not 0 <= k < A.valid_rows:
        raise IndexError(f"row {k} is outside the {A.valid_rows} valid rows")
    return Poly(A.ring, A.rows[k])


def col_series(A, j):
    """The power series sum_k A[k, j] x^k held in column j, at order valid_rows."""
    from .series import PowerSeries  # local import to avoid an import cycle

    if not 0 <= j <= A.valid_rows - 1 - A.index_bound:
        raise IndexError(f"column {j} is outside the valid corner")
    return PowerSeries(A.ring, [A.entry(k, j) for k in range(A.valid_rows)])


def apply_to_poly(B, p):
    """Row action of B: the linear extension of t^k -> row polynomial k of B."""
    if B.ring != p.ring:
        raise RingMismatchError(f"mixed rings: {B.ring} vs {p.ring}")
    limit = B.valid_rows - max(0, -B.index_bound)
    if p.degree >= limit:
        raise TruncationError(
            f"degree {p.degree} is too large for {B.valid_rows} valid rows"
        )
    acc = Poly.zero(p.ring)
    for k, c in enumerate(p.coeffs):
        if not p.ring.is_zero(c):
            acc = acc + c * row_poly(B, k)
    return acc


def matrix_poly_eval(w, L):
    """Horner evaluation w(L); valid rows shrink when L has negative index."""
    n = L.valid_rows
    acc = scale(w.coeff(w.degree) if not w.is_zero() else 0, identity(n, L.ring))
    for k in range(max(w.degree, 0) - 1, -1, -1):
        acc = add(mul(acc, L), scale(w.coeff(k), identity(n, L.ring)))
    return acc


def truncate(A, n):
    if not 1 <= n <= A.valid_rows:
        raise TruncationError(f"cannot keep {n} of {A.valid_rows} valid rows")
    return TruncMatrix(A.ring, A.index_bound, [list(r) for r in A.rows[:n]], coerce=False)


def change_ring(A, ring):
    rows = [[ring.coerce(x) for x in row] for row in A.rows]
    return TruncMatrix(ring, A.index_bound, rows, coerce=False)


def equal(A, B, rows=None):
    """Entrywise equality over the first `rows` rows (default: common valid rows)."""
    vr = min(A.valid_rows, B.valid_rows)
    if rows is not None:
        if rows > vr:
            raise TruncationError(f"only {vr} common valid rows, asked for {rows}")
        vr = rows
    m = min(A.index_bound, B.index_bound)
    for j in range(vr):
        for k in range(_row_len(j, m)):
            if A.entry(j, k) != B.entry(j, k):
                return False
    return True


def first_difference(A, B, rows=None):
    """Location (j, k) of the first differing entry, or None if equal."""
    vr = min(A.valid_rows, B.valid_rows)
    if rows is not None:
        vr = min(vr, rows)
    m = min(A.index_bound, B.index_bound)
    for j in range(vr):
        for k in range(_row_len(j, m)):
            if A.entry(j, k) != B.entry(j, k):
                return (j, k)
    return None


def occupied_diagonals(A):
    """Diagonal indices carrying a nonzero entry within the valid corner."""
    found = set()
    for j in range(A.valid_rows):
        for k, x in enumerate(A.rows[j]):
            if x:
                found.add(j - k)
    return found


def is_monic(A):
    """All entries on the diagonal of the matrix's actual index equal 1."""
    d = index_of(A)
    if d is math.inf:
        return False
    one = A.ring.one
    return all(A.entry(j, j - d) == one for j in range(max(d, 0), A.valid_rows))


def matrix_to_json(A):
    enc = A.ring.element_to_json
    return {
        "index": A.index_bound,
        "valid_rows": A.valid_rows,
        "ring": ring_to_json(A.ring),
        "rows": [[enc(x) for x in row] for row in A.rows],
    }


def matrix_from_json(obj):
    ring = ring_from_json(obj["ring"])
    rows = [[ring.element_from_json(x) for x in row] for row in obj["rows"]]
    if len(rows) != obj["valid_rows"]:
        raise ValueError("valid_rows does not match the number of stored rows")
    return TruncMatrix(ring, obj["index"], rows, coerce=False)
