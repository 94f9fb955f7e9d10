"""Exact operational calculus for polynomial sequences.

Truncated generalized Hessenberg matrices over exact coefficient rings,
differential-operator decompositions, raising/lowering operator pairs, and
constructors for the classical families (exponential-series, binomial type,
Sheffer, banded-eigenproblem orthogonal, and generalized-derivative
families).  Everything is exact: rationals or sparse parameter polynomials,
never floats.
"""

from .coeff import (
    NotAUnitError,
    ParamPoly,
    Poly,
    PolyRing,
    QQ,
    RingMismatchError,
    param_ring,
    ring_add,
    ring_inv,
    ring_mul,
    ring_neg,
    substitute,
)
from .matrix import (
    NotInGroupError,
    TruncationError,
    TruncMatrix,
    apply_to_poly,
    basis_matrix,
    col_series,
    identity,
    index_of,
    invert,
    matrix_from_json,
    matrix_poly_eval,
    matrix_to_json,
    mul,
    row_poly,
)
from .series import (
    CFactorial,
    DivergentSeriesError,
    PowerSeries,
    c_exponential,
    gf_check,
    ps_compose,
    ps_exp,
    ps_log,
    ps_reversion,
    series_of_matrix,
    toeplitz_of_series,
)
from .diffop import (
    DiffOpRep,
    NegIndexRep,
    binom_transform,
    binom_transform_inverse,
    decompose,
    mul_in_rep,
    neg_decompose,
    neg_reconstruct,
    reconstruct,
    s_table,
)
from .monomial import (
    MonomialityPair,
    dual_functional,
    monomiality_pair,
    right_inverse_of_M,
    verify_monomiality,
)
from .families import (
    AppellSpec,
    BinomialSpec,
    DegenerateSpectrumError,
    OrthoSpec,
    ShefferSpec,
    WardSpec,
    appell_from_h,
    appell_matrix,
    appell_M,
    appell_orthogonal,
    binomial_type,
    composition_matrix,
    jackson_derivative,
    laguerre_general,
    ortho_solve,
    riordan_matrix,
    sheffer,
    ward_basis,
    ward_family,
    ward_to_hermite,
)

__version__ = "0.1.0"
