"""Exact weight polynomials of Lukasiewicz-type lattice paths, their resolvent
series, and the vector continued fraction built from them."""

from .algebra import (
    NUMERIC,
    SYMBOLIC,
    CoeffTable,
    Ring,
    RingMismatchError,
    Var,
    WeightPoly,
    WindowError,
    reflect_var,
)
from .operators import (
    TWO_SIDED,
    CharPolyPair,
    OperatorKind,
    char_poly_by_determinant,
    char_polys,
    forward,
    hp_defect,
    hp_defect_order,
    moment,
    reflected,
    resolvent_series,
    truncation,
)
from .paths import (
    FAMILIES,
    FamilySpec,
    LatticePath,
    count,
    enumerate_paths,
    fuss_catalan,
    genetic_sum,
    path_weight,
    reflect_hat,
    reflect_hat_inverse,
    weight_polynomial,
)
from .series import (
    INF,
    LaurentSeries,
    Polynomial,
    ValidityError,
    rational_to_series,
    series_from_family,
    vector_divide,
)
from .vcf import (
    CFTerm,
    Failure,
    Report,
    akv_expansion,
    cf_term,
    convergent_polys,
    eval_finite_cf,
    tail_vector,
    verify_akv,
    verify_bidiagonal,
    verify_kalyagin,
    verify_lemma_lft,
    verify_theorem_A,
    verify_theorem_W,
)

__version__ = "0.1.0"

__all__ = [
    "NUMERIC",
    "SYMBOLIC",
    "CoeffTable",
    "Ring",
    "RingMismatchError",
    "Var",
    "WeightPoly",
    "WindowError",
    "reflect_var",
    "TWO_SIDED",
    "CharPolyPair",
    "OperatorKind",
    "char_poly_by_determinant",
    "char_polys",
    "forward",
    "hp_defect",
    "hp_defect_order",
    "moment",
    "reflected",
    "resolvent_series",
    "truncation",
    "FAMILIES",
    "FamilySpec",
    "LatticePath",
    "count",
    "enumerate_paths",
    "fuss_catalan",
    "genetic_sum",
    "path_weight",
    "reflect_hat",
    "reflect_hat_inverse",
    "weight_polynomial",
    "INF",
    "LaurentSeries",
    "Polynomial",
    "ValidityError",
    "rational_to_series",
    "series_from_family",
    "vector_divide",
    "CFTerm",
    "Failure",
    "Report",
    "akv_expansion",
    "cf_term",
    "convergent_polys",
    "eval_finite_cf",
    "tail_vector",
    "verify_akv",
    "verify_bidiagonal",
    "verify_kalyagin",
    "verify_lemma_lft",
    "verify_theorem_A",
    "verify_theorem_W",
]
