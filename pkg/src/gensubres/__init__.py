"""Polynomial gcd and resultants by lead/trail subresultant remainder sequences."""

from .parse import ParseError, format_poly, parse_poly
from .poly import (
    Poly,
    content_primitive,
    full_reduce,
    normalize_poly,
    poly_divides,
    primitive_part,
)
from .prs import (
    Algorithm,
    PrsTrace,
    classic_gcd,
    classic_resultant,
    gen_gcd,
    gen_resultant,
    resultant_any,
    run_traced,
)
from .pseudo import DivisionKind, GenPRemResult, gen_prem, prem, tprem
from .ring import (
    ZY,
    ZZ,
    NotDivisible,
    NotFull,
    SizeMeasure,
    YPoly,
    exact_div,
    relative_size,
    ring_gcd,
)
from .subres import (
    DetMatrix,
    SubresPoly,
    bareiss_det,
    build_mk,
    build_sk,
    det_poly,
    gcd_degree_detect,
    sylvester_matrix,
    verify_prs_det_correspondence,
)

__version__ = "0.1.0"
