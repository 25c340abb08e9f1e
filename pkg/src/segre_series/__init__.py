"""Exact Segre and Veronese transforms of rational generating functions.

Series are ``h(t) / (1 - t)^d`` with ``h`` a Laurent polynomial over the
rationals; all arithmetic is exact.
"""

__version__ = "0.1.0"

from .errors import (
    HypothesisViolation,
    NotDivisible,
    SegreError,
    VerificationError,
    WindowTooShort,
    ZeroPolynomialError,
    ZeroSeriesError,
)
from .laurent import (
    LaurentPoly,
    binomial,
    divide_by_one_minus_t,
    eval_at_one,
    poly_add,
    poly_mul,
    poly_scale,
    poly_shift,
)
from .series import (
    HilbertPolynomial,
    RationalGF,
    ZERO_SERIES,
    coefficient,
    expand,
    gf_add,
    gf_scale,
    hilbert_polynomial,
    hvector_from_coefficients,
    normalize,
    postulation_number,
)
from .segre import (
    BoundsReport,
    condition_star_star,
    multi_degree_bounds,
    segre_closed,
    segre_degree_bounds,
    segre_fold,
    segre_monomial,
    segre_multi_hvector,
    segre_oracle,
)
from .cm import (
    GradedCMModule,
    NewcombQuery,
    newcomb,
    regularity,
    segre_regularity_cm,
    segre_veronese_regularity,
    veronese,
    veronese_regularity_check,
    zero_dim_segre_regularity,
)
