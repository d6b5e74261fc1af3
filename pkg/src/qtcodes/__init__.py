"""Explicit 2-generator quasi-twisted two-weight codes over small finite fields."""
from .analyze import (
    LinearCode,
    WeightDistribution,
    is_equidistant,
    is_projective,
    is_two_weight,
    min_distance,
    qt_closure,
    weight_distribution,
)
from .bounds import decompose_p, gap, griesmer_n, table1, theorem5_report
from .gf import Field, FieldElement, make_field, primitive_element
from .poly import Polynomial, QuotientRing, exact_div, find_primitive_poly, is_primitive, mul_mod
from .qtconstruct import (
    QTSimplexCode,
    QTTwoWeightCode,
    build_code,
    build_simplex_2t,
    build_two_weight,
    interleave,
    select_B,
    subcode_generators,
)
from .simplex import SimplexCode, build_simplex, codeword_polys, simplex_from_explicit_g
from .twistulant import Matrix, TwistulantSpec, materialize, spec_product, twist_shift

__version__ = "0.1.0"
