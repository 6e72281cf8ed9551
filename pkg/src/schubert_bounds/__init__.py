"""Schubert and key polynomials, their diagram bounds, and flagged Weyl module dual characters."""

from .characters import key_poly, schubert_poly
from .combinat import (
    Composition,
    Permutation,
    RangeError,
    avoids_key_max,
    avoids_key_min,
    avoids_schubert_max,
    avoids_schubert_min,
    comp_contains_pattern,
    count_max_avoiders,
    enumerate_compositions,
    enumerate_permutations,
    perm_contains_pattern,
    schroeder,
)
from .diagrams import (
    Diagram,
    column_leq,
    enumerate_sub_diagrams,
    max_poly,
    min_poly,
    monomial_of,
    rothe_diagram,
    skyline_diagram,
)
from .lorentz import SupportSet, is_lorentzian, is_m_convex, positive_eigenvalue_count
from .polyring import (
    DimensionError,
    Poly,
    RatPoly,
    coeffwise_leq,
    demazure,
    divided_difference,
    normalize_N,
    parse_poly,
)
from .weyl import (
    WeightSpaceReport,
    YPoly,
    dependent_family,
    dual_character,
    f_C,
    minor,
    reduced_columns,
    reduced_columns_disjoint,
    verify_dependence_identity,
    weight_space_rank,
)

__version__ = "0.1.0"
