"""chebflag: exact coefficients of Chebyshev-type rational quotients,
eventual-positivity classification, and combinatorial cross-checks."""

from .series import (
    IntPolynomial,
    TruncatedSeries,
    coeff,
    poly_add,
    poly_mul,
    series_div_unit,
)
from .chebpoly import (
    Partition,
    RootData,
    p_at_rho1,
    p_coeff_closed,
    p_partition,
    p_poly,
    roots_of_pm,
)
from .pathcomb import (
    DyckConstraint,
    DyckPath,
    StripWalk,
    continuant_det,
    dyck_count,
    dyck_to_walk,
    enumerate_dyck,
    enumerate_matchings,
    enumerate_strip_walks,
    full_height_count,
    matching_count,
    strip_walk_count,
    strip_walk_count_dfs,
    walk_to_dyck,
)
from .quotient import (
    CoefficientReport,
    PositivityClass,
    QuotientSpec,
    classify,
    default_order,
    expand,
    make_spec,
    multiplicity,
    positivity_threshold,
    signed_coefficient,
)
from .families import (
    FamilyModel,
    FamilyQuery,
    PairDecomposition,
    family_multiplicity,
    family_kind_of,
    family_quotient,
    find_pair_decomposition,
    product_model_coeff,
)

__version__ = "0.1.0"
