"""Exact chromatic quasisymmetric polynomials of unit interval graphs,
their Schur expansions, and cell-paving consistency checks."""

from .colourings import (
    ColouringStats,
    NotProper,
    count_colourings,
    enumerate_colourings,
    fixed_point_chain,
    is_proper,
    stats,
)
from .csp import (
    CSPoly,
    SchurExpansion,
    VerificationReport,
    compute_csp,
    schur_expand,
    symmetry_check,
    verify_expansion,
)
from .geometry import (
    GeometryReport,
    Infeasible,
    dimension,
    exponent_identity_check,
    fibre_dimension,
    geometry_report,
    poincare_bb,
    poincare_product,
)
from .hessenberg import (
    Graph,
    NotWeaklyIncreasing,
    OutOfRange,
    ReverseHessenberg,
    all_reverse_hessenberg,
    complete,
    parse,
    staircase,
    validate,
)
from .partitions import (
    KostkaTable,
    SizeMismatch,
    dominant,
    dominates,
    kostka,
    kostka_table,
    pad,
    partitions_of,
    rearrangement_count,
)
from .qpoly import QPoly, q_factorial, q_integer

__version__ = "0.1.0"
