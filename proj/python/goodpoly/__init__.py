"""Schur expansions, Newton polytopes, and exact SNP/IDP certification.

All heavy lifting happens in the compiled extension; partitions and lattice
points are plain lists of ints, coefficients are Python ints, reports are
dicts mirroring the JSON reports of the CLI.
"""

from goodpoly._core import (
    alternating_chain_sum,
    chain_sum,
    check_chain,
    check_good,
    check_snp,
    column_split,
    contains,
    contains_point,
    content_of,
    dimension,
    dominates,
    dual_grothendieck,
    enumerate_ssyt,
    example_g2_310,
    expand_combination,
    expand_schur,
    generate_chain,
    idp_check,
    is_symmetric,
    kostka,
    lattice_points,
    minkowski_power_points,
    newton_of_combination,
    rado_containment,
    schur_membership,
    skew_row_bounded_count,
    sm_orbit,
    sort_decreasing,
    subchain,
    to_schur_basis,
    verify_good_theorem,
    vertices,
)

__all__ = [
    "alternating_chain_sum",
    "chain_sum",
    "check_chain",
    "check_good",
    "check_snp",
    "column_split",
    "contains",
    "contains_point",
    "content_of",
    "dimension",
    "dominates",
    "dual_grothendieck",
    "enumerate_ssyt",
    "example_g2_310",
    "expand_combination",
    "expand_schur",
    "generate_chain",
    "idp_check",
    "is_symmetric",
    "kostka",
    "lattice_points",
    "minkowski_power_points",
    "newton_of_combination",
    "rado_containment",
    "schur_membership",
    "skew_row_bounded_count",
    "sm_orbit",
    "sort_decreasing",
    "subchain",
    "to_schur_basis",
    "verify_good_theorem",
    "vertices",
]

__version__ = "0.1.0"
