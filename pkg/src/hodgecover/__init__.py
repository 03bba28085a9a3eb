"""Hodge numbers, Euler characteristics and Hodge-cycle bounds for abelian covers
of projective space and of products of projective lines branched along
hyperplane arrangements."""

from hodgecover.arrangement import (
    Arrangement,
    Hyperplane,
    build_poset,
    check_cover_hypotheses,
    generic_arrangement,
    is_normal_crossing,
)
from hodgecover.bounds import dim_h_nt, euler_cover, hodge_cycle_bound, theorem_report
from hodgecover.characters import (
    CharTable,
    characters_abelian,
    galois_orbits,
    load_char_table,
    phi_invariant,
    quaternion_table,
    rational_span,
    symmetric_group_table,
)
from hodgecover.cover import (
    AbelianGroup,
    CoverSpec,
    abelian_cover,
    cyclic_cover,
    product_cover,
    validate_cover,
)
from hodgecover.hodge import (
    EigenHodgeTable,
    HodgeUnavailable,
    condition_b_check,
    eigen_hodge,
    hodge_product_p1,
    hodge_via_hrr,
    hrr_table,
)
from hodgecover.toric import ExponentData, local_abelian_model, reduce_exponents, saturation_hilbert_basis

__version__ = "0.1.0"
