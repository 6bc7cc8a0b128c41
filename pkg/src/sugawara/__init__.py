"""Exact Segal-Sugawara vectors for nilpotent centralizers in gl_N.

The package constructs, for the centralizer of a nilpotent matrix
described by a pyramid of Jordan block sizes, the generators of the
critical-level center of the associated affine vertex algebra, and
verifies the defining identities by exact rational arithmetic:
annihilation by nonnegative modes, the raising-operator ladder,
commutativity, the skew-variable cross-check, shift-of-argument
subalgebras and the center of the enveloping algebra.
"""

from .pyramid import GenId, LieCombo, Pyramid, bracket, form, gln_expand
from .pbw import (
    Element,
    LieContext,
    LoopGen,
    degree_d,
    delta,
    element_from_json,
    element_from_obj,
    element_text,
    element_to_json,
    element_to_obj,
    get_context,
    grade_by_degree,
    grade_by_weight,
    translation_T,
    weight_component,
)
from .detcalc import (
    MatrixEntry,
    TauPoly,
    UXElem,
    apply_entry,
    build_entry_matrix,
    build_tau_matrix,
    cdet,
    cdet_tau,
    column_determinant,
    column_determinant_bruteforce,
    max_weight_component,
    phi_circle,
    uxelem_from_obj,
    uxelem_to_obj,
)
from .suga import (
    SugaTable,
    delta_ladder,
    gln_delta_tower,
    minimal_nilpotent_check,
    phi_2_formula_check,
    phi_table,
    selected_pairs,
    tau_cross_check,
)
from .shift import (
    AChiGen,
    SymPoly,
    a_chi_generators,
    apply_automorphism,
    center_generators,
    jacobian_rank,
    random_chi,
    random_point,
    rho_chi,
    symbols,
    zseries_eval,
    zseries_mul,
)
from .reports import Case, Report
from .verify import (
    annihilation_check,
    centrality_check,
    commutativity_check,
    generating_family,
    raising_recursion_check,
)

__version__ = "0.1.0"
