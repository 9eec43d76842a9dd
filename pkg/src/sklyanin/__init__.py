"""Exact-arithmetic toolkit for three-dimensional Sklyanin algebras and
their degenerations: superpotential relations, truncated-linear-algebra
certificates (Hilbert functions, centrality), the point-scheme elliptic
curve with its shift automorphism, finite-dimensional representation
verification and search, and the center / invariant-ring / orbit-ring
constructions attached to the finite-order locus."""

__version__ = "0.1.0"

from .scalars import (
    CC,
    QQ,
    Cyclotomic,
    CyclotomicField,
    RationalField,
    ComplexField,
    ScalarError,
    embed_complex,
    field_arith,
    parse_field,
    parse_scalar,
    format_scalar,
    promote,
    zeta,
)
from .ncpoly import (
    NcPoly,
    ParameterTriple,
    build_phi_marg,
    central_g,
    cyclic_derivative,
    evaluate,
    format_ncpoly,
    parse_ncpoly,
    sklyanin_relations,
)
from .graded_quotient import (
    GradedTruncation,
    hilbert_function,
    ideal_piece,
    quotient_dims_mod_g,
    sklyanin_truncation,
)
from .hesse import (
    BASE_POINT,
    CurveSpec,
    ProjPoint,
    add_points,
    chord_third,
    classify_params,
    point_scheme,
    sigma_apply,
    sigma_order,
)
from .reps import (
    MatRep,
    RepClassification,
    classify_rep,
    family_degenerate,
    family_s1m1m1,
    g_action,
    irreducible,
    search_numeric,
    solve_dim1,
    verify_rep,
)
from .center import (
    invariant_ring_check,
    pi_report,
    shat_center_check,
    skew_center_report,
    skew_normal_form,
)
from .orbit_ring import (
    GradedMatrix,
    OrbitElement,
    evaluation_irrep,
    orbit_mul,
    phi_to_matrix,
)
