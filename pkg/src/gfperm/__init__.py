"""gfperm: finite-field permutation polynomial constructions and verification.

The package provides deterministic GF(p^n) tower arithmetic, sparse
polynomials with fractional exponents, brute-force permutation /
o-polynomial / hyperoval oracles, the catalog of o-polynomial families over
GF(2^m), and lifting constructions producing permutations of extension
fields, all wired into a reproducible CLI (``gfperm``).
"""

from .errors import (
    CapError,
    FieldError,
    NotPermutationError,
    ReducibleModulusError,
    SpecParseError,
)
from .field import (
    FieldCtx,
    FieldElem,
    FracExp,
    build_field,
    canonical_modulus,
    canonical_quad_ext,
    extend_cubic,
    extend_quadratic,
    find_generator,
    is_generator,
    parse_field_spec,
)
from .poly import (
    DicksonSpec,
    PolyFn,
    TermPoly,
    compose,
    dickson,
    from_table,
    identity,
    interpolate,
    linearized,
    monomial,
    normalize_opoly,
    parse_poly_spec,
)
from .verify import (
    ProjPoint,
    VerifyReport,
    compositional_inverse,
    hyperoval_check,
    is_opolynomial,
    is_permutation,
    is_permutation_sorted,
)
from .opoly import (
    FAMILY_TAGS,
    FamilySpec,
    catalog_members,
    catalog_specs,
    instantiate,
    o_monomial_orbit,
    o_monomial_test,
    parse_family_id,
    stated_inverse,
    transform,
)
from .constructions import (
    CubicFrame,
    GeneralFrame,
    QuadFrame,
    construct_F,
    construct_F1,
    construct_F2,
    construct_F3,
    construct_G,
    cubic_frame,
    cubic_t73,
    cubic_t74,
    further_t71,
    further_t72,
    general_lift,
    quad_frame,
    tower_iterate,
)
from .sweeps import SUITES, SweepConfig, run_suite

__all__ = [
    "CapError", "FieldError", "NotPermutationError", "ReducibleModulusError",
    "SpecParseError",
    "FieldCtx", "FieldElem", "FracExp", "build_field", "canonical_modulus",
    "canonical_quad_ext", "extend_cubic", "extend_quadratic",
    "find_generator", "is_generator", "parse_field_spec",
    "DicksonSpec", "PolyFn", "TermPoly", "compose", "dickson", "from_table",
    "identity", "interpolate", "linearized", "monomial", "normalize_opoly",
    "parse_poly_spec",
    "ProjPoint", "VerifyReport", "compositional_inverse", "hyperoval_check",
    "is_opolynomial", "is_permutation", "is_permutation_sorted",
    "FAMILY_TAGS", "FamilySpec", "catalog_members", "catalog_specs",
    "instantiate", "o_monomial_orbit", "o_monomial_test", "parse_family_id",
    "stated_inverse", "transform",
    "CubicFrame", "GeneralFrame", "QuadFrame", "construct_F", "construct_F1",
    "construct_F2", "construct_F3", "construct_G", "cubic_frame", "cubic_t73",
    "cubic_t74", "further_t71", "further_t72", "general_lift", "quad_frame",
    "tower_iterate",
    "SUITES", "SweepConfig", "run_suite",
]
