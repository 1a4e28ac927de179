"""Root multiplicities for polynomials over hyperfields, exactly.

Hyperfields replace single-valued addition with set-valued hyperaddition;
roots and their multiplicities are defined through multi-valued linear
division.  Over the sign hyperfield the multiplicity of 1 counts coefficient
sign changes, over the tropical hyperfield the multiplicity of s is a Newton
polygon segment length, and both facts are cross-checked here against exact
classical root counts of rational polynomials.
"""

from .core import (
    INF,
    AxiomReport,
    DomainError,
    Element,
    FiniteHyperfield,
    FiniteSet,
    Hyperfield,
    HyperSet,
    NonEnumerableError,
    ParseError,
    PhaseUnion,
    TropicalRay,
    check_axioms,
    set_contains,
    set_enumerate,
)
from .descartes import (
    count_negative_roots,
    count_positive_roots,
    descartes_bound,
    mult_neg_one_direct,
    mult_one_direct,
    sign_changes,
    sign_image,
    substitute_neg,
    verify_descartes,
    verify_descartes_batch,
)
from .instances import (
    KRASNER,
    PHASE,
    SIGN,
    TROPICAL,
    WEAK_SIGN,
    Homomorphism,
    PhaseHyperfield,
    PrimeField,
    QuotientHyperfield,
    RationalField,
    TropicalHyperfield,
    build_quotient,
    check_homomorphism,
    iso_to_named,
    krasner_hyperfield,
    padic_hom,
    padic_valuation,
    parse_field,
    parse_homomorphism,
    quotient_projection,
    sign_hom,
    sign_hyperfield,
    sign_map,
    weak_sign_hyperfield,
)
from .polynomial import (
    MultReport,
    Poly,
    divides_with_quotient,
    eval_hyperset,
    format_poly,
    hyper_add_poly,
    hyper_mul_poly,
    hyper_product,
    is_root,
    linear_poly,
    multiplicity,
    parse_poly,
    poly,
    poly_from_elements,
    quotients,
    witness_chain_valid,
)
from .tropical_newton import (
    NewtonPolygon,
    NewtonSegment,
    TropicalRootMultiset,
    eval_function,
    expand_roots,
    functional_equiv,
    in_product,
    mult_tropical,
    newton_polygon,
    newton_rule_verify,
    newton_verify_batch,
    nu,
    tropical_roots,
    tropical_roundtrip_batch,
)

__all__ = [name for name in dir() if not name.startswith("_")]
