"""
Algebra package initializer.

Re-exports the public operations from the submodules so callers can import
from `src.algebra` directly instead of the specific submodule.
"""

from .braids import (
    BETA,
    BasedPath,
    BraidWord,
    act_on_loop,
    act_on_path,
    format_braid,
    gamma_alphabet,
    induced_permutation,
    r_beta_gamma,
    reflect_loop,
    reflect_path,
    rho,
)
from .catalog import (
    SMALL_GROUP_CORPUS,
    KleinQuotient,
    SmallGroup,
    TorusKnot,
    abelian_check,
    boundary_presentation,
    klein_presentation,
    klein_quotients,
    peripheral_presentation,
    q8_presentation,
    t34_quotient,
    torus_knot_presentation,
)
from .certificates import (
    AFFINE_IMAGES,
    AffineMap,
    BraidCertificate,
    OrderCertificate,
    boundary_word,
    candidate_spec,
    certify_braid,
    check_certificate,
    delta_words,
    f_word,
    infinite_order_certificate,
    puncture_orbit,
    quotient_presentation,
    svk_injectivity,
)
from .cosets import (
    EnumResult,
    EnumStatus,
    element_order,
    element_order_in,
    exponent,
    follow,
    order_fingerprint,
    todd_coxeter,
    word_action,
)
from .errors import (
    AlgebraError,
    AlphabetError,
    BraidIndexError,
    CosetLimitExceeded,
    DegreeLimitError,
    MissingImageError,
    ModeError,
    NotCoprimeError,
    ParseError,
    UnknownCheckError,
    UnsupportedOperation,
)
from .hom_search import HomCandidate, SearchSpec, count_all_homs, search
from .parsing import parse_braid, parse_images, parse_perm, parse_presentation, parse_word
from .perms import (
    Perm,
    all_perms,
    brute_force_order,
    generate_closure,
    involutions,
    is_klein_pair,
    is_transitive,
    perm_compose,
    perm_order,
)
from .presentations import (
    HomCheck,
    Presentation,
    evaluate,
    format_presentation,
    quotient,
    verify_hom,
    word_image,
)
from .words import (
    Alphabet,
    ExponentVector,
    Word,
    WordMode,
    exponent_vector,
    format_word,
    generator,
    identity,
    invert,
    multiply,
    power,
    reduce,
    substitute,
    to_free,
    to_involutory,
)

__all__ = [
    # Words
    "Alphabet",
    "ExponentVector",
    "Word",
    "WordMode",
    "exponent_vector",
    "format_word",
    "generator",
    "identity",
    "invert",
    "multiply",
    "power",
    "reduce",
    "substitute",
    "to_free",
    "to_involutory",
    # Parsing
    "parse_braid",
    "parse_images",
    "parse_perm",
    "parse_presentation",
    "parse_word",
    # Braids
    "BETA",
    "BasedPath",
    "BraidWord",
    "act_on_loop",
    "act_on_path",
    "format_braid",
    "gamma_alphabet",
    "induced_permutation",
    "r_beta_gamma",
    "reflect_loop",
    "reflect_path",
    "rho",
    # Permutations
    "Perm",
    "all_perms",
    "brute_force_order",
    "generate_closure",
    "involutions",
    "is_klein_pair",
    "is_transitive",
    "perm_compose",
    "perm_order",
    # Presentations
    "HomCheck",
    "Presentation",
    "evaluate",
    "format_presentation",
    "quotient",
    "verify_hom",
    "word_image",
    # Coset enumeration
    "EnumResult",
    "EnumStatus",
    "element_order",
    "element_order_in",
    "exponent",
    "follow",
    "order_fingerprint",
    "todd_coxeter",
    "word_action",
    # Catalog
    "SMALL_GROUP_CORPUS",
    "KleinQuotient",
    "SmallGroup",
    "TorusKnot",
    "abelian_check",
    "boundary_presentation",
    "klein_presentation",
    "klein_quotients",
    "peripheral_presentation",
    "q8_presentation",
    "t34_quotient",
    "torus_knot_presentation",
    # Homomorphism search
    "HomCandidate",
    "SearchSpec",
    "count_all_homs",
    "search",
    # Certificates
    "AFFINE_IMAGES",
    "AffineMap",
    "BraidCertificate",
    "OrderCertificate",
    "boundary_word",
    "candidate_spec",
    "certify_braid",
    "check_certificate",
    "delta_words",
    "f_word",
    "infinite_order_certificate",
    "puncture_orbit",
    "quotient_presentation",
    "svk_injectivity",
    # Errors
    "AlgebraError",
    "AlphabetError",
    "BraidIndexError",
    "CosetLimitExceeded",
    "DegreeLimitError",
    "MissingImageError",
    "ModeError",
    "NotCoprimeError",
    "ParseError",
    "UnknownCheckError",
    "UnsupportedOperation",
]
