from .anti_isomorphism import b0, b0_inverse, intertwine
from .classify import Classification, Verdict, classify, determinant, symplectic_matrix
from .factors import (
    AutomorphismWord,
    ElementaryFactor,
    FactorKind,
    apply_factor,
    apply_word,
    inverse_word,
    pair_word,
    substitute_d,
    substitute_x,
    word_from_sequence,
    word_images,
)
from .quadruple import (
    BispectralQuadruple,
    airy_normal_form,
    bispectral_quadruple,
    closed_form_pair,
    identity_quadruple,
    is_self_dual,
    recursion_step,
    transpose_quadruple,
)

__all__ = [
    "FactorKind",
    "ElementaryFactor",
    "AutomorphismWord",
    "apply_factor",
    "apply_word",
    "inverse_word",
    "pair_word",
    "word_from_sequence",
    "word_images",
    "substitute_d",
    "substitute_x",
    "b0",
    "b0_inverse",
    "intertwine",
    "BispectralQuadruple",
    "bispectral_quadruple",
    "transpose_quadruple",
    "is_self_dual",
    "closed_form_pair",
    "airy_normal_form",
    "recursion_step",
    "identity_quadruple",
    "Verdict",
    "Classification",
    "classify",
    "determinant",
    "symplectic_matrix",
]
