"""Exact-arithmetic toolkit for generic initial ideals and Hilbert points."""

from .orders import (
    GrevLex,
    Lex,
    Monomial,
    MonomialOrder,
    RingContext,
    WeightOrder,
    cmp_monomials,
)
from .poly import LinearChange, Polynomial, apply_change, compose
from .parsing import ParseError, parse_generators, parse_polynomial, polynomial_str
from .monideal import MonomialIdeal, colon_by_variable, intersect, saturate
from .groebner import (
    Ideal,
    buchberger,
    graded_piece,
    ideal_of,
    initial_ideal,
    reduce,
    reduce_with_quotients,
)
from .hilbert import (
    HilbertPolynomial,
    MacaulayRep,
    NotAdmissible,
    binomial_poly,
    gotzmann_number,
    hilbert_function,
    hilbert_polynomial,
    is_admissible,
    lex_segment_ideal,
    macaulay_rep,
    parse_hilbert_polynomial,
    revlex_lemma_check,
    revlex_segment,
)
from .grassmann import (
    SchubertIndex,
    SubspaceBasis,
    compare_indices,
    hilbert_point,
    index_weight,
    initial_subspace,
    make_index,
    max_index,
    pluecker_coordinate,
    schubert_cell_index,
)
from .gin import (
    GinResult,
    WeightVector,
    generic_initial_ideal,
    is_borel_fixed,
    one_ps_limit_check,
    random_linear_change,
    secondary_gin,
    weight_vector_for_order,
)
from .poly import leading_term

__all__ = [
    "GrevLex",
    "Lex",
    "Monomial",
    "MonomialOrder",
    "RingContext",
    "WeightOrder",
    "cmp_monomials",
    "LinearChange",
    "Polynomial",
    "apply_change",
    "compose",
    "leading_term",
    "ParseError",
    "parse_generators",
    "parse_polynomial",
    "polynomial_str",
    "MonomialIdeal",
    "colon_by_variable",
    "intersect",
    "saturate",
    "Ideal",
    "buchberger",
    "graded_piece",
    "ideal_of",
    "initial_ideal",
    "reduce",
    "reduce_with_quotients",
    "HilbertPolynomial",
    "MacaulayRep",
    "NotAdmissible",
    "binomial_poly",
    "gotzmann_number",
    "hilbert_function",
    "hilbert_polynomial",
    "is_admissible",
    "lex_segment_ideal",
    "macaulay_rep",
    "parse_hilbert_polynomial",
    "revlex_lemma_check",
    "revlex_segment",
    "SchubertIndex",
    "SubspaceBasis",
    "compare_indices",
    "hilbert_point",
    "index_weight",
    "initial_subspace",
    "make_index",
    "max_index",
    "pluecker_coordinate",
    "schubert_cell_index",
    "GinResult",
    "WeightVector",
    "generic_initial_ideal",
    "is_borel_fixed",
    "one_ps_limit_check",
    "random_linear_change",
    "secondary_gin",
    "weight_vector_for_order",
]
