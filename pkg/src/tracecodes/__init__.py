"""Finite fields, linear codes and their trace (defining-set) representations."""

from .bases import FieldBasis, coordinates, dual_basis, find_normal_element, is_normal, polynomial_basis
from .codes import (
    CyclicSpec,
    LinearCode,
    WeightDistribution,
    check_polynomial,
    code_equal,
    code_from_matrix,
    cyclic_code,
    cyclotomic_cosets,
    min_distance,
    poly_gcd,
    reciprocal,
    weight_distribution,
)
from .galois import (
    FieldElement,
    FieldSpec,
    GFPolynomial,
    embed,
    find_generator,
    frobenius,
    make_field,
    min_poly,
    mult_order,
    project,
    rel_trace,
)
from .linalg import GFMatrix, rref
from .representations import (
    WolfmannSpec,
    cyclic_defining_set,
    defining_set_from_matrix,
    wolfmann_code,
    wolfmann_spec_from_check,
)
from .trace_construction import (
    CharacterSum,
    DefiningSet,
    char_sum,
    codeword,
    generator_matrix_from_D,
    n_x_zero,
    trace_code,
    weight_via_character_sum,
)

__version__ = "0.1.0"

__all__ = [
    "FieldBasis", "coordinates", "dual_basis", "find_normal_element", "is_normal", "polynomial_basis",
    "CyclicSpec", "LinearCode", "WeightDistribution", "check_polynomial", "code_equal",
    "code_from_matrix", "cyclic_code", "cyclotomic_cosets", "min_distance", "poly_gcd",
    "reciprocal", "weight_distribution",
    "FieldElement", "FieldSpec", "GFPolynomial", "embed", "find_generator", "frobenius",
    "make_field", "min_poly", "mult_order", "project", "rel_trace",
    "GFMatrix", "rref",
    "WolfmannSpec", "cyclic_defining_set", "defining_set_from_matrix", "wolfmann_code",
    "wolfmann_spec_from_check",
    "CharacterSum", "DefiningSet", "char_sum", "codeword", "generator_matrix_from_D",
    "n_x_zero", "trace_code", "weight_via_character_sum",
]
