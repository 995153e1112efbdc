"""Invariant rings of three-dimensional upper triangular groups over F_p."""

from trinv.algebra import FieldElement, Matrix3, check_modulus, inverse, mat_inverse, mat_mul, rank
from trinv.poly import Polynomial, evaluate, monomial_basis, render, substitute_linear
from trinv.group import (
    MatrixGroup,
    ReflectionClass,
    classify,
    closure,
    construct_A,
    construct_B,
    construct_sigma,
    example_group,
    is_abelian,
    pseudoreflection_subgroup,
    unipotent_subgroup,
)
from trinv.action import apply, effective_norm, is_invariant, stabilizer
from trinv.invariants import (
    hilbert_falsify,
    hilbert_function,
    hsop_check,
    invariant_basis,
)
from trinv.verdict import Outcome, classify_polynomiality

__version__ = "0.1.0"
