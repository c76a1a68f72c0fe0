"""Diagram method for coadjoint orbits of factor algebras of ut(n)."""

from .diagram import Diagram, StepRecord, Symbol, build_diagram
from .invariants import (
    InvariantCandidate,
    all_candidates,
    candidate,
    characteristic_matrix,
    index_sets,
)
from .permutation import (
    Permutation,
    SignClass,
    build_w,
    classify_by_signs,
    column_prefix_product,
    inversions,
    partial_products,
    reflection_product,
    root_sign,
)
from .poisson import (
    bracket_basis,
    generic_rank_oracle,
    is_invariant,
    jacobian_rank,
    poisson_bracket,
)
from .polynomial import (
    LAMBDA,
    SparsePoly,
    SymbolicMatrix,
    Var,
    determinant,
    evaluate_mod_p,
    lambda_coefficients,
    partial_derivative,
)
from .roots import (
    IdealError,
    RegularIdeal,
    Root,
    closure,
    enumerate_regular_ideals,
    is_regular,
    positive_roots,
    root_sum,
)

__version__ = "0.1.0"
