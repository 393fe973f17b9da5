"""Invariants of coordinatewise affine substitutions on F_q[x1..xn]."""

from .gf import Field, field_create, parse_field, euler_phi, moebius
from .mpoly import Poly, gradlex_cmp, parse_poly, format_poly
from .action import (
    GroupElem,
    apply,
    group_mul,
    inverse,
    element_order,
    reduce_to_type,
    canonical_decomposition,
    parse_group_elem,
)
from .invariant import (
    generating_set,
    is_free,
    jacobian_det,
    minimal_monomials,
    nstar_bounds,
    product_one_vectors,
    sylow_invariant_generators,
    translation_generators,
)
from .prodone import ProdOneSeq, davenport_brute, is_minimal_product_one, monomial_to_sequence
from .homog import (
    FormSpec,
    count_invariant_irreducible,
    dehomogenize,
    diamond,
    graded_component,
    homogenize,
    invariant_factors_of_binomial,
    s_set,
    star,
)
from .oracle import (
    BudgetError,
    enumerate_fixed_forms,
    count_irreducible_among,
    invariant_space_dim,
    subalgebra_graded_dim,
    verify_generators,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
