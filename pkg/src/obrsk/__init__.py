"""Bounded RSK on notched bitableaux and Pfaffian initial ideals.

Exact (integer / rational) combinatorics: finite multisets on N and N^2 with
the counting order on formal differences, notched skew-symmetric bitableaux,
two-row arrays, the bounded RSK correspondence and its inverse, chain
combinatorics on the grid attached to a fixed d-subset beta, and the Pfaffian
generators whose leading terms are certified against chain monomials degree by
degree.
"""

from .multisets import Cmp, FormalDiff, count_le, diff_compare, is_chain, multiset_minus, plane_compare
from .tableaux import (
    GridSpec,
    NotchedBitableau,
    NotchedTableau,
    SignKind,
    bitableau_bounded_by,
    classify_sign,
    iota,
    is_on_grid,
    up_down,
    validate_row_strict,
    validate_semistandard,
    validate_skew_symmetric,
)
from .arrays import L_involution, SkewPair, TwoRowArray, psi, psi_inv, split_parts, validate_skew_pair
from .correspondence import (
    bounded_insert,
    dual_insert,
    forward_step,
    obrsk,
    obrsk_inverse,
    obrsk_negative,
    obrsk_negative_steps,
    pair_bounded_by,
    reverse_step,
    robrsk,
)
from .grassmannian import (
    ChainSign,
    IdElement,
    Region,
    chain_in_chains_set,
    chain_pair,
    enumerate_extended_chains,
    enumerate_id,
    hash_reflect,
    id_leq,
    is_quotient_monomial,
    region_of,
    roots_of,
    split_chain,
    t_w_bounds,
    w_of_chain,
)
from .polynomials import SparsePoly, TermOrder
from .ideal import (
    generators,
    hilbert_counts,
    initial_monomials_degree,
    chains_monomials_degree,
    patch_entry,
    pfaffian_generator,
    standard_monomials,
    verify_main_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
