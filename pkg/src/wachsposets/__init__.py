"""
Exact combinatorics of Wachs and signed Wachs permutations: enumeration,
pair/subset codes, Bruhat and weak orders on the induced posets, and a
verification suite for their closed-form structure.
"""

from .perms import (
    BLength, SizeCapError, StatRecord, check_perm, check_window, compose,
    descent_set_a, descent_set_b, embed_tilde, format_perm, format_window,
    identity, inverse, length_a, length_b, longest_element, parse_perm,
    parse_window, signed_reflection, stats_a,
)
from .bruhat import bruhat_leq_a, bruhat_leq_b, covers_a, covers_b
from .qpoly import IntPolynomial, q_factorial, q_int
from .posets import (
    FinitePoset, build_poset, cartesian_product, characteristic_polynomial,
    dual_check, grade, lattice_checks, mobius_table, ordinal_product,
    poset_isomorphic, rank_generating_polynomial, to_dot, to_json,
)
from .wachs import (
    ClosedForms, chi_map, closed_polys, coatom_c, decode_a, decode_b,
    encode_a, encode_b, enumerate_wachs, f_map, involution_wa, involution_wb,
    is_wachs, mobius_closed_a, mobius_closed_b, rank_lw_a, rank_lw_b, star,
    wachs_covers_a, wachs_covers_b, wachs_leq_a, wachs_leq_b,
)
from .weak import tl_set, weak_leq, weak_product_iso

__version__ = "0.1.0"
