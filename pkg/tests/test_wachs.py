"""Wachs and signed Wachs permutations: membership, codes, rank function,
closed-form order and covers, involutions, Moebius and polynomial identities.
"""

import itertools
import math

import pytest

from wachsposets.bruhat import bruhat_leq_a, bruhat_leq_b, covers_a, covers_b
from wachsposets.perms import (
    compose, descent_set_a, full_position, identity, inverse, length_a,
    longest_element, signed_reflection,
)
from wachsposets.qpoly import IntPolynomial, X, q_int
from wachsposets.wachs import (
    chi_map, closed_polys, coatom_c, decode_a, decode_b, descent_class,
    encode_a, encode_b, enumerate_wachs, f_map, involution_wa, involution_wb,
    is_wachs, mobius_closed_a, mobius_closed_b, rank_lw_a, rank_lw_b,
    stabilizer_gi, star, stats_distribution_check, wachs_covers_a,
    wachs_covers_b, wachs_leq_a, wachs_leq_b,
)


# --------------------------------------------------------------- membership


def test_membership_examples():
    assert is_wachs((2, 1, 4, 3))
    assert is_wachs((1, 2, 3))
    assert not is_wachs((3, 4, -2, 1))
    assert is_wachs((-2, -1, 4, 3))
    assert not is_wachs((1, 3, 2, 4))


def test_star_pairing():
    assert [star(i, 6) for i in range(1, 7)] == [2, 1, 4, 3, 6, 5]
    assert [star(i, 7) for i in range(1, 8)] == [2, 1, 4, 3, 6, 5, 7]


def test_counts_match_closed_formulas():
    for n in range(1, 9):
        m = n // 2
        want = 2 ** m * math.factorial(m)
        if n % 2 == 1:
            want *= m + 1
        assert len(enumerate_wachs("A", n)) == want
    for n in range(1, 7):
        m = n // 2
        want = 4 ** m * math.factorial(m)
        if n % 2 == 1:
            want *= 2 * (m + 1)
        assert len(enumerate_wachs("B", n)) == want


def test_enumeration_is_sorted_and_valid():
    for kind, n in (("A", 5), ("B", 4)):
        els = enumerate_wachs(kind, n)
        assert els == sorted(els)
        assert len(set(els)) == len(els)
        assert all(is_wachs(v) for v in els)


# -------------------------------------------------------------------- codes


def test_chi_map_examples():
    assert chi_map((2, 1, 3, 4, 5)) == (2, 1, 3, 4)
    assert chi_map((5, 1, 2, 3, 4)) == (1, 2, 3, 4)


def test_encode_examples():
    assert encode_a((4, 3, 1, 2, 7, 5, 6)) == (3, (2, 1, 3), frozenset({1}))
    assert encode_b((-3, -4, 1, 2, 6, 5)) == ((-2, 1, 3), frozenset({1, 3}))
    assert encode_b((-1, -2, 5, 6, -7, 3, 4)) == (
        -3, (-1, 3, 2), frozenset({1}))


def test_encode_rejects_non_wachs():
    with pytest.raises(ValueError):
        encode_a((1, 3, 2, 4))
    with pytest.raises(ValueError):
        encode_b((3, 4, -2, 1))


def test_code_round_trip():
    for n in range(1, 8):
        for v in enumerate_wachs("A", n):
            assert decode_a(encode_a(v), n) == v
    for n in range(1, 6):
        for v in enumerate_wachs("B", n):
            assert decode_b(encode_b(v), n) == v


def test_code_shapes():
    for v in enumerate_wachs("A", 7):
        i, tau, t = encode_a(v)
        assert 1 <= i <= 4 and len(tau) == 3 and t <= {1, 2, 3}
    for v in enumerate_wachs("B", 5):
        i, tau, t = encode_b(v)
        assert 1 <= abs(i) <= 3 and len(tau) == 2 and t <= {1, 2}


def test_quotient_map():
    assert length_a(f_map((3, 4, 2, 1, 5, 6))) == 1
    # f is onto the smaller symmetric group
    images = {f_map(v) for v in enumerate_wachs("A", 6)}
    assert images == set(itertools.permutations((1, 2, 3)))


# --------------------------------------------------------------------- rank


def test_rank_examples():
    assert rank_lw_a((3, 4, 2, 1, 5, 6)) == 4
    assert rank_lw_a((3, 4, 7, 2, 1, 5, 6)) == 8
    assert rank_lw_b((-1, -2, 5, 6, -7, 3, 4)) == 17


def test_rank_of_top_element():
    for n in range(1, 9):
        m = n // 2
        top = rank_lw_a(longest_element("A", n))
        assert top == n * (n - 1) // 2 - m * (m - 1) // 2
    for n in range(1, 7):
        m = n // 2
        top = rank_lw_b(longest_element("B", n))
        assert top == n * n - m * m


# -------------------------------------------------------------------- order


def test_order_examples():
    u = decode_a((4, (2, 4, 3, 1), frozenset({1, 2, 3})), 9)
    v = decode_a((3, (3, 4, 2, 1), frozenset({2})), 9)
    assert wachs_leq_a(u, v)
    u = (3, 4, -5, -6, 1, 2, 9, -7, -8)
    v = (-3, -4, -9, 1, 2, -5, -6, -8, -7)
    assert not wachs_leq_b(u, v)


def test_order_matches_oracle_small():
    for n in range(1, 7):
        for u, v in itertools.product(enumerate_wachs("A", n), repeat=2):
            assert wachs_leq_a(u, v) == bruhat_leq_a(u, v)
    for n in range(1, 5):
        for u, v in itertools.product(enumerate_wachs("B", n), repeat=2):
            assert wachs_leq_b(u, v) == bruhat_leq_b(u, v)


def test_code_comparison_alone_is_not_the_order():
    # comparing the two code components separately is neither necessary
    # nor sufficient
    u, v = (2, 1, 4, 3, 6, 5), (1, 2, 5, 6, 3, 4)
    (fu, tu), (fv, tv) = encode_a(u), encode_a(v)
    assert bruhat_leq_a(fu, fv) and not bruhat_leq_a(u, v)
    u, v = (2, 1, 4, 3), (3, 4, 1, 2)
    (fu, tu), (fv, tv) = encode_a(u), encode_a(v)
    assert bruhat_leq_a(u, v) and not tu <= tv


# ------------------------------------------------------------------- covers


def test_cover_examples():
    v = (7, 8, 2, 1, 5, 6, 9, 3, 4)
    got = wachs_covers_a(v)
    assert {(7, 8, 1, 2, 5, 6, 9, 3, 4),
            (7, 8, 2, 1, 5, 6, 4, 3, 9),
            (6, 5, 2, 1, 8, 7, 9, 3, 4)} <= got
    for u in got:
        assert rank_lw_a(v) - rank_lw_a(u) == 1
        assert wachs_leq_a(u, v)


def test_covers_match_transitive_reduction_small():
    for kind, n, cov, leq in (("A", 5, wachs_covers_a, bruhat_leq_a),
                              ("B", 4, wachs_covers_b, bruhat_leq_b)):
        els = enumerate_wachs(kind, n)
        for v in els:
            below = [u for u in els if u != v and leq(u, v)]
            want = {u for u in below
                    if not any(u != z and leq(u, z) for z in below)}
            assert cov(v) == want


def test_signed_cover_chain():
    chain = [(9, 2, 1, -3, -4, 8, 7, -6, -5),
             (-9, 2, 1, -3, -4, 8, 7, -6, -5),
             (1, 2, -9, -3, -4, 8, 7, -6, -5),
             (1, 2, -9, -3, -4, 8, 7, -5, -6)]
    for lo, hi in zip(chain, chain[1:]):
        assert lo in wachs_covers_b(hi)
        assert rank_lw_b(hi) - rank_lw_b(lo) == 1


# -------------------------------------------------------------- involutions


def test_involution_examples():
    assert involution_wa((4, 3, 1, 2, 7, 6, 5), 2, 3) == (4, 3, 6, 5, 7, 1, 2)
    assert involution_wb(((-2, 1, 4, 3), frozenset({1, 4})), 3, -3) == \
        ((-2, 1, -4, 3), frozenset({1, 3, 4}))
    assert involution_wb(((-2, 1, 4, 3), frozenset({1, 4})), 1, -3) == \
        ((-4, 1, 2, 3), frozenset({3, 4}))


def test_involution_wa_is_an_involution():
    for n in (4, 5, 6):
        m = n // 2
        for v in enumerate_wachs("A", n):
            for i in range(1, m + 1):
                for j in range(i + 1, m + 1):
                    w = involution_wa(v, i, j)
                    assert is_wachs(w)
                    assert involution_wa(w, i, j) == v


def test_involution_wb_is_an_involution():
    for v in enumerate_wachs("B", 6):
        code = encode_b(v)
        m = 3
        for i in range(1, m + 1):
            for j in range(-m, m + 1):
                if j == 0 or i == j or (0 < j < i):
                    continue
                w = involution_wb(code, i, j)
                assert involution_wb(w, i, j) == code


def _swap_slots(sigma, i, j):
    m = len(sigma)
    sw = list(identity(m))
    sw[i - 1], sw[j - 1] = j, i
    return compose(sigma, tuple(sw))


def test_involution_wa_steps_down_one_rank():
    # v = (tau, T), i, j outside T and tau (i,j) covered by tau: the image
    # is one rank below v, and any u < v with quotient below tau (i,j)
    # drops below the image
    for n in (4, 6):
        m = n // 2
        els = enumerate_wachs("A", n)
        for v in els:
            tau, t = encode_a(v)
            for i in range(1, m + 1):
                for j in range(i + 1, m + 1):
                    if i in t or j in t:
                        continue
                    tij = _swap_slots(tau, i, j)
                    if tij not in covers_a(tau):
                        continue
                    w = involution_wa(v, i, j)
                    assert wachs_leq_a(w, v) and w != v
                    assert rank_lw_a(v) - rank_lw_a(w) == 1
                    for u in els:
                        if (u != v and wachs_leq_a(u, v)
                                and bruhat_leq_a(encode_a(u)[0], tij)):
                            assert wachs_leq_a(u, w)


def test_involution_wa_steps_down_one_rank_odd():
    # odd rank: same step for the quotient part, and sliding the extremal
    # value two slots to the right also steps down by one
    for n in (5, 7):
        m = n // 2
        for v in enumerate_wachs("A", n):
            k, sig, s = encode_a(v)
            if k <= m and k not in s:
                p = 2 * k - 1
                w = list(v)
                w[p - 1], w[p + 1] = w[p + 1], w[p - 1]
                w = tuple(w)
                assert is_wachs(w)
                assert wachs_leq_a(w, v) and rank_lw_a(v) - rank_lw_a(w) == 1
            for i in range(1, m + 1):
                for j in range(i + 1, m + 1):
                    if i in s or j in s or k in s:
                        continue
                    if _swap_slots(sig, i, j) not in covers_a(sig):
                        continue
                    w = involution_wa(v, i, j)
                    assert wachs_leq_a(w, v) and w != v
                    assert rank_lw_a(v) - rank_lw_a(w) == 1


def test_involution_wb_steps_down_one_rank():
    for n in (4, 6):
        m = n // 2
        els = enumerate_wachs("B", n)
        for v in els:
            tau, t = encode_b(v)
            ctau = covers_b(tau)
            for i in range(1, m + 1):
                for j in itertools.chain(range(-m, 0), range(i + 1, m + 1)):
                    if i == j or i in t or abs(j) in t:
                        continue
                    tij = compose(tau, signed_reflection(i, j, m))
                    if tij not in ctau:
                        continue
                    w = decode_b(involution_wb((tau, t), i, j), n)
                    assert wachs_leq_b(w, v) and w != v
                    assert rank_lw_b(v) - rank_lw_b(w) == 1
                    for u in els:
                        if (u != v and wachs_leq_b(u, v)
                                and bruhat_leq_b(encode_b(u)[0], tij)):
                            assert wachs_leq_b(u, w)


def test_join_irreducibility_step():
    # u < v with the extremal value of u strictly right of that of v:
    # u stays below the canonical single step down from v
    for n in (5, 7):
        els = enumerate_wachs("A", n)
        for v in els:
            i = v.index(n) + 1
            for u in els:
                if u == v or not wachs_leq_a(u, v):
                    continue
                if u.index(n) + 1 <= i:
                    continue
                z = list(v)
                if i + 1 < n and v[i] < v[i + 1]:
                    z[i - 1], z[i + 1] = z[i + 1], z[i - 1]
                else:
                    z[i], z[i + 1] = z[i + 1], z[i]
                z = tuple(z)
                assert wachs_leq_a(u, z) and wachs_leq_a(z, v) and z != v


def test_interval_subsets_are_union_closed():
    for kind, n, leq, enc, dec in (
            ("A", 5, bruhat_leq_a, encode_a, decode_a),
            ("B", 5, bruhat_leq_b, encode_b, decode_b)):
        els = enumerate_wachs(kind, n)
        idx = {v: i for i, v in enumerate(els)}
        leq_m = [[leq(x, y) for y in els] for x in els]
        codes = [enc(v) for v in els]
        for a in range(len(els)):
            for b in range(len(els)):
                if not leq_m[a][b]:
                    continue
                mids: dict = {}
                for c in range(len(els)):
                    if leq_m[a][c] and leq_m[c][b]:
                        i, sig, s = codes[c]
                        mids.setdefault((i, sig), []).append(s)
                for (i, sig), subsets in mids.items():
                    for s1, s2 in itertools.combinations(subsets, 2):
                        w = idx[dec((i, sig, s1 | s2), n)]
                        assert leq_m[a][w] and leq_m[w][b]


# ------------------------------------------------------------- coatom map


def test_coatom_examples():
    assert coatom_c((-9, 4, 3, -6, -5, 2, 1, -8, -7)) == \
        (9, 4, 3, -6, -5, 2, 1, -8, -7)
    assert coatom_c((4, 3, -6, -5, 9, 2, 1, -8, -7)) == \
        (4, 3, -6, -5, 9, 1, 2, -8, -7)
    assert coatom_c((3, 4, -9, 1, 2, 6, 5, -7, -8)) == \
        (-9, 4, 3, 1, 2, 6, 5, -7, -8)


def test_coatom_properties():
    for n in (3, 5):
        els = enumerate_wachs("B", n)
        for v in els:
            j = full_position(v, n)
            if j == n:
                continue
            c = coatom_c(v)
            assert c in wachs_covers_b(v)
            assert rank_lw_b(v) - rank_lw_b(c) == 1
            # the only coatom that moves the extremal value
            movers = {w for w in wachs_covers_b(v)
                      if full_position(w, n) != j}
            assert movers <= {c}
            # every u below v whose extremal value sits further right
            # stays below c(v)
            for u in els:
                if u != v and wachs_leq_b(u, v) and full_position(u, n) > j:
                    assert wachs_leq_b(u, c)


# ------------------------------------------------------------------ Moebius


def test_mobius_closed_examples():
    assert mobius_closed_a(encode_a((2, 1, 4, 3)), 4) == 1
    assert mobius_closed_a(encode_a((1, 2, 4, 3)), 4) == -1
    assert mobius_closed_a(encode_a((3, 4, 1, 2)), 4) == 0
    assert mobius_closed_b(encode_b((2, 1, 4, 3)), 4) == 1
    assert mobius_closed_b(encode_b((1, 2, 3, 4, 5)), 5) == 1
    assert mobius_closed_b(encode_b((1, 2, 5, 3, 4)), 5) == 0


# -------------------------------------------------------------- polynomials


def test_closed_polynomials():
    forms = closed_polys("A", 4)
    assert forms.rank_gen == (1 + X) ** 2 * (1 + X ** 3)
    assert forms.char == (X - 1) ** 2 * X ** 3
    assert forms.rank == 5
    forms = closed_polys("A", 5)
    assert forms.rank_gen == \
        (1 + X) ** 2 * (1 + X ** 3) * IntPolynomial([1, 0, 1, 0, 1])
    assert forms.rank == 9
    forms = closed_polys("B", 2)
    assert forms.rank_gen == (1 + X) * (1 + X ** 2)
    assert forms.rank == 3


def test_rank_polynomials_are_reciprocal():
    for kind, top in (("A", 8), ("B", 6)):
        for n in range(1, top + 1):
            assert closed_polys(kind, n).rank_gen.is_reciprocal()


def test_rank_polynomial_counts_elements():
    for kind, top in (("A", 6), ("B", 4)):
        for n in range(1, top + 1):
            gen = closed_polys(kind, n).rank_gen
            assert gen(1) == len(enumerate_wachs(kind, n))


# --------------------------------------------------- statistics, stabilizer


def test_statistics_distribution():
    for n in (2, 4, 6):
        assert stats_distribution_check(n)
    with pytest.raises(ValueError):
        stats_distribution_check(5)


def test_stabilizer_of_odd_generators():
    for n in (2, 4):
        assert set(stabilizer_gi(n)) == set(enumerate_wachs("A", n))


def test_descent_class():
    cls = descent_class(6, frozenset({1}))
    assert (1, 2, 4, 3, 6, 5) in cls
    assert (5, 6, 1, 2, 3, 4) in cls
    assert len(cls) == math.factorial(6) // 2
