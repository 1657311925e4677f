"""
Wachs permutations, their pair/subset codes, and the induced Bruhat order.

A permutation v is a Wachs permutation when the positions of i and its
partner i* differ by at most one, for every i < n, where i* is i-1 for even
i and i+1 for odd i.  The same condition on the (signed) inverse defines
signed Wachs permutations.  Every such element is encoded by a code

    even rank 2m:   (tau, T)     tau in S_m or B_m, T subset of [m]
    odd rank 2m+1:  (i, tau, T)  plus the slot i of the extremal value

and all order-theoretic questions (comparison, covers, Moebius values,
rank polynomials) reduce to the code.  Subsets are stored as frozensets.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Sequence

from . import qpoly
from .bruhat import bruhat_leq_a, bruhat_leq_b, covers_a, covers_b
from .perms import (
    MAX_N_A, MAX_N_B, SizeCapError, compose, descent_set_a, full_position,
    full_value, identity, inverse, length_a, length_b, signed_reflection,
    stats_a,
)

__all__ = [
    "star", "is_wachs", "enumerate_wachs",
    "encode_a", "decode_a", "encode_b", "decode_b", "chi_map", "f_map",
    "rank_lw_a", "rank_lw_b",
    "wachs_leq_a", "wachs_leq_b", "wachs_covers_a", "wachs_covers_b",
    "involution_wa", "involution_wb", "coatom_c",
    "mobius_closed_a", "mobius_closed_b",
    "ClosedForms", "closed_polys",
    "stats_distribution_check", "stabilizer_gi", "descent_class",
]


def star(i: int, n: int) -> int:
    """The partner of i: i-1 for even i, i+1 for odd i < n, else n."""
    if i % 2 == 0:
        return i - 1
    return i + 1 if i + 1 <= n else n


def is_wachs(w: Sequence[int]) -> bool:
    """Membership test; works on one-line words and on windows."""
    n = len(w)
    pos = {}
    for k, v in enumerate(w, 1):
        pos[v] = k
        pos[-v] = -k
    for i in range(1, n):
        if abs(pos[i] - pos[star(i, n)]) > 1:
            return False
    return True


def enumerate_wachs(kind: str, n: int) -> list:
    """All Wachs elements of the given rank, lexicographically sorted."""
    if kind == "A":
        if n > MAX_N_A:
            raise SizeCapError(f"n={n} exceeds the cap {MAX_N_A}")
        return [p for p in itertools.permutations(range(1, n + 1)) if is_wachs(p)]
    if kind == "B":
        if n > MAX_N_B:
            raise SizeCapError(f"n={n} exceeds the cap {MAX_N_B}")
        out = []
        for p in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product((1, -1), repeat=n):
                w = tuple(s * v for s, v in zip(signs, p))
                if is_wachs(w):
                    out.append(w)
        out.sort()
        return out
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------- codes, A


def chi_map(v: Sequence[int]) -> tuple:
    """Delete the value n from a Wachs permutation of odd rank."""
    n = len(v)
    return tuple(x for x in v if x != n)


def _encode_even_a(v: Sequence[int]):
    m = len(v) // 2
    tau = []
    t = set()
    for i in range(1, m + 1):
        a = v[2 * i - 2]
        tau.append((a + 1) // 2)
        if a % 2 == 0:
            t.add(i)
    return tuple(tau), frozenset(t)


def encode_a(v: Sequence[int]):
    """Code of a Wachs permutation: (tau, T), or (i, tau, T) for odd rank.

    >>> encode_a((4, 3, 1, 2, 7, 5, 6))
    (3, (2, 1, 3), frozenset({1}))
    """
    v = tuple(v)
    n = len(v)
    if not is_wachs(v):
        raise ValueError(f"{v} is not a Wachs permutation")
    if n % 2 == 0:
        return _encode_even_a(v)
    p = v.index(n) + 1
    assert p % 2 == 1, "the extremal value of a Wachs permutation sits at an odd slot"
    tau, t = _encode_even_a(chi_map(v))
    return ((p + 1) // 2, tau, t)


def _decode_even_a(tau, t) -> list:
    out = []
    for i, s in enumerate(tau, 1):
        pair = (2 * s, 2 * s - 1) if i in t else (2 * s - 1, 2 * s)
        out.extend(pair)
    return out


def decode_a(code, n: int) -> tuple:
    """Inverse of encode_a for rank n."""
    if n % 2 == 0:
        tau, t = code
        return tuple(_decode_even_a(tau, t))
    i, tau, t = code
    out = _decode_even_a(tau, t)
    out.insert(2 * i - 2, n)
    return tuple(out)


def f_map(v: Sequence[int]) -> tuple:
    """The quotient permutation tau of the code of v."""
    code = encode_a(v)
    return code[0] if len(v) % 2 == 0 else code[1]


# ---------------------------------------------------------------- codes, B


def _encode_even_b(v: Sequence[int]):
    m = len(v) // 2
    tau = []
    t = set()
    for i in range(1, m + 1):
        a = v[2 * i - 2]
        if a > 0:
            tau.append((a + 1) // 2)
            if a % 2 == 0:
                t.add(i)
        else:
            tau.append(a // 2)  # floor: -5 -> -3, -6 -> -3
            if a % 2 == 1:
                t.add(i)
    return tuple(tau), frozenset(t)


def encode_b(v: Sequence[int]):
    """Code of a signed Wachs permutation.

    >>> encode_b((-3, -4, 1, 2, 6, 5))
    ((-2, 1, 3), frozenset({1, 3}))
    >>> encode_b((-1, -2, 5, 6, -7, 3, 4))
    (-3, (-1, 3, 2), frozenset({1}))
    """
    v = tuple(v)
    n = len(v)
    if not is_wachs(v):
        raise ValueError(f"{v} is not a signed Wachs permutation")
    if n % 2 == 0:
        return _encode_even_b(v)
    j = full_position(v, n)
    assert j % 2 == 1
    i = (j + 1) // 2 if j > 0 else (j - 1) // 2
    trimmed = tuple(x for x in v if abs(x) != n)
    tau, t = _encode_even_b(trimmed)
    return (i, tau, t)


def _decode_even_b(tau, t) -> list:
    out = []
    for i, s in enumerate(tau, 1):
        first, second = (2 * s - 1, 2 * s) if s > 0 else (2 * s, 2 * s + 1)
        if i in t:
            first, second = second, first
        out.extend((first, second))
    return out


def decode_b(code, n: int) -> tuple:
    """Inverse of encode_b for rank n."""
    if n % 2 == 0:
        tau, t = code
        return tuple(_decode_even_b(tau, t))
    i, tau, t = code
    out = _decode_even_b(tau, t)
    j = 2 * i - 1 if i > 0 else 2 * i + 1  # full position of the value n
    if j > 0:
        out.insert(j - 1, n)
    else:
        out.insert(-j - 1, -n)
    return tuple(out)


# ---------------------------------------------------------------- rank


def rank_lw_a(v: Sequence[int]) -> int:
    """Length of v above the minimal element of its coset: l(v) - l(tau)."""
    return length_a(v) - length_a(f_map(v))


def rank_lw_b(v: Sequence[int]) -> int:
    code = encode_b(v)
    tau = code[0] if len(v) % 2 == 0 else code[1]
    return length_b(v).total - length_b(tau).total


# ---------------------------------------------------------------- order


@functools.lru_cache(maxsize=65536)
def _frozen_cells_a(sigma, tau) -> frozenset:
    """Cells fixed by every element of the Bruhat interval [sigma, tau].

    Plain agreement of sigma and tau is not enough: a saturated chain
    between them may pass through elements moving a cell on which the
    endpoints agree, and such a detour can toggle the subset entry of
    that cell.  Only cells frozen across the whole interval constrain
    the subsets.
    """
    m = len(sigma)
    out = {k for k in range(1, m + 1) if sigma[k - 1] == tau[k - 1]}
    if not out or sigma == tau:
        return frozenset(out)
    for rho in itertools.permutations(range(1, m + 1)):
        if bruhat_leq_a(sigma, rho) and bruhat_leq_a(rho, tau):
            out = {k for k in out if rho[k - 1] == sigma[k - 1]}
            if not out:
                break
    return frozenset(out)


@functools.lru_cache(maxsize=65536)
def _frozen_cells_b(sigma, tau) -> frozenset:
    """Signed analogue of _frozen_cells_a, over the interval in B_m."""
    m = len(sigma)
    out = {k for k in range(1, m + 1) if sigma[k - 1] == tau[k - 1]}
    if not out or sigma == tau:
        return frozenset(out)
    for word in itertools.permutations(range(1, m + 1)):
        for signs in itertools.product((1, -1), repeat=m):
            rho = tuple(a * b for a, b in zip(word, signs))
            if bruhat_leq_b(sigma, rho) and bruhat_leq_b(rho, tau):
                out = {k for k in out if rho[k - 1] == sigma[k - 1]}
                if not out:
                    return frozenset()
    return frozenset(out)


def wachs_leq_a(u: Sequence[int], v: Sequence[int]) -> bool:
    """Bruhat comparison of Wachs permutations, via codes only."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise ValueError("rank mismatch")
    n = len(u)
    if n % 2 == 0:
        sigma, s = encode_a(u)
        tau, t = encode_a(v)
        if not bruhat_leq_a(sigma, tau):
            return False
        return s & _frozen_cells_a(sigma, tau) <= t
    i, sigma, s = encode_a(u)
    j, tau, t = encode_a(v)
    if j > i or not bruhat_leq_a(sigma, tau):
        return False
    m = n // 2
    window = frozenset(range(1, j)) | frozenset(range(i, m + 1))
    keep = window & _frozen_cells_a(sigma, tau)
    return s & keep <= t & keep


def wachs_leq_b(u: Sequence[int], v: Sequence[int]) -> bool:
    """Bruhat comparison of signed Wachs permutations, via codes only."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise ValueError("rank mismatch")
    n = len(u)
    if n % 2 == 0:
        sigma, s = encode_b(u)
        tau, t = encode_b(v)
        if not bruhat_leq_b(sigma, tau):
            return False
        return s & _frozen_cells_b(sigma, tau) <= t
    i, sigma, s = encode_b(u)
    j, tau, t = encode_b(v)
    if j > i or not bruhat_leq_b(sigma, tau):
        return False
    m = n // 2
    lo, hi = min(abs(i), abs(j)), max(abs(i), abs(j))
    if (i > 0) == (j > 0):
        window = frozenset(range(1, lo)) | frozenset(range(hi, m + 1))
    else:
        # the extremal value changes sign between u and v; sweeping it
        # through the centre disturbs every cell below max(|i|, |j|)
        window = frozenset(range(hi, m + 1))
    keep = window & _frozen_cells_b(sigma, tau)
    return s & keep <= t & keep


def _moved_cells(tau, sigma) -> frozenset:
    """Window positions moved by tau^-1 sigma (the cells of a reflection)."""
    r = compose(inverse(tau), sigma)
    return frozenset(k for k in range(1, len(r) + 1) if r[k - 1] != k)


def wachs_covers_a(v: Sequence[int]) -> set:
    """Elements covered by v inside the Wachs permutations."""
    v = tuple(v)
    n = len(v)
    m = n // 2
    out = set()
    if n % 2 == 0:
        tau, t = encode_a(v)
        for x in t:
            out.add(decode_a((tau, t - {x}), n))
        for sigma in covers_a(tau):
            cells = _moved_cells(tau, sigma)
            if t.isdisjoint(cells):
                out.add(decode_a((sigma, t | cells), n))
        return out
    j, tau, t = encode_a(v)
    for x in t:
        out.add(decode_a((j, tau, t - {x}), n))
    if 1 <= j <= m and j not in t:
        out.add(decode_a((j + 1, tau, t | {j}), n))
    for sigma in covers_a(tau):
        cells = _moved_cells(tau, sigma)
        if t.isdisjoint(cells):
            out.add(decode_a((j, sigma, t | cells), n))
    return out


def _moved_cells_b(tau, sigma) -> frozenset:
    r = compose(inverse(tau), sigma)
    return frozenset(k for k in range(1, len(r) + 1) if r[k - 1] != k)


def wachs_covers_b(v: Sequence[int]) -> set:
    """Elements covered by v inside the signed Wachs permutations."""
    v = tuple(v)
    n = len(v)
    m = n // 2
    out = set()
    if n % 2 == 0:
        tau, t = encode_b(v)
        for x in t:
            out.add(decode_b((tau, t - {x}), n))
        for sigma in covers_b(tau):
            cells = _moved_cells_b(tau, sigma)
            if t.isdisjoint(cells):
                out.add(decode_b((sigma, t | cells), n))
        return out
    j, tau, t = encode_b(v)
    for x in t:
        out.add(decode_b((j, tau, t - {x}), n))
    # slide the extremal value one slot further from the front
    if j == -1:
        out.add(decode_b((1, tau, t), n))
    elif j != m + 1:
        x = j if j > 0 else -j - 1
        if 1 <= x <= m and x not in t:
            out.add(decode_b((j + 1, tau, t | {x}), n))
    for sigma in covers_b(tau):
        cells = _moved_cells_b(tau, sigma)
        if t.isdisjoint(cells):
            out.add(decode_b((j, sigma, t | cells), n))
    return out


# ---------------------------------------------------------------- involutions


def involution_wa(v: Sequence[int], i: int, j: int) -> tuple:
    """The fixed-point-free involution on [l(u), l(w^A_ij(u))] intervals:
    exchange tau(i), tau(j) and toggle i, j in T.

    >>> involution_wa((4, 3, 1, 2, 7, 6, 5), 2, 3)
    (4, 3, 6, 5, 7, 1, 2)
    """
    v = tuple(v)
    n = len(v)
    m = n // 2
    if not 1 <= i < j <= m:
        raise ValueError(f"need 1 <= i < j <= {m}")
    swap = list(identity(m))
    swap[i - 1], swap[j - 1] = j, i
    if n % 2 == 0:
        tau, t = encode_a(v)
        return decode_a((compose(tau, tuple(swap)), t ^ {i, j}), n)
    k, tau, t = encode_a(v)
    return decode_a((k, compose(tau, tuple(swap)), t ^ {i, j}), n)


def involution_wb(code, i: int, j: int):
    """Code-level involution for even signed rank: tau -> tau (i,j)_B,
    T -> T symmetric-difference {i, |j|}.

    >>> involution_wb(((-2, 1, 4, 3), frozenset({1, 4})), 3, -3)
    ((-2, 1, -4, 3), frozenset({1, 3, 4}))
    """
    tau, t = code
    m = len(tau)
    refl = signed_reflection(i, j, m)
    return (compose(tau, refl), t ^ {i, abs(j)})


def coatom_c(v: Sequence[int]) -> tuple:
    """The canonical coatom map on signed Wachs permutations of odd rank."""
    v = tuple(v)
    n = len(v)
    if n % 2 == 0:
        raise ValueError("coatom map needs odd rank")
    j = full_position(v, n)

    def swap(p: int, q: int) -> tuple:
        f = {k: full_value(v, k) for k in range(-n, n + 1) if k != 0}
        f[p], f[q] = f[q], f[p]
        if q != -p:
            f[-p], f[-q] = f[-q], f[-p]
        return tuple(f[k] for k in range(1, n + 1))

    if j == -1:
        return swap(-1, 1)
    if full_value(v, j + 1) > full_value(v, j + 2):
        return swap(j + 1, j + 2)
    return swap(j, j + 2)


# ---------------------------------------------------------------- Moebius


def mobius_closed_a(code, n: int) -> int:
    """Closed form for mu(e, v) on Wachs permutations of rank n >= 2."""
    m = n // 2
    if n % 2 == 0:
        tau, t = code
        return (-1) ** len(t) if tau == identity(m) else 0
    i, tau, t = code
    if tau == identity(m) and i == m + 1:
        return (-1) ** len(t)
    return 0


def mobius_closed_b(code, n: int) -> int:
    """Closed form for mu(e, v) on signed Wachs permutations of rank n >= 2."""
    m = n // 2
    if n % 2 == 0:
        tau, t = code
        return (-1) ** len(t) if tau == identity(m) else 0
    i, tau, t = code
    if tau == identity(m) and i == m + 1:
        return (-1) ** len(t)
    return 0


# ---------------------------------------------------------------- polynomials


@dataclass(frozen=True)
class ClosedForms:
    rank_gen: qpoly.IntPolynomial
    char: qpoly.IntPolynomial
    rank: int


def closed_polys(kind: str, n: int) -> ClosedForms:
    """Closed-form rank generating function, characteristic polynomial and
    rank of the Bruhat order on (signed) Wachs permutations of rank n.
    The characteristic polynomial form needs n >= 2 in the signed case."""
    m = n // 2
    x = qpoly.X
    cube_fact = qpoly.q_factorial(m).substitute_power(3)
    if kind == "A":
        gen = (1 + x) ** m * cube_fact
        if n % 2 == 1:
            gen = gen * qpoly.q_int(m + 1).substitute_power(2)
        rank = n * (n - 1) // 2 - m * (m - 1) // 2
        char = (x - 1) ** m * x ** (n * (n - 1) // 2 - (m + 1) * m // 2)
        return ClosedForms(gen, char, rank)
    if kind == "B":
        gen = (1 + x) ** m * cube_fact
        for i in range(1, m + 1):
            gen = gen * (1 + x ** (3 * i - 1))
        if n % 2 == 1:
            gen = gen * qpoly.q_int(m + 1).substitute_power(2) * (1 + x ** n)
        rank = n * n - m * m
        char = (x - 1) ** m * x ** (n * n - m * m - m)
        return ClosedForms(gen, char, rank)
    raise ValueError(f"unknown kind {kind!r}")


def stats_distribution_check(n: int) -> bool:
    """For even rank: the length generating function equals the generating
    function of 3*emaj + odes over the Wachs permutations."""
    if n % 2 != 0:
        raise ValueError("even rank only")
    lhs: dict = {}
    rhs: dict = {}
    for v in enumerate_wachs("A", n):
        lw = rank_lw_a(v)
        lhs[lw] = lhs.get(lw, 0) + 1
        st = stats_a(v)
        k = 3 * st.emaj + st.odes
        rhs[k] = rhs.get(k, 0) + 1
    return lhs == rhs


def stabilizer_gi(n: int) -> list:
    """Elements of S_n whose conjugation fixes {s_i : i odd} setwise."""
    gens = []
    for i in range(1, n):
        if i % 2 == 1:
            w = list(identity(n))
            w[i - 1], w[i] = w[i], w[i - 1]
            gens.append(tuple(w))
    gen_set = set(gens)
    out = []
    for w in itertools.permutations(range(1, n + 1)):
        wi = inverse(w)
        if all(compose(compose(w, s), wi) in gen_set for s in gens):
            out.append(w)
    return out


def descent_class(n: int, free: frozenset) -> list:
    """Permutations of [n] that ascend at every position in `free`."""
    return [p for p in itertools.permutations(range(1, n + 1))
            if all(p[i - 1] < p[i] for i in free)]


if __name__ == "__main__":
    import doctest
    doctest.testmod()
