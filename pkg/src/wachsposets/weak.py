"""
Right and left weak orders, left-inversion sets, and the product-structure
isomorphisms of the weak order on (signed) Wachs permutations.

Reflections are keyed canonically: pairs (a, b) of values with a < b for
S_n; for B_n pairs (a, b) with 1 <= a < |b| standing for (a,b)(-a,-b),
plus (a, -a) for the sign changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .perms import full_position, inverse
from .posets import FinitePoset, LatticeReport, build_poset, lattice_checks
from .wachs import encode_a, encode_b, enumerate_wachs

__all__ = ["tl_set_a", "tl_set_b", "tl_set", "weak_leq",
           "WeakIsoResult", "weak_product_iso"]


def tl_set_a(w: Sequence[int]) -> frozenset:
    """T_L(w) for a permutation: pairs (a,b), a<b, with b left of a.

    >>> sorted(tl_set_a((2, 1)))
    [(1, 2)]
    """
    pos = {v: k for k, v in enumerate(w, 1)}
    n = len(w)
    return frozenset((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
                     if pos[b] < pos[a])


def tl_set_b(w: Sequence[int]) -> frozenset:
    """T_L(w) for a signed permutation, by the positional rules:
    (a,b)(-a,-b) is a left inversion iff b > 0 sits left of a, or b < 0
    sits right of a, in the complete notation; (a,-a) iff a sits left
    of -a.

    >>> sorted(tl_set_b((-1, 2)))
    [(1, -1)]
    """
    n = len(w)
    pos = {}
    for k, v in enumerate(w, 1):
        pos[v] = k
        pos[-v] = -k
    out = set()
    for a in range(1, n + 1):
        if pos[a] < pos[-a]:
            out.add((a, -a))
        for bb in range(a + 1, n + 1):
            for b in (bb, -bb):
                if (b > 0 and pos[b] < pos[a]) or (b < 0 and pos[b] > pos[a]):
                    out.add((a, b))
    return frozenset(out)


def tl_set(w: Sequence[int], kind: str) -> frozenset:
    if kind == "A":
        return tl_set_a(w)
    if kind == "B":
        return tl_set_b(w)
    raise ValueError(f"unknown kind {kind!r}")


def weak_leq(u: Sequence[int], v: Sequence[int], side: str, kind: str) -> bool:
    """Weak order comparison: right order is T_L containment, the left
    order compares inverses in the right order."""
    if len(u) != len(v):
        raise ValueError("rank mismatch")
    if side == "L":
        return weak_leq(inverse(u), inverse(v), "R", kind)
    if side != "R":
        raise ValueError(f"unknown side {side!r}")
    return tl_set(u, kind) <= tl_set(v, kind)


# ------------------------------------------------------- product structure


def _bar_a(tau, i: int):
    """Insert the value m+1 at slot i."""
    m = len(tau)
    return tau[:i - 1] + (m + 1,) + tau[i - 1:]


def _bar_b(tau, i: int):
    """Insert the value +-(m+1) at slot |i|, with the sign of i."""
    m = len(tau)
    v = (m + 1) if i > 0 else -(m + 1)
    k = abs(i)
    return tau[:k - 1] + (v,) + tau[k - 1:]


def _factor_map(kind: str, n: int, v, convention: str):
    """Image of a Wachs element in G_ceil(n/2) x P([floor(n/2)])."""
    if kind == "A":
        code = encode_a(v)
        if n % 2 == 0:
            tau, t = code
        else:
            i, tau, t = code
            tau = _bar_a(tau, i)
            # t refers to slots of the even part, mapped below through tau
            tau_small = code[1]
            return tau, frozenset(tau_small[k - 1] for k in t)
        return tau, frozenset(tau[k - 1] for k in t)
    code = encode_b(v)
    if n % 2 == 0:
        tau, t = code
        small = tau
    else:
        i, small, t = code
        tau = _bar_b(small, i)
    if convention == "abs":
        return tau, frozenset(abs(small[k - 1]) for k in t)
    return tau, frozenset(small[k - 1] for k in t)


@dataclass(frozen=True)
class WeakIsoResult:
    holds: bool
    convention: Optional[str]       # subset convention that worked (B only)
    witness: Optional[tuple]        # first mismatching pair, if any
    lattice: Optional[LatticeReport]
    poset: Optional[FinitePoset] = None


def weak_product_iso(kind: str, n: int) -> WeakIsoResult:
    """Check that (W(G_n), <=_R) is isomorphic, via the explicit code map,
    to (G_ceil(n/2), <=_R) x P([floor(n/2)]), and report lattice structure
    of the Wachs side."""
    elems = enumerate_wachs(kind, n)
    tls = [tl_set(v, kind) for v in elems]

    conventions = ("abs",) if kind == "A" else ("abs", "signed")
    holds = False
    used = None
    witness = None
    for convention in conventions:
        images = [_factor_map(kind, n, v, convention) for v in elems]
        if len(set(images)) != len(images):
            witness = ("not injective", convention)
            continue
        tls_img = [tl_set(g, kind) for g, _ in images]
        ok = True
        for a in range(len(elems)):
            for b in range(len(elems)):
                lhs = tls[a] <= tls[b]
                rhs = (tls_img[a] <= tls_img[b]
                       and images[a][1] <= images[b][1])
                if lhs != rhs:
                    ok = False
                    witness = (convention, elems[a], elems[b])
                    break
            if not ok:
                break
        if ok:
            holds, used, witness = True, convention, None
            break

    by_elem = dict(zip(elems, tls))
    poset = build_poset(
        elems, lambda x, y: by_elem[x] <= by_elem[y],
        key=lambda v: ",".join(str(x) for x in v))
    report = lattice_checks(poset)
    return WeakIsoResult(holds, used, witness, report, poset)


if __name__ == "__main__":
    import doctest
    doctest.testmod()
