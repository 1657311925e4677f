"""
Named verification checks over the (signed) Wachs permutation posets.

Each check id covers a family of (kind, n) cells; a cell is pure and
returns a CheckResult.  Cells can be fanned out to a process pool sized
by the WACHS_THREADS environment variable.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from . import wachs
from .bruhat import bruhat_leq_a, bruhat_leq_b
from .perms import (compose, format_perm, format_window, inverse,
                    longest_element)
from .posets import (FinitePoset, build_poset, characteristic_polynomial,
                     dual_check, grade, lattice_checks, mobius_table)
from .qpoly import IntPolynomial
from .weak import tl_set, weak_product_iso

__all__ = ["CheckResult", "THEOREM_IDS", "CONJECTURE_IDS", "DEFAULT_CAP",
           "LATTICE_DEFAULT_MAX_N", "theorem_cells", "conjecture_cells",
           "run_cell", "run_cells", "report"]

DEFAULT_CAP = {"A": 8, "B": 6}
LATTICE_DEFAULT_MAX_N = 9  # (W(S_n), <=_L) lattice sweep: odd n, m <= 4


@dataclass(frozen=True)
class CheckResult:
    id: str
    kind: str
    n: int
    status: str                 # "pass" | "fail"
    witness: Optional[str]
    millis: int

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@lru_cache(maxsize=None)
def wachs_elements(kind: str, n: int) -> tuple:
    return tuple(wachs.enumerate_wachs(kind, n))


def _key(kind: str):
    return format_perm if kind == "A" else format_window


def _leq(kind: str):
    return bruhat_leq_a if kind == "A" else bruhat_leq_b


@lru_cache(maxsize=None)
def bruhat_poset(kind: str, n: int) -> FinitePoset:
    """Induced Bruhat order on the Wachs elements, via the oracle."""
    return build_poset(wachs_elements(kind, n), _leq(kind), key=_key(kind))


@lru_cache(maxsize=None)
def weak_poset(kind: str, n: int, side: str) -> FinitePoset:
    elems = wachs_elements(kind, n)
    if side == "L":
        tls = {v: tl_set(inverse(v), kind) for v in elems}
    else:
        tls = {v: tl_set(v, kind) for v in elems}
    return build_poset(elems, lambda x, y: tls[x] <= tls[y], key=_key(kind))


# ------------------------------------------------------------ check bodies


def _check_graded(kind, n):
    p = bruhat_poset(kind, n)
    g = grade(p)
    if not g.graded:
        return False, f"cover gap at {g.witness}"
    forms = wachs.closed_polys(kind, n)
    if g.rank != forms.rank:
        return False, f"rank {g.rank} != {forms.rank}"
    lw = wachs.rank_lw_a if kind == "A" else wachs.rank_lw_b
    for i, v in enumerate(p.items):
        if g.ranks[i] != lw(v):
            return False, f"rank function differs from l_W at {p.elements[i]}"
    return True, None


def _check_order(kind, n):
    p = bruhat_poset(kind, n)
    leq = wachs.wachs_leq_a if kind == "A" else wachs.wachs_leq_b
    for i, u in enumerate(p.items):
        up = p.up[i]
        for j, v in enumerate(p.items):
            if leq(u, v) != bool(up >> j & 1):
                return False, f"{p.elements[i]} vs {p.elements[j]}"
    return True, None


def _check_covers(kind, n):
    p = bruhat_poset(kind, n)
    cov = wachs.wachs_covers_a if kind == "A" else wachs.wachs_covers_b
    below = {j: set() for j in range(len(p))}
    for i, j in p.covers:
        below[j].add(p.items[i])
    for j, v in enumerate(p.items):
        if cov(v) != below[j]:
            return False, f"covers of {p.elements[j]}"
    return True, None


def _check_mobius(kind, n):
    p = bruhat_poset(kind, n)
    bot = p.minimum()
    enc = wachs.encode_a if kind == "A" else wachs.encode_b
    closed = wachs.mobius_closed_a if kind == "A" else wachs.mobius_closed_b
    for j, v in enumerate(p.items):
        if p.mobius(bot, j) != closed(enc(v), n):
            return False, f"mu(e, {p.elements[j]})"
    return True, None


def _check_charpoly(kind, n):
    p = bruhat_poset(kind, n)
    got = characteristic_polynomial(p)
    want = wachs.closed_polys(kind, n).char
    return got == want, None if got == want else f"{got} != {want}"


def _check_rankpoly(kind, n):
    lw = wachs.rank_lw_a if kind == "A" else wachs.rank_lw_b
    counts: dict = {}
    for v in wachs_elements(kind, n):
        r = lw(v)
        counts[r] = counts.get(r, 0) + 1
    coeffs = [0] * (max(counts) + 1)
    for r, c in counts.items():
        coeffs[r] = c
    got = IntPolynomial(coeffs)
    want = wachs.closed_polys(kind, n).rank_gen
    if got != want:
        return False, f"{got} != {want}"
    if not got.is_reciprocal():
        return False, "rank polynomial is not reciprocal"
    return True, None


def _check_weakiso(kind, n):
    res = weak_product_iso(kind, n)
    if not res.holds:
        return False, f"map mismatch: {res.witness}"
    if not res.lattice.is_lattice or not res.lattice.is_complemented:
        return False, f"lattice failure: {res.lattice.witness}"
    return True, None


def _check_selfdual(kind, n):
    p = bruhat_poset("A", n)
    w0 = longest_element("A", n)
    mapping = {p.elements[i]: format_perm(compose(v, w0))
               for i, v in enumerate(p.items)}
    if not dual_check(p, mapping):
        return False, "v -> v w_0 is not an antiautomorphism"
    top = wachs.rank_lw_a(w0)
    for v in p.items:
        if wachs.rank_lw_a(compose(v, w0)) != top - wachs.rank_lw_a(v):
            return False, f"rank antisymmetry fails at {format_perm(v)}"
    return True, None


def _check_statdist(kind, n):
    ok = wachs.stats_distribution_check(n)
    return ok, None if ok else "distribution mismatch"


def _check_gi(kind, n):
    got = set(wachs.stabilizer_gi(n))
    want = set(wachs_elements("A", n))
    return got == want, None if got == want else "stabilizer differs"


def _check_nongraded_remark(kind, n):
    lo, hi = (1, 2, 4, 3, 6, 5), (5, 6, 1, 2, 3, 4)
    elems = [v for v in wachs_elements("A", 6)
             if v[0] < v[1] and bruhat_leq_a(lo, v) and bruhat_leq_a(v, hi)]
    p = build_poset(elems, bruhat_leq_a, key=format_perm)
    g = grade(p)
    if g.graded:
        return False, "interval is graded"
    return True, f"cover gap at {g.witness}"


def _check_nongraded_weakl(kind, n):
    p = weak_poset(kind, n, "L")
    g = grade(p)
    if g.graded:
        return False, "poset is graded"
    return True, f"cover gap at {g.witness}"


def _check_conj_mobius(kind, n):
    p = bruhat_poset(kind, n)
    for (i, j), value in mobius_table(p).items():
        if value not in (-1, 0, 1):
            return False, f"mu({p.elements[i]},{p.elements[j]}) = {value}"
    return True, None


def _check_conj_lattice(kind, n):
    p = weak_poset("A", n, "L")
    rep = lattice_checks(p)
    if not rep.is_lattice:
        return False, f"no {rep.witness[0]} for {rep.witness[1]}, {rep.witness[2]}"
    return True, None


@dataclass(frozen=True)
class _Spec:
    kind: str                       # "A", "B" or "AB"
    fn: Callable
    ns: Callable                    # max_n -> list of n for one kind


def _all_n(lo=1):
    return lambda max_n: list(range(lo, max_n + 1))


def _even_n(max_n):
    return [n for n in range(2, max_n + 1) if n % 2 == 0]


THEOREMS = {
    "graded-A": _Spec("A", _check_graded, _all_n()),
    "graded-B": _Spec("B", _check_graded, _all_n()),
    "order-A": _Spec("A", _check_order, _all_n()),
    "order-B": _Spec("B", _check_order, _all_n()),
    "covers-A": _Spec("A", _check_covers, _all_n()),
    "covers-B": _Spec("B", _check_covers, _all_n()),
    "mobius-A": _Spec("A", _check_mobius, _all_n()),
    # the closed characteristic/Moebius forms assume rank >= 2 in type B
    "mobius-B": _Spec("B", _check_mobius, _all_n(lo=2)),
    "charpoly-A": _Spec("A", _check_charpoly, _all_n()),
    "charpoly-B": _Spec("B", _check_charpoly, _all_n(lo=2)),
    "rankpoly-A": _Spec("A", _check_rankpoly, _all_n()),
    "rankpoly-B": _Spec("B", _check_rankpoly, _all_n()),
    "weakiso-A": _Spec("A", _check_weakiso, _all_n()),
    "weakiso-B": _Spec("B", _check_weakiso, _all_n()),
    "selfdual-A": _Spec("A", _check_selfdual, _all_n()),
    "statdist-A": _Spec("A", _check_statdist, _even_n),
    "gi-stabilizer": _Spec("A", _check_gi, _even_n),
    "nongraded-remark": _Spec("A", _check_nongraded_remark, lambda max_n: [6]),
}

CONJECTURES = {
    "mobiusA": _Spec("A", _check_conj_mobius, _all_n()),
    "mobiusB": _Spec("B", _check_conj_mobius, _all_n()),
    "latticeAodd": _Spec("A", _check_conj_lattice,
                         lambda max_n: [n for n in range(1, max_n + 1)
                                        if n % 2 == 1]),
}

THEOREM_IDS = list(THEOREMS) + ["nongraded-weakL"]
CONJECTURE_IDS = list(CONJECTURES)


def theorem_cells(check_id: str, max_n: Optional[int] = None) -> list:
    """The (id, kind, n) cells a theorem check expands to."""
    if check_id == "nongraded-weakL":
        return [(check_id, "A", 5), (check_id, "B", 3)]
    spec = THEOREMS[check_id]
    cap = max_n if max_n is not None else DEFAULT_CAP[spec.kind]
    return [(check_id, spec.kind, n) for n in spec.ns(cap)]


def conjecture_cells(check_id: str, max_n: Optional[int] = None) -> list:
    spec = CONJECTURES[check_id]
    if max_n is None:
        max_n = (LATTICE_DEFAULT_MAX_N if check_id == "latticeAodd"
                 else DEFAULT_CAP[spec.kind])
    return [(check_id, spec.kind, n) for n in spec.ns(max_n)]


def run_cell(cell: tuple) -> CheckResult:
    check_id, kind, n = cell
    if check_id == "nongraded-weakL":
        fn = _check_nongraded_weakl
    else:
        fn = (THEOREMS.get(check_id) or CONJECTURES[check_id]).fn
    start = time.perf_counter()
    ok, witness = fn(kind, n)
    millis = int((time.perf_counter() - start) * 1000)
    return CheckResult(check_id, kind, n, "pass" if ok else "fail",
                       witness, millis)


def run_cells(cells: list, threads: Optional[int] = None) -> list:
    if threads is None:
        threads = int(os.environ.get("WACHS_THREADS", "1"))
    if threads > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_cell, cells))
    else:
        results = [run_cell(c) for c in cells]
    return results


def report(max_n_a: Optional[int] = None, max_n_b: Optional[int] = None,
           threads: Optional[int] = None) -> dict:
    """Run every check at its default (or overridden) cap."""
    cells = []
    for cid in THEOREM_IDS:
        if cid == "nongraded-weakL":
            cells.extend(theorem_cells(cid))
            continue
        cap = max_n_a if THEOREMS[cid].kind == "A" else max_n_b
        cells.extend(theorem_cells(cid, cap))
    for cid in CONJECTURE_IDS:
        if cid == "latticeAodd":
            cells.extend(conjecture_cells(cid, max_n_a))
        else:
            cap = max_n_a if CONJECTURES[cid].kind == "A" else max_n_b
            cells.extend(conjecture_cells(cid, cap))
    cells.sort()
    results = run_cells(cells, threads)
    return {
        "version": 1,
        "checks": [
            {"id": r.id, "kind": r.kind, "n": r.n, "status": r.status,
             "witness": r.witness, "millis": r.millis}
            for r in sorted(results, key=lambda r: (r.id, r.kind, r.n))
        ],
    }
