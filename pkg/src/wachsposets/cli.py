"""
Command line front end: enumeration, Hasse diagram export, theorem and
conjecture checks, and JSON reports.

Exit codes: 0 all requested checks pass, 1 some check failed,
2 usage error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .bruhat import bruhat_leq_a, bruhat_leq_b
from .perms import SizeCapError, format_perm, format_window, inverse
from .posets import build_poset, to_dot
from .wachs import enumerate_wachs
from .weak import tl_set

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _guard_cap(kind: str, n: int, unsafe: bool, cap: int) -> None:
    if n > cap and not unsafe:
        raise SizeCapError(
            f"n={n} exceeds the default cap {cap} for kind {kind}; "
            f"pass --unsafe-large to override")


def _element_key(kind: str):
    return format_perm if kind == "A" else format_window


def cmd_enumerate(args) -> int:
    _guard_cap(args.kind, args.n, args.unsafe_large,
               checks.DEFAULT_CAP[args.kind])
    key = _element_key(args.kind)
    for v in enumerate_wachs(args.kind, args.n):
        print(key(v))
    return 0


def cmd_hasse(args) -> int:
    _guard_cap(args.kind, args.n, args.unsafe_large,
               checks.DEFAULT_CAP[args.kind])
    elems = enumerate_wachs(args.kind, args.n)
    if args.order == "bruhat":
        leq = bruhat_leq_a if args.kind == "A" else bruhat_leq_b
    else:
        side = "R" if args.order == "weakR" else "L"
        tls = {v: tl_set(inverse(v) if side == "L" else v, args.kind)
               for v in elems}
        leq = lambda x, y: tls[x] <= tls[y]  # noqa: E731
    poset = build_poset(elems, leq, key=_element_key(args.kind))
    dot = to_dot(poset)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return 0


def _print_results(results) -> int:
    worst = 0
    for r in results:
        extra = f" ({r.witness})" if r.witness else ""
        print(f"{r.id} {r.kind} n={r.n} {r.status.upper()}{extra} "
              f"[{r.millis} ms]")
        if not r.ok:
            worst = EXIT_FAIL
    return worst


def cmd_check(args) -> int:
    if args.category == "theorem":
        if args.id not in checks.THEOREM_IDS:
            print(f"unknown theorem id {args.id!r}; choose from: "
                  + ", ".join(checks.THEOREM_IDS), file=sys.stderr)
            return EXIT_USAGE
        cells = checks.theorem_cells(args.id, args.max_n)
        default = (checks.DEFAULT_CAP["A"] if not args.id.endswith("-B")
                   else checks.DEFAULT_CAP["B"])
    else:
        if args.id not in checks.CONJECTURE_IDS:
            print(f"unknown conjecture id {args.id!r}; choose from: "
                  + ", ".join(checks.CONJECTURE_IDS), file=sys.stderr)
            return EXIT_USAGE
        cells = checks.conjecture_cells(args.id, args.max_n)
        default = (checks.LATTICE_DEFAULT_MAX_N if args.id == "latticeAodd"
                   else checks.DEFAULT_CAP["B" if args.id.endswith("B") else "A"])
    if args.max_n is not None and args.max_n > default and not args.unsafe_large:
        print(f"--max-n {args.max_n} exceeds the default cap {default}; "
              f"pass --unsafe-large to override", file=sys.stderr)
        return EXIT_CAP
    return _print_results(checks.run_cells(cells))


def cmd_report(args) -> int:
    rep = checks.report(max_n_a=args.max_n_a, max_n_b=args.max_n_b)
    with open(args.json, "w") as fh:
        json.dump(rep, fh, indent=2, sort_keys=True)
        fh.write("\n")
    failures = [c for c in rep["checks"] if c["status"] != "pass"]
    print(f"wrote {args.json}: {len(rep['checks'])} checks, "
          f"{len(failures)} failing")
    return EXIT_FAIL if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wachs",
        description="Enumerate Wachs and signed Wachs permutations and "
                    "verify the structure of their Bruhat and weak orders.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all Wachs elements of rank n")
    p.add_argument("kind", choices=["A", "B"])
    p.add_argument("n", type=int)
    p.add_argument("--unsafe-large", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("hasse", help="export a Hasse diagram in DOT form")
    p.add_argument("kind", choices=["A", "B"])
    p.add_argument("n", type=int)
    p.add_argument("--order", choices=["bruhat", "weakR", "weakL"],
                   default="bruhat")
    p.add_argument("--dot", metavar="PATH", default=None)
    p.add_argument("--unsafe-large", action="store_true")
    p.set_defaults(fn=cmd_hasse)

    p = sub.add_parser("check", help="run a named theorem or conjecture check")
    p.add_argument("category", choices=["theorem", "conjecture"])
    p.add_argument("id")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--unsafe-large", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("report", help="run everything, write a JSON report")
    p.add_argument("--json", metavar="PATH", required=True)
    p.add_argument("--max-n-a", type=int, default=None)
    p.add_argument("--max-n-b", type=int, default=None)
    p.set_defaults(fn=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
