"""
Command-line interface.

    colored-diagrams table  --n 3 --offsets 0,1 --max-degree 6 --format csv
    colored-diagrams euler  --n 3 --w 1,1,0 --max-degree 6
    colored-diagrams verify --suite all --n-max 4 --max-degree 8
    colored-diagrams core   --partition 4,3,2 --n 3 --a 2

The coefficient of q^v in a `table` for offsets a_1..a_l is the number of
l-tuples of diagrams (the i-th a_i-colored) with colored weight v. With w_c
copies of each color c among the offsets this is the Euler characteristic of
the affine type A_{n-1} Nakajima quiver variety M(v, w); `euler` takes w
directly.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from . import abacus
from .identities import charge_monomial
from .partitions import ColoringContext, Partition, color_weight, z_tuple
from .series import MultiSeries
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _int_list(text: str) -> List[int]:
    text = "".join(text.split())
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError("expected comma-separated integers, got %r" % text) from None


def offsets_from_dimension_vector(w: Sequence[int]) -> List[int]:
    """(0,...,0, 1,...,1, ...) with w_c copies of c."""
    if any(x < 0 for x in w):
        raise UsageError("dimension vector entries must be non-negative")
    return [c for c, k in enumerate(w) for _ in range(k)]


def cmd_table(n: int, offsets: Sequence[int], K: int, fmt: str = "json") -> str:
    if n < 2:
        raise UsageError("--n must be at least 2")
    if K < 0:
        raise UsageError("--max-degree must be non-negative")
    if not offsets:
        raise UsageError("--offsets must be non-empty")
    for a in offsets:
        if not 0 <= a < n:
            raise UsageError("offset %d is not in 0..%d" % (a, n - 1))
    s = z_tuple(list(offsets), n, K)
    if fmt == "json":
        return s.to_json()
    if fmt == "csv":
        return s.to_csv()
    raise UsageError("unknown format %r" % fmt)


def _fmt_parts(ps) -> str:
    return "(" + ", ".join(str(p) if p.parts else "()" for p in ps) + ")"


def cmd_core(p: Partition, n: int, a: int) -> str:
    if n < 2:
        raise UsageError("--n must be at least 2")
    if not 0 <= a < n:
        raise UsageError("--a must be in 0..%d" % (n - 1))
    ctx = ColoringContext(n, a)
    cq = abacus.core_quotient(p, n)
    j = abacus.core_charges(p, n, ctx.offset)
    wp = color_weight(p, ctx)
    wc = color_weight(cq.core, ctx)
    balance = all(x - y == cq.quotient_weight for x, y in zip(wp, wc))
    weight_ok = p.weight == cq.core.weight + n * cq.quotient_weight
    lines = [
        "partition        %s" % p,
        "weight           %d" % p.weight,
        "n, a             %d, %d" % (n, ctx.offset),
        "colored weight   %s" % (wp,),
        "%d-core           %s" % (n, cq.core),
        "core weight      %d" % cq.core.weight,
        "core colored wt  %s" % (wc,),
        "%d-quotient       %s" % (n, _fmt_parts(cq.quotient)),
        "quotient weight  %d" % cq.quotient_weight,
        "charges          %s" % (j,),
        "charge monomial  %s" % (charge_monomial(ctx, j),),
        "weight identity  %d = %d + %d*%d  %s" % (
            p.weight, cq.core.weight, n, cq.quotient_weight, "ok" if weight_ok else "FAILED"),
        "color balance    %s" % ("ok" if balance else "FAILED"),
    ]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colored-diagrams",
        description="Generating series of diagonally colored Young diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="coefficient table of Z for a tuple of offsets")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--offsets", required=True, help="comma-separated residues, e.g. 0,0,1")
    t.add_argument("--max-degree", type=int, required=True)
    t.add_argument("--format", choices=("json", "csv"), default="json")

    e = sub.add_parser("euler", help="Euler characteristics chi(M(v, w)) for a framing w")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--w", required=True, help="comma-separated framing vector w_0,...,w_{n-1}")
    e.add_argument("--max-degree", type=int, required=True)
    e.add_argument("--format", choices=("json", "csv"), default="json")
    e.add_argument("--v", help="print only chi(M(v, w)) for this dimension vector")

    v = sub.add_parser("verify", help="run identity verification suites")
    v.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    v.add_argument("--n-max", type=int, default=4)
    v.add_argument("--max-degree", type=int, default=8)

    c = sub.add_parser("core", help="n-core, n-quotient and charges of one partition")
    c.add_argument("--partition", required=True, help="e.g. 4,3,2; empty string for the empty partition")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--a", type=int, default=0)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            sys.stdout.write(cmd_table(args.n, _int_list(args.offsets), args.max_degree, args.format))
        elif args.command == "euler":
            w = _int_list(args.w)
            if len(w) != args.n:
                raise UsageError("--w needs exactly %d entries" % args.n)
            offsets = offsets_from_dimension_vector(w)
            if args.v is not None:
                vec = _int_list(args.v)
                if len(vec) != args.n or any(x < 0 for x in vec):
                    raise UsageError("--v needs %d non-negative entries" % args.n)
                if sum(vec) > args.max_degree:
                    raise UsageError("|v| exceeds --max-degree")
                s = MultiSeries.from_json(cmd_table(args.n, offsets, args.max_degree))
                sys.stdout.write("%d\n" % s[vec])
            else:
                sys.stdout.write(cmd_table(args.n, offsets, args.max_degree, args.format))
        elif args.command == "verify":
            if args.n_max < 2 or args.max_degree < 0:
                raise UsageError("--n-max must be >= 2 and --max-degree >= 0")
            results = run_suite(args.suite, args.n_max, args.max_degree)
            for r in results:
                print(r.line())
            failed = sum(not r.passed for r in results)
            by_suite = {}
            for r in results:
                ok, tot = by_suite.get(r.suite, (0, 0))
                by_suite[r.suite] = (ok + r.passed, tot + 1)
            for name, (ok, tot) in by_suite.items():
                print("suite %-14s %d/%d passed" % (name, ok, tot))
            return 1 if failed else 0
        elif args.command == "core":
            try:
                p = Partition.parse(args.partition)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            sys.stdout.write(cmd_core(p, args.n, args.a))
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
