"""Cross-checks between the independent routes to Z_a, grouped into suites."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Dict, List

from . import abacus, frobenius, identities
from .partitions import (ColoringContext, color_weight, partitions_up_to, z_brute)
from .series import specialize_uniform


@dataclass
class CheckResult:
    suite: str
    identity: str
    params: str
    passed: bool
    elapsed: float

    def line(self) -> str:
        return "%s  %-14s %-38s %-22s %.3fs" % (
            "PASS" if self.passed else "FAIL", self.suite, self.identity, self.params, self.elapsed)


def _timed(suite, identity, params, fn) -> CheckResult:
    t0 = time.perf_counter()
    ok = bool(fn())
    return CheckResult(suite, identity, params, ok, time.perf_counter() - t0)


def suite_theorem1(n_max: int, K: int) -> List[CheckResult]:
    out = []
    for n in range(2, n_max + 1):
        for a in range(n):
            ctx = ColoringContext(n, a)

            def check(ctx=ctx):
                zb = z_brute(ctx, K)
                return zb == frobenius.z_via_constant_term(ctx, K) == identities.theta_closed_form(ctx, K)
            out.append(_timed("theorem1", "brute = constant term = lattice sum",
                              "n=%d a=%d K=%d" % (n, a, K), check))
    return out


def suite_products(n_max: int, K: int) -> List[CheckResult]:
    return [
        _timed("products", "n=2 infinite product", "K=%d" % K,
               lambda: identities.product_n2(K) == z_brute(ColoringContext(2, 0), K)),
        _timed("products", "n=3 infinite product", "K=%d" % K,
               lambda: identities.product_n3(K) == z_brute(ColoringContext(3, 0), K)),
    ]


def suite_jacobi(n_max: int, K: int) -> List[CheckResult]:
    K = max(K, 1)

    def z_one():
        lhs, rhs = identities.jacobi_second_at_z_one(K)
        return lhs == rhs
    return [
        _timed("jacobi", "both triple product forms", "K=%d" % K,
               lambda: identities.jacobi_triple_product_check(K)),
        _timed("jacobi", "second form at z=1", "K=%d" % K, z_one),
    ]


def suite_core_quotient(n_max: int, K: int) -> List[CheckResult]:
    out = []
    for n in range(2, n_max + 1):
        def bijection(n=n):
            for p in partitions_up_to(K):
                cq = abacus.core_quotient(p, n)
                if abacus.from_core_quotient(cq) != p:
                    return False
                if p.weight != cq.core.weight + n * cq.quotient_weight:
                    return False
                for a in range(n):
                    ctx = ColoringContext(n, a)
                    wp, wc = color_weight(p, ctx), color_weight(cq.core, ctx)
                    if any(x - y != cq.quotient_weight for x, y in zip(wp, wc)):
                        return False
            return True

        def cores(n=n):
            for a in range(n):
                ctx = ColoringContext(n, a)
                cs = identities.core_sum(ctx, K)
                if abacus.core_series_brute(ctx, K) != cs:
                    return False
                if z_brute(ctx, K) != identities.euler_factor(n, K, n) * cs:
                    return False
            return True
        out.append(_timed("core-quotient", "round trip, weight, color balance",
                          "n=%d K=%d" % (n, K), bijection))
        out.append(_timed("core-quotient", "core series = charge sum",
                          "n=%d K=%d" % (n, K), cores))
    return out


def suite_frobenius(n_max: int, K: int) -> List[CheckResult]:
    def classical():
        for p in partitions_up_to(K):
            fc = frobenius.to_frobenius(p)
            if frobenius.from_frobenius(fc) != p or fc.weight != p.weight:
                return False
        return True

    def colored(n):
        for a in range(n):
            ctx = ColoringContext(n, a)
            seen = set()
            for p in partitions_up_to(K):
                cf = frobenius.to_colored_fpartition(p, ctx)
                if cf in seen or cf.column_weight() != color_weight(p, ctx):
                    return False
                seen.add(cf)
        return True

    out = [_timed("frobenius", "Frobenius coordinates round trip", "K=%d" % K, classical),
           _timed("frobenius", "uncolored constant term = P(k)", "K=%d" % K,
                  lambda: frobenius.uncolored_constant_term(K)
                  == specialize_uniform(z_brute(ColoringContext(2, 0), K)))]
    for n in range(2, n_max + 1):
        out.append(_timed("frobenius", "colored F-partition injective", "n=%d K=%d" % (n, K),
                          lambda n=n: colored(n)))
    return out


SUITES: Dict[str, Callable[[int, int], List[CheckResult]]] = {
    "theorem1": suite_theorem1,
    "products": suite_products,
    "jacobi": suite_jacobi,
    "core-quotient": suite_core_quotient,
    "frobenius": suite_frobenius,
}


def run_suite(name: str, n_max: int, K: int) -> List[CheckResult]:
    if name == "all":
        return [r for fn in SUITES.values() for r in fn(n_max, K)]
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](n_max, K)
