"""
Abacus (beta-number) representation, n-cores, n-quotients and charges.

A partition with parts lambda_1 >= lambda_2 >= ... is encoded by N beads at
positions lambda_i - i + 1 (i = 1..N, missing parts read as 0). Ruler r holds
the positions congruent to r mod n; removing a border strip of length n is
the same as sliding one bead from position p to the free position p - n.

Conventions (fixed here, used everywhere):

* window size N is a multiple of n; the default is n * ceil((len(p) + n) / n).
  Nothing derived depends on the choice.
* quotient component r is read off ruler r (positions = r mod n), whatever
  the coloring offset.
* charges j_i = -(beads on ruler (-i mod n) minus beads on that ruler for the
  empty partition). Moving a bead from p to p + 1 adds one box of standard
  content p, which is what makes this the normalization under which the
  charge monomial of a core equals its colored weight, for every offset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .partitions import ColoringContext, Partition, color_weight, partitions_up_to
from .series import MultiSeries


@dataclass(frozen=True)
class BeadWindow:
    modulus: int
    size: int
    positions: FrozenSet[int]

    def ruler(self, r: int) -> List[int]:
        """Levels t (position = r + n t) of the beads on ruler r, ascending."""
        n = self.modulus
        return sorted((p - r) // n for p in self.positions if p % n == r)

    def floor(self, r: int) -> int:
        """Level of the lowest position of ruler r inside the window."""
        n = self.modulus
        lowest = -self.size + 1
        p = lowest + ((r - lowest) % n)
        return (p - r) // n

    def to_partition(self) -> Partition:
        return partition_from_beads(self.positions)


@dataclass(frozen=True)
class CoreQuotient:
    modulus: int
    core: Partition
    quotient: Tuple[Partition, ...]

    def __post_init__(self):
        if len(self.quotient) != self.modulus:
            raise ValueError("quotient must have %d components" % self.modulus)

    @property
    def quotient_weight(self) -> int:
        return sum(q.weight for q in self.quotient)


def default_window(p: Partition, n: int) -> int:
    return n * (-(-(len(p) + n) // n))


def beta_window(p: Partition, n: int, N: Optional[int] = None) -> BeadWindow:
    if n < 2:
        raise ValueError("n must be at least 2")
    if N is None:
        N = default_window(p, n)
    if N < len(p) or N % n or N <= 0:
        raise ValueError("window size %d must be a positive multiple of %d and at least %d"
                         % (N, n, len(p)))
    parts = list(p.parts) + [0] * (N - len(p))
    return BeadWindow(n, N, frozenset(parts[i] - i for i in range(N)))


def partition_from_beads(positions) -> Partition:
    ps = sorted(positions, reverse=True)
    return Partition(tuple(x for x in (p + i for i, p in enumerate(ps)) if x > 0))


def _window_from_levels(n: int, N: int, levels: Dict[int, List[int]]) -> BeadWindow:
    pos = frozenset(r + n * t for r, ts in levels.items() for t in ts)
    if len(pos) != N:
        raise ValueError("bead collision")
    return BeadWindow(n, N, pos)


def n_core(p: Partition, n: int) -> Partition:
    """Slide every bead as far up its ruler as it goes."""
    w = beta_window(p, n)
    levels = {}
    for r in range(n):
        b = w.floor(r)
        levels[r] = list(range(b, b + len(w.ruler(r))))
    return partition_from_beads(_window_from_levels(n, w.size, levels).positions)


def is_core(p: Partition, n: int) -> bool:
    return n_core(p, n) == p


def _ruler_partition(levels: List[int], floor: int) -> Partition:
    s = len(levels)
    desc = sorted(levels, reverse=True)
    return Partition(tuple(x for x in (t - floor - (s - 1 - k) for k, t in enumerate(desc)) if x))


def n_quotient(p: Partition, n: int) -> Tuple[Partition, ...]:
    w = beta_window(p, n)
    return tuple(_ruler_partition(w.ruler(r), w.floor(r)) for r in range(n))


def core_quotient(p: Partition, n: int) -> CoreQuotient:
    return CoreQuotient(n, n_core(p, n), n_quotient(p, n))


def _ruler_deviation(w: BeadWindow) -> List[int]:
    # empty partition: every ruler holds N / n beads
    base = w.size // w.modulus
    return [len(w.ruler(r)) - base for r in range(w.modulus)]


def from_core_quotient(cq: CoreQuotient) -> Partition:
    n = cq.modulus
    if not is_core(cq.core, n):
        raise ValueError("%s is not a %d-core" % (cq.core, n))
    dev = _ruler_deviation(beta_window(cq.core, n))
    # enough beads for the core and for the longest quotient component on every ruler
    M = max([-(-len(cq.core) // n) + 1]
            + [len(q) - d + 1 for q, d in zip(cq.quotient, dev)])
    w = beta_window(cq.core, n, n * M)
    levels = {}
    for r in range(n):
        b = w.floor(r)
        s = len(w.ruler(r))
        q = list(cq.quotient[r].parts) + [0] * (s - len(cq.quotient[r]))
        levels[r] = [b + (s - 1 - k) + q[k] for k in range(s)]
    return partition_from_beads(_window_from_levels(n, w.size, levels).positions)


def core_charges(p: Partition, n: int, a: int = 0) -> Tuple[int, ...]:
    """
    Charge vector (j_0, ..., j_{n-1}) of the n-core of p; sums to zero.

    The offset a is accepted for symmetry with the coloring API; the charges
    do not depend on it, only the monomial built from them does.
    """
    dev = _ruler_deviation(beta_window(p, n))
    return tuple(-dev[(-i) % n] for i in range(n))


def core_series_brute(ctx: ColoringContext, K: int) -> MultiSeries:
    """Sum of colored-weight monomials over n-cores with at most K boxes."""
    terms = {}
    for p in partitions_up_to(K):
        if is_core(p, ctx.modulus):
            w = color_weight(p, ctx)
            terms[w] = terms.get(w, 0) + 1
    return MultiSeries(ctx.modulus, K, terms)

