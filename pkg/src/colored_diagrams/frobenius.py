"""
Frobenius coordinates of diagrams, their colored refinement, and Z_a as the
z^0 coefficient of a product of two z-Laurent generating functions.

Splitting a diagram along its main diagonal gives, for each diagonal box i,
a top piece (row i from the diagonal box rightwards) and a bottom piece
(column i strictly above the diagonal box). Under the a-coloring the top
piece of length L has colors a, a+1, ..., a+L-1 and the bottom piece of
length L has colors a-1, ..., a-L, so each piece is determined by its
length. Lengths strictly decrease along the diagonal, hence the generating
functions are products of distinct binomial factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .partitions import ColoringContext, Partition
from .series import (MultiSeries, ZLaurentSeries, specialize_uniform,
                     specialize_uniform_series, z_constant_term, zl_mul)


@dataclass(frozen=True)
class FrobeniusCoordinates:
    """Arm lengths `top` and leg lengths `bottom` along the main diagonal."""

    top: Tuple[int, ...]
    bottom: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError("rows must have equal length")
        for row in (self.top, self.bottom):
            if any(x < 0 for x in row):
                raise ValueError("entries must be non-negative: %r" % (row,))
            if any(row[i] <= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError("rows must be strictly decreasing: %r" % (row,))

    @property
    def d(self) -> int:
        return len(self.top)

    @property
    def weight(self) -> int:
        return self.d + sum(self.top) + sum(self.bottom)


def to_frobenius(p: Partition) -> FrobeniusCoordinates:
    d = p.diagonal_length()
    top = tuple(p.row_length(i) - i for i in range(1, d + 1))
    bottom = tuple(p.parts[i - 1] - i for i in range(1, d + 1))
    return FrobeniusCoordinates(top, bottom)


def from_frobenius(fc: FrobeniusCoordinates) -> Partition:
    d = fc.d
    if d == 0:
        return Partition(())
    rows = [f + i for i, f in enumerate(fc.top, start=1)]
    cols = [g + j for j, g in enumerate(fc.bottom, start=1)]
    # columns right of the diagonal only meet the first d rows
    for j in range(d + 1, rows[0] + 1):
        cols.append(sum(1 for r in rows if r >= j))
    return Partition(tuple(cols))


@dataclass(frozen=True)
class ColoredFPartition:
    """
    Two rows of color-count vectors. top[i][c] counts color-c boxes of the
    (i+1)-th top piece, bottom[i][c] those of the (i+1)-th bottom piece.
    """

    modulus: int
    top: Tuple[Tuple[int, ...], ...]
    bottom: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(tuple(v) for v in self.top))
        object.__setattr__(self, "bottom", tuple(tuple(v) for v in self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError("rows must have equal length")
        for v in self.top + self.bottom:
            if len(v) != self.modulus or any(x < 0 for x in v):
                raise ValueError("bad color vector %r" % (v,))

    @property
    def d(self) -> int:
        return len(self.top)

    def column_weight(self) -> Tuple[int, ...]:
        k = [0] * self.modulus
        for v in self.top + self.bottom:
            for c, x in enumerate(v):
                k[c] += x
        return tuple(k)

    @property
    def total_weight(self) -> int:
        return sum(self.column_weight())


def to_colored_fpartition(p: Partition, ctx: ColoringContext) -> ColoredFPartition:
    n = ctx.modulus
    top, bottom = [], []
    for i in range(1, p.diagonal_length() + 1):
        f = [0] * n
        for j in range(i, p.row_length(i) + 1):
            f[ctx.residue(i, j)] += 1
        g = [0] * n
        for r in range(i + 1, p.parts[i - 1] + 1):
            g[ctx.residue(r, i)] += 1
        top.append(tuple(f))
        bottom.append(tuple(g))
    return ColoredFPartition(n, tuple(top), tuple(bottom))


def _run(ctx: ColoringContext, start: int, length: int, step: int, k: int) -> Tuple[int, ...]:
    # exponent vector of q^k times the colors start, start+step, ... (length of them)
    e = [k] * ctx.modulus
    for t in range(length):
        e[ctx.color(start + step * t)] += 1
    return tuple(e)


def h1_factors(ctx: ColoringContext, K: int) -> List[Tuple[int, ...]]:
    """
    Monomials q_a q_{a+1} ... q_{a+i} q^k of the top-row factors with degree
    <= K, ordered by (k, i).
    """
    n = ctx.modulus
    out = []
    k = 0
    while n * k + 1 <= K:
        for i in range(n):
            if n * k + i + 1 <= K:
                out.append(_run(ctx, ctx.offset, i + 1, 1, k))
        k += 1
    return out


def h2_factors(ctx: ColoringContext, K: int) -> List[Tuple[int, ...]]:
    """
    Monomials q_{a+i+1} ... q_{a+n-1} q^k of the bottom-row factors with degree
    <= K, ordered by (k, i). Contains the empty monomial (i = n-1, k = 0) once.
    """
    n = ctx.modulus
    out = []
    k = 0
    while n * k <= K:
        for i in range(n):
            length = n - 1 - i
            if n * k + length <= K:
                out.append(_run(ctx, ctx.offset - 1, length, -1, k))
        k += 1
    return out


def _laurent_product(ctx, K, W, monomials, z_power) -> ZLaurentSeries:
    n = ctx.modulus
    result = ZLaurentSeries.one(n, K, W)
    for e in monomials:
        result = zl_mul(result, ZLaurentSeries.binomial(n, K, W, z_power, e))
    return result


def h1_series(ctx: ColoringContext, K: int, W: Optional[int] = None) -> ZLaurentSeries:
    """prod_{k>=0} prod_{i<n} (1 + z q_a...q_{a+i} q^k), truncated at degree K."""
    if K < 0:
        raise ValueError("K must be non-negative")
    return _laurent_product(ctx, K, K + 1 if W is None else W, h1_factors(ctx, K), 1)


def h2_series(ctx: ColoringContext, K: int, W: Optional[int] = None) -> ZLaurentSeries:
    """prod_{k>=0} prod_{i<n} (1 + z^-1 q_{a+i+1}...q_{a+n-1} q^k), truncated at degree K."""
    if K < 0:
        raise ValueError("K must be non-negative")
    return _laurent_product(ctx, K, K + 1 if W is None else W, h2_factors(ctx, K), -1)


def z_via_constant_term(ctx: ColoringContext, K: int) -> MultiSeries:
    """Z_a up to degree K as [z^0] of h1_series * h2_series."""
    W = K + 1
    return z_constant_term(zl_mul(h1_series(ctx, K, W), h2_series(ctx, K, W)))


def uncolored_constant_term(K: int, n: int = 2) -> List[int]:
    """
    Coefficients of sum_k P(k) t^k from the same pipeline with every color
    variable set to t before taking [z^0]. Any modulus gives the same answer.
    """
    ctx = ColoringContext(n, 0)
    W = K + 1
    h1 = h1_series(ctx, K, W).map(specialize_uniform_series)
    h2 = h2_series(ctx, K, W).map(specialize_uniform_series)
    return specialize_uniform(z_constant_term(zl_mul(h1, h2)))
