"""
Partitions as Young diagrams, diagonal colorings and colored weights.

A partition lists the column heights of its diagram: parts[j-1] boxes sit in
column j, so box (i, j) (row i, column j, both from 1) exists iff
parts[j-1] >= i. Under the diagonal a-coloring with modulus n, box (i, j)
gets the residue a - i + j mod n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from .series import MultiSeries, product

WeightVector = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive: %r" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be non-increasing: %r" % (parts,))

    @classmethod
    def parse(cls, literal: str) -> "Partition":
        """Parse '4,3,2' (whitespace ignored); the empty string is the empty partition."""
        text = "".join(literal.split())
        if not text:
            return cls(())
        try:
            parts = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise ValueError("malformed partition literal %r" % literal) from None
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def boxes(self) -> Iterator[Tuple[int, int]]:
        """All boxes (row, column), 1-based."""
        for j, h in enumerate(self.parts, start=1):
            for i in range(1, h + 1):
                yield i, j

    def row_length(self, i: int) -> int:
        """Number of boxes in row i."""
        return sum(1 for h in self.parts if h >= i)

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(self.row_length(i) for i in range(1, self.parts[0] + 1)))

    def diagonal_length(self) -> int:
        return sum(1 for j, h in enumerate(self.parts, start=1) if h >= j)


@dataclass(frozen=True)
class ColoringContext:
    """Modulus n >= 2 and offset a in Z/nZ, stored as 0 <= a < n."""

    modulus: int
    offset: int = 0

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2, got %d" % self.modulus)
        object.__setattr__(self, "offset", self.offset % self.modulus)

    def residue(self, i: int, j: int) -> int:
        return (self.offset - i + j) % self.modulus

    def color(self, c: int) -> int:
        """Canonical representative of an arbitrary color index."""
        return c % self.modulus

    def with_offset(self, a: int) -> "ColoringContext":
        return ColoringContext(self.modulus, a)


def color_weight(p: Partition, ctx: ColoringContext) -> WeightVector:
    counts = [0] * ctx.modulus
    for i, j in p.boxes():
        counts[ctx.residue(i, j)] += 1
    return tuple(counts)


def _partitions(k: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(k: int) -> Tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(k, k))


def enumerate_partitions(k: int) -> List[Partition]:
    """All partitions of k, lexicographically decreasing."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return list(_partitions_cached(k))


def partitions_up_to(K: int) -> Iterator[Partition]:
    for k in range(K + 1):
        yield from _partitions_cached(k)


def z_brute(ctx: ColoringContext, K: int) -> MultiSeries:
    """Z_a truncated at degree K, by enumerating every diagram with at most K boxes."""
    if K < 0:
        raise ValueError("K must be non-negative")
    terms = {}
    for p in partitions_up_to(K):
        w = color_weight(p, ctx)
        terms[w] = terms.get(w, 0) + 1
    return MultiSeries(ctx.modulus, K, terms)


@dataclass(frozen=True)
class PartitionTuple:
    diagrams: Tuple[Partition, ...]
    offsets: Tuple[int, ...]

    def __post_init__(self):
        if len(self.diagrams) != len(self.offsets) or not self.diagrams:
            raise ValueError("need equally many diagrams and offsets, at least one")

    @property
    def weight(self) -> int:
        return sum(p.weight for p in self.diagrams)

    def color_weight(self, n: int) -> WeightVector:
        total = [0] * n
        for p, a in zip(self.diagrams, self.offsets):
            for c, x in enumerate(color_weight(p, ColoringContext(n, a))):
                total[c] += x
        return tuple(total)


def z_tuple(offsets: Sequence[int], n: int, K: int) -> MultiSeries:
    """Z for tuples of diagrams, the i-th one a_i-colored: the product of the Z_{a_i}."""
    if not offsets:
        raise ValueError("offsets must be non-empty")
    for a in offsets:
        if not 0 <= a < n:
            raise ValueError("offset %d is not a residue mod %d" % (a, n))
    cache = {}
    for a in offsets:
        if a not in cache:
            cache[a] = z_brute(ColoringContext(n, a), K)
    return product((cache[a] for a in offsets), n, K)
