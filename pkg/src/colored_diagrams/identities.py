"""
Closed forms for Z_a: the A_{n-1} lattice sum times the n-th power of the
Euler product, its charge-vector form, the two Jacobi triple product
normalizations, and the infinite products for n = 2 and n = 3 (a = 0).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from .partitions import ColoringContext
from .series import (MultiSeries, ZLaurentSeries, series_invert, specialize_uniform,
                     zl_mul)

ChargeVector = Tuple[int, ...]
LatticePoint = Tuple[int, ...]


@dataclass(frozen=True)
class CartanMatrix:
    rank: int
    entries: Tuple[Tuple[int, ...], ...]

    def quadratic_form(self, m: Sequence[int]) -> int:
        """m^T C m."""
        if len(m) != self.rank:
            raise ValueError("expected a vector of length %d" % self.rank)
        return sum(m[i] * self.entries[i][j] * m[j]
                   for i in range(self.rank) for j in range(self.rank))

    def half_quadratic_form(self, m: Sequence[int]) -> int:
        v = self.quadratic_form(m)
        assert v % 2 == 0, "m^T C m must be even"
        return v // 2


def cartan_matrix(n: int) -> CartanMatrix:
    """Cartan matrix of type A_{n-1}."""
    if n < 2:
        raise ValueError("n must be at least 2")
    r = n - 1
    rows = tuple(
        tuple(2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(r))
        for i in range(r))
    return CartanMatrix(r, rows)


def j_to_m(j: Sequence[int]) -> LatticePoint:
    """m_i = -(j_0 + ... + j_{i-1}) for i = 1..n-1."""
    if sum(j) != 0:
        raise ValueError("charge vector must sum to zero: %r" % (tuple(j),))
    return tuple(-s for s in itertools.accumulate(j[:-1]))


def m_to_j(m: Sequence[int]) -> ChargeVector:
    ext = (0,) + tuple(m) + (0,)
    return tuple(ext[i] - ext[i + 1] for i in range(len(ext) - 1))


def tri(x: int) -> int:
    """binom(x+1, 2) = x(x+1)/2, valid for negative x as well."""
    return x * (x + 1) // 2


def quadratic_identity_check(j: Sequence[int]) -> bool:
    """sum_i binom(j_i+1, 2) == (1/2) m^T C m under the change of variables m = j_to_m(j)."""
    n = len(j)
    lhs = sum(tri(x) for x in j)
    m = j_to_m(j)
    twice_rhs = cartan_matrix(n).quadratic_form(m)
    return 2 * lhs == twice_rhs


def euler_factor(n: int, K: int, power: int = 1) -> MultiSeries:
    """(prod_{m>=1} (1 - q^m))^{-power} with q = q_0 ... q_{n-1}."""
    base = MultiSeries.one(n, K)
    m = 1
    while n * m <= K:
        base = base - base.shift((m,) * n)
        m += 1
    return series_invert(base) ** power


def lattice_monomial(ctx: ColoringContext, m: Sequence[int]) -> Tuple[int, ...]:
    """Exponent vector of q_{1+a}^{m_1} ... q_{n-1+a}^{m_{n-1}} q^{m^T C m / 2}."""
    n = ctx.modulus
    half = cartan_matrix(n).half_quadratic_form(m)
    e = [half] * n
    for i, mi in enumerate(m, start=1):
        e[ctx.color(i + ctx.offset)] += mi
    assert min(e) >= 0, "lattice term with a negative exponent: m=%r" % (tuple(m),)
    return tuple(e)


def _shell(dim: int, R: int) -> Iterator[Tuple[int, ...]]:
    # integer points with sup-norm exactly R
    if R == 0:
        yield (0,) * dim
        return
    for pt in itertools.product(range(-R, R + 1), repeat=dim):
        if max(abs(x) for x in pt) == R:
            yield pt


def _shell_radius_bound(n: int, K: int) -> int:
    # With m_0 = m_n = 0, m^T C m / 2 = (1/2) sum (m_{i+1} - m_i)^2 >= 2 R^2 / n
    # when the sup-norm is R, and the total degree is at least that. So no
    # shell with 2 R^2 > n K contributes.
    R = 0
    while 2 * (R + 1) ** 2 <= n * K:
        R += 1
    return R


def lattice_sum(ctx: ColoringContext, K: int) -> MultiSeries:
    """sum over m in Z^{n-1} of the lattice monomials, truncated at degree K."""
    n = ctx.modulus
    terms = {}
    for R in range(_shell_radius_bound(n, K) + 1):
        for m in _shell(n - 1, R):
            e = lattice_monomial(ctx, m)
            if sum(e) <= K:
                assert e not in terms
                terms[e] = 1
    return MultiSeries(n, K, terms)


def theta_closed_form(ctx: ColoringContext, K: int) -> MultiSeries:
    if K < 0:
        raise ValueError("K must be non-negative")
    return euler_factor(ctx.modulus, K, ctx.modulus) * lattice_sum(ctx, K)


def charge_monomial(ctx: ColoringContext, j: Sequence[int]) -> Tuple[int, ...]:
    """
    Exponent vector of q_{1+a}^{-j_0} q_{2+a}^{-j_0-j_1} ... q_{n-1+a}^{-j_0-...-j_{n-2}}
    times q^{sum binom(j_i+1, 2)}.
    """
    n = ctx.modulus
    if len(j) != n or sum(j) != 0:
        raise ValueError("need n charges summing to zero, got %r" % (tuple(j),))
    e = [sum(tri(x) for x in j)] * n
    partial = 0
    for i in range(1, n):
        partial += j[i - 1]
        e[ctx.color(i + ctx.offset)] -= partial
    return tuple(e)


def charge_vectors(n: int, K: int) -> Iterator[ChargeVector]:
    """Every j in Z^n with sum zero and sum binom(j_i+1, 2) <= K."""
    bound = 0
    while tri(bound + 1) <= K:
        bound += 1
    # tri(x) = tri(-x-1), so tri(j_i) <= K forces -bound-1 <= j_i <= bound
    rng = range(-bound - 1, bound + 1)
    for head in itertools.product(rng, repeat=n - 1):
        j = head + (-sum(head),)
        if sum(tri(x) for x in j) <= K:
            yield j


def core_sum(ctx: ColoringContext, K: int) -> MultiSeries:
    """The z^0 lattice sum over charge vectors (no Euler factor)."""
    if K < 0:
        raise ValueError("K must be non-negative")
    n = ctx.modulus
    terms = {}
    for j in charge_vectors(n, K):
        e = charge_monomial(ctx, j)
        assert min(e) >= 0
        if sum(e) <= K:
            terms[e] = terms.get(e, 0) + 1
    return MultiSeries(n, K, terms)


# Jacobi triple product, one q variable and a z window

def _jtp_first_lhs(K: int) -> ZLaurentSeries:
    W = K + 1
    s = ZLaurentSeries.one(1, K, W)
    for m in range(1, K + 1):
        s = zl_mul(s, ZLaurentSeries.binomial(1, K, W, 1, (m,)))
    for m in range(1, K + 2):
        s = zl_mul(s, ZLaurentSeries.binomial(1, K, W, -1, (m - 1,)))
    return s


def _jtp_first_rhs(K: int) -> ZLaurentSeries:
    W = K + 1
    euler = euler_factor(1, K)
    coeffs = {}
    for j in range(-W, W + 1):
        if tri(j) <= K:
            coeffs[j] = euler.shift((tri(j),))
    return ZLaurentSeries(1, K, W, coeffs)


def _jtp_second_lhs(K: int) -> ZLaurentSeries:
    W = K + 1
    s = ZLaurentSeries.one(1, K, W)
    for m in range(1, K + 1):
        if 2 * m <= K:
            s = zl_mul(s, ZLaurentSeries.binomial(1, K, W, 0, (2 * m,), -1))
        if 2 * m - 1 <= K:
            s = zl_mul(s, ZLaurentSeries.binomial(1, K, W, 1, (2 * m - 1,)))
            s = zl_mul(s, ZLaurentSeries.binomial(1, K, W, -1, (2 * m - 1,)))
    return s


def _jtp_second_rhs(K: int) -> ZLaurentSeries:
    W = K + 1
    coeffs = {j: MultiSeries.monomial(1, K, (j * j,))
              for j in range(-W, W + 1) if j * j <= K}
    return ZLaurentSeries(1, K, W, coeffs)


def jacobi_triple_product_check(K: int) -> bool:
    """
    Both identities as exact (z, q) truncations:

        prod (1 + z q^m)(1 + z^-1 q^{m-1}) = prod (1 - q^m)^-1 * sum z^j q^{j(j+1)/2}
        prod (1 - q^{2m})(1 + z q^{2m-1})(1 + z^-1 q^{2m-1}) = sum z^j q^{j^2}
    """
    if K < 1:
        raise ValueError("K must be at least 1")
    return (_jtp_first_lhs(K) == _jtp_first_rhs(K)
            and _jtp_second_lhs(K) == _jtp_second_rhs(K))


def jacobi_second_at_z_one(K: int) -> Tuple[list, list]:
    """
    Both sides of the second identity with z = 1: coefficients of
    prod (1 - q^{2m})(1 + q^{2m-1})^2 and of sum_j q^{j^2}.
    """
    lhs = _jtp_second_lhs(K)
    total = MultiSeries.zero(1, K)
    for d in lhs.z_degrees():
        total = total + lhs[d]
    rhs = [0] * (K + 1)
    j = 0
    while j * j <= K:
        rhs[j * j] += 1 if j == 0 else 2
        j += 1
    return specialize_uniform(total), rhs


# infinite products for a = 0

def _factor(n: int, K: int, exps: Sequence[int], sign: int = 1) -> MultiSeries:
    return MultiSeries.one(n, K) + MultiSeries.monomial(n, K, exps, sign)


def _qpow(n: int, k: int, base: Sequence[int] = None) -> Tuple[int, ...]:
    base = base or (0,) * n
    return tuple(b + k for b in base)


def _truncated_product(n: int, K: int, numer, denom) -> MultiSeries:
    """
    prod_m numer(m) / denom(m), where numer/denom map m to exponent vectors
    of (1 +- monomial) factors. Stops once every factor of a given m has
    degree > K; factor degrees grow with m.
    """
    result = MultiSeries.one(n, K)
    den = MultiSeries.one(n, K)
    m = 1
    while True:
        fs = [(e, s) for e, s in numer(m) if sum(e) <= K]
        ds = [e for e in denom(m) if sum(e) <= K]
        if not fs and not ds:
            break
        for e, s in fs:
            result = result * _factor(n, K, e, s)
        for e in ds:
            den = den * _factor(n, K, e, -1)
        m += 1
    return result * series_invert(den)


def product_n2(K: int) -> MultiSeries:
    """prod_m (1 + q_1 q^{2m-1})(1 + q_0 q^{2m-2}) / ((1 - q^m)(1 - q^{2m-1}))."""
    n = 2
    return _truncated_product(
        n, K,
        lambda m: [(_qpow(n, 2 * m - 1, (0, 1)), 1), (_qpow(n, 2 * m - 2, (1, 0)), 1)],
        lambda m: [_qpow(n, m), _qpow(n, 2 * m - 1)])


def product_n3(K: int) -> MultiSeries:
    n = 3

    def denom(m):
        return [_qpow(n, m), _qpow(n, m), _qpow(n, 2 * m - 1)]

    first = _truncated_product(
        n, K,
        lambda m: [(_qpow(n, 6 * m), -1),
                   (_qpow(n, 6 * m - 3, (0, 1, 2)), 1),
                   (_qpow(n, 6 * m - 5, (2, 1, 0)), 1),
                   (_qpow(n, 2 * m - 1, (0, 1, 0)), 1),
                   (_qpow(n, 2 * m - 2, (1, 0, 1)), 1)],
        denom)
    second = _truncated_product(
        n, K,
        lambda m: [(_qpow(n, 6 * m), -1),
                   (_qpow(n, 6 * m - 6, (0, 1, 2)), 1),
                   (_qpow(n, 6 * m - 1, (2, 1, 0)), 1),
                   (_qpow(n, 2 * m - 2, (0, 1, 0)), 1),
                   (_qpow(n, 2 * m - 1, (1, 0, 1)), 1)],
        denom)
    return first + second.shift((1, 0, 0))
