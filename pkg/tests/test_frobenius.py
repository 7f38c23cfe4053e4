import pytest
from hypothesis import given
from hypothesis import strategies as st

from colored_diagrams.frobenius import (ColoredFPartition, FrobeniusCoordinates, from_frobenius,
                                        h1_factors, h1_series, h2_factors, h2_series,
                                        to_colored_fpartition, to_frobenius,
                                        uncolored_constant_term, z_via_constant_term)
from colored_diagrams.partitions import (ColoringContext, Partition, color_weight,
                                         partitions_up_to, z_brute)
from colored_diagrams.series import MultiSeries, ZLaurentSeries

from oracles import partition_counts, top_row_counts


def test_to_frobenius_examples():
    assert to_frobenius(Partition(())) == FrobeniusCoordinates((), ())
    assert to_frobenius(Partition((1,))) == FrobeniusCoordinates((0,), (0,))
    fc = to_frobenius(Partition((4, 3, 2)))
    assert (fc.d, fc.top, fc.bottom) == (2, (2, 1), (3, 1))
    assert fc.weight == 9


def test_from_frobenius_examples_and_errors():
    assert from_frobenius(FrobeniusCoordinates((), ())) == Partition(())
    assert from_frobenius(FrobeniusCoordinates((0,), (0,))) == Partition((1,))
    with pytest.raises(ValueError):
        FrobeniusCoordinates((1, 1), (2, 0))
    with pytest.raises(ValueError):
        FrobeniusCoordinates((1,), (2, 0))


def test_frobenius_round_trip_exhaustive():
    for p in partitions_up_to(18):
        fc = to_frobenius(p)
        assert from_frobenius(fc) == p
        assert fc.weight == p.weight
        assert fc.d == p.diagonal_length()


@given(st.lists(st.integers(0, 9), unique=True, max_size=4),
       st.lists(st.integers(0, 9), unique=True, max_size=4))
def test_frobenius_inverse_direction(top, bottom):
    d = min(len(top), len(bottom))
    fc = FrobeniusCoordinates(sorted(top, reverse=True)[:d], sorted(bottom, reverse=True)[:d])
    assert to_frobenius(from_frobenius(fc)) == fc


def test_colored_fpartition_worked_example():
    cf = to_colored_fpartition(Partition((4, 3, 2)), ColoringContext(3, 2))
    assert cf.top == ((1, 1, 1), (1, 0, 1))
    assert cf.bottom == ((1, 1, 1), (0, 1, 0))


def test_colored_fpartition_small():
    assert to_colored_fpartition(Partition(()), ColoringContext(2, 0)).d == 0
    cf = to_colored_fpartition(Partition((1,)), ColoringContext(2, 0))
    assert cf == ColoredFPartition(2, ((1, 0),), ((0, 0),))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_colored_fpartition_bookkeeping_and_injectivity(n):
    for a in range(n):
        ctx = ColoringContext(n, a)
        seen = {}
        for p in partitions_up_to(14):
            cf = to_colored_fpartition(p, ctx)
            assert cf.column_weight() == color_weight(p, ctx)
            assert cf.total_weight == p.weight
            assert cf not in seen
            seen[cf] = p


def _laurent(n, K, W, coeffs):
    return ZLaurentSeries(n, K, W, {d: MultiSeries(n, K, t) for d, t in coeffs.items()})


def test_h1_examples():
    ctx = ColoringContext(2, 0)
    # (1 + z q0)(1 + z q0 q1): the z^2 term has degree 3
    assert h1_series(ctx, 2) == _laurent(2, 2, 3, {0: {(0, 0): 1}, 1: {(1, 0): 1, (1, 1): 1}})
    s3 = h1_series(ctx, 3)
    assert s3[2] == MultiSeries(2, 3, {(2, 1): 1})
    assert h1_series(ctx, 0) == ZLaurentSeries.one(2, 0, 1)


def test_h2_examples():
    ctx = ColoringContext(2, 0)
    # (1 + z^-1)(1 + z^-1 q1)
    assert h2_series(ctx, 1) == _laurent(2, 1, 2, {
        0: {(0, 0): 1}, -1: {(0, 0): 1, (0, 1): 1}, -2: {(0, 1): 1}})
    assert h2_series(ctx, 0) == _laurent(2, 0, 1, {0: {(0, 0): 1}, -1: {(0, 0): 1}})
    for n in (2, 3, 5):
        assert h2_series(ColoringContext(n, 1), 4)[-1][(0,) * n] == 1


@pytest.mark.parametrize("n,K", [(2, 9), (3, 9), (4, 8), (5, 7)])
def test_factor_counts(n, K):
    for a in range(n):
        ctx = ColoringContext(n, a)
        f1, f2 = h1_factors(ctx, K), h2_factors(ctx, K)
        want1 = sum(1 for k in range(K + 1) for i in range(n) if n * k + i + 1 <= K)
        want2 = sum(1 for k in range(K + 1) for i in range(n) if n * k + n - 1 - i <= K)
        assert len(f1) == want1 and len(set(f1)) == want1
        assert len(f2) == want2 and len(set(f2)) == want2
        assert f2.count((0,) * n) == 1
        assert all(sum(e) <= K for e in f1 + f2)


@pytest.mark.parametrize("n,a", [(2, 0), (2, 1), (3, 0), (3, 2), (4, 1)])
def test_h1_counts_distinct_top_rows(n, a):
    K = 9
    s = h1_series(ColoringContext(n, a), K)
    got = {}
    for d in s.z_degrees():
        for e, c in s[d].terms.items():
            got[(d, e)] = c
    assert got == top_row_counts(n, a, K)


def test_z_via_constant_term_examples():
    expected = MultiSeries(2, 3, {(0, 0): 1, (1, 0): 1, (1, 1): 2, (2, 1): 2, (1, 2): 1})
    assert z_via_constant_term(ColoringContext(2, 0), 3) == expected
    for n in (2, 3, 4):
        assert z_via_constant_term(ColoringContext(n, n - 1), 0) == MultiSeries.one(n, 0)
    ctx = ColoringContext(3, 2)
    assert z_via_constant_term(ctx, 6) == z_brute(ctx, 6)


def test_uncolored_specialization():
    assert uncolored_constant_term(15) == partition_counts(15)
    assert uncolored_constant_term(10, n=4) == partition_counts(10)
