import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colored_diagrams.abacus import (CoreQuotient, beta_window, core_charges, core_quotient,
                                     core_series_brute, default_window, from_core_quotient,
                                     is_core, n_core, n_quotient, partition_from_beads)
from colored_diagrams.identities import charge_monomial, charge_vectors, core_sum
from colored_diagrams.partitions import (ColoringContext, Partition, color_weight,
                                         partitions_up_to)
from colored_diagrams.series import MultiSeries

from oracles import all_cores_by_removal, strip_removals

E = Partition(())
partitions = st.lists(st.integers(1, 7), max_size=7).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def test_beta_window_examples():
    assert beta_window(E, 2, 2).positions == {0, -1}
    assert beta_window(Partition((1,)), 2, 2).positions == {1, -1}
    with pytest.raises(ValueError):
        beta_window(Partition((1, 1, 1)), 2, 2)
    with pytest.raises(ValueError):
        beta_window(Partition((1,)), 2, 3)


def test_beta_round_trip():
    for p in partitions_up_to(15):
        for n in (2, 3):
            for N in (default_window(p, n), default_window(p, n) + n):
                assert beta_window(p, n, N).to_partition() == p
        assert partition_from_beads(beta_window(p, 2).positions) == p


def test_window_invariance():
    for p in partitions_up_to(12):
        for n in (2, 3, 4):
            N = default_window(p, n)
            w1, w2 = beta_window(p, n, N), beta_window(p, n, N + n)
            assert w2.positions - w1.positions == set(range(-N - n + 1, -N + 1))
            assert core_charges(p, n) == tuple(
                -((len(w2.ruler((-i) % n)) - (N + n) // n)) for i in range(n))


def test_n_core_examples():
    assert n_core(Partition((1,)), 2) == Partition((1,))
    assert n_core(Partition((2,)), 2) == E
    assert n_core(Partition((2, 1)), 2) == Partition((2, 1))
    assert strip_removals(Partition((2, 1)), 2) == []


@pytest.mark.parametrize("n", [2, 3, 4])
def test_n_core_against_strip_removal_oracle(n):
    memo = {}
    for p in partitions_up_to(12):
        cores = all_cores_by_removal(p, n, memo)
        assert cores == {n_core(p, n)}


@settings(deadline=None)
@given(partitions, st.integers(2, 5))
def test_n_core_idempotent(p, n):
    c = n_core(p, n)
    assert n_core(c, n) == c
    assert is_core(c, n)


def test_n_quotient_examples():
    assert n_quotient(Partition((2, 1)), 2) == (E, E)
    q = n_quotient(Partition((2,)), 2)
    assert sorted(x.weight for x in q) == [0, 1]
    assert Partition((1,)) in q


def test_from_core_quotient_examples():
    assert from_core_quotient(CoreQuotient(2, E, (E, E))) == E
    p = from_core_quotient(CoreQuotient(2, Partition((2, 1)), (Partition((1,)), E)))
    assert p == Partition((4, 1))
    assert core_quotient(p, 2) == CoreQuotient(2, Partition((2, 1)), (Partition((1,)), E))
    assert Partition((2, 1)) in all_cores_by_removal(p, 2)
    with pytest.raises(ValueError):
        from_core_quotient(CoreQuotient(2, Partition((2,)), (E, E)))


@pytest.mark.parametrize("n", [2, 3, 5])
def test_decomposition_exhaustive(n):
    for p in partitions_up_to(18):
        cq = core_quotient(p, n)
        assert from_core_quotient(cq) == p
        assert p.weight == cq.core.weight + n * cq.quotient_weight
        for a in range(n):
            ctx = ColoringContext(n, a)
            wp, wc = color_weight(p, ctx), color_weight(cq.core, ctx)
            assert all(x - y == cq.quotient_weight for x, y in zip(wp, wc))


@pytest.mark.parametrize("n", [2, 3])
def test_inverse_direction_round_trip(n):
    cores = [p for p in partitions_up_to(9) if is_core(p, n)]
    quotients = [list(partitions_up_to(2))] * n
    for core in cores:
        for qs in itertools.product(*quotients):
            if sum(q.weight for q in qs) > 2:
                continue
            cq = CoreQuotient(n, core, tuple(qs))
            assert core_quotient(from_core_quotient(cq), n) == cq


def test_core_charges_examples():
    assert core_charges(E, 3) == (0, 0, 0)
    assert core_charges(Partition((1,)), 2, 0) == (1, -1)
    assert core_charges(Partition((2,)), 2, 0) == (0, 0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_charge_calibration(n):
    for p in partitions_up_to(12):
        j = core_charges(p, n)
        assert sum(j) == 0
        assert j == core_charges(n_core(p, n), n)
        if is_core(p, n):
            for a in range(n):
                ctx = ColoringContext(n, a)
                assert charge_monomial(ctx, j) == color_weight(p, ctx)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cores_biject_with_charges(n):
    K = 12
    cores = [p for p in partitions_up_to(K) if is_core(p, n)]
    charges = {core_charges(p, n): p for p in cores}
    assert len(charges) == len(cores)
    ctx = ColoringContext(n, 0)
    attainable = {j for j in charge_vectors(n, K) if sum(charge_monomial(ctx, j)) <= K}
    assert attainable == set(charges)


def test_core_series_examples():
    assert core_series_brute(ColoringContext(3, 0), 0) == MultiSeries.one(3, 0)
    assert core_series_brute(ColoringContext(2, 0), 4) == MultiSeries(
        2, 4, {(0, 0): 1, (1, 0): 1, (1, 2): 1})


@pytest.mark.parametrize("n", [2, 3, 4])
def test_core_series_equals_core_sum(n):
    for a in range(n):
        ctx = ColoringContext(n, a)
        s = core_series_brute(ctx, 10)
        assert s == core_sum(ctx, 10)
        assert set(s.terms.values()) <= {1}
