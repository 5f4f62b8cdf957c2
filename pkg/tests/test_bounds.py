import math
from fractions import Fraction
from math import factorial

import pytest

from posetbounds.bounds import (
    accuracy_check,
    antichain_partition_bound,
    chain_partition_bound,
    check_bounds,
    greedy_chain_partition,
    harmonic,
    lower_bound,
    power_form_check,
    power_identity_check,
    stirling_floor_check,
    upper_bound,
)
from posetbounds.errors import ContractError
from posetbounds.gkf import antichain_params
from posetbounds.partition import Partition, partitions_of
from posetbounds.poset import antichain, chain, generate_all, random_poset
from posetbounds.verify import rank_blocks


def test_lower_bound():
    assert lower_bound((1, 1, 1)) == 1
    assert lower_bound((3,)) == 6
    assert lower_bound((2, 2)) == 4


def test_upper_bound():
    assert upper_bound(3, (3,)) == 1
    assert upper_bound(3, (1, 1, 1)) == 6
    assert upper_bound(4, (2, 2)) == 6
    with pytest.raises(ContractError):
        upper_bound(4, (2, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_extremes_tight(n):
    r = check_bounds(chain(n))
    assert r.lower == r.e == r.upper == 1
    r = check_bounds(antichain(n))
    assert r.lower == r.e == r.upper == factorial(n)


def test_n_poset_report(npos):
    r = check_bounds(npos)
    assert (r.lower, r.e, r.upper, r.holds) == (4, 5, 6, True)
    doc = r.to_json()
    assert doc["a"] == [2, 2] and doc["c"] == [2, 2]
    assert doc["log_ratio"] == 0.405465108108


def test_antichain_partition_bound_examples(npos):
    assert antichain_partition_bound(chain(3), [[0], [1], [2]]) == 1
    assert antichain_partition_bound(npos, [[0, 1], [2, 3]]) == 4
    assert antichain_partition_bound(npos, [[0, 3], [1], [2]]) == 2
    with pytest.raises(ContractError):
        antichain_partition_bound(npos, [[0, 2], [1, 3]])
    with pytest.raises(ContractError):
        antichain_partition_bound(npos, [[0, 1], [2]])
    with pytest.raises(ContractError):
        antichain_partition_bound(npos, [[0, 1], [1, 2, 3]])


def _antichain_partitions(P):
    """Every set partition of P into antichains (small n only)."""
    def rec(i, blocks):
        if i == P.n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            if all(not P.comparable(i, y) for y in b):
                b.append(i)
                yield from rec(i + 1, blocks)
                b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()
    yield from rec(0, [])


def test_corollary_over_all_antichain_partitions():
    for n in range(1, 6):
        for P in generate_all(n):
            r = check_bounds(P)
            lo = lower_bound(antichain_params(P))
            for blocks in _antichain_partitions(P):
                b = antichain_partition_bound(P, blocks)
                assert b <= lo <= r.e


def test_rank_blocks_are_antichain_partition():
    for seed in range(30):
        P = random_poset(9, 0.3, seed)
        assert antichain_partition_bound(P, rank_blocks(P)) <= check_bounds(P).e


def test_chain_partition_monotonicity():
    for seed in range(100):
        P = random_poset(4 + seed % 9, (0.1, 0.3, 0.6)[seed % 3], seed)
        r = check_bounds(P)
        d = chain_partition_bound(P, greedy_chain_partition(P))
        assert d >= r.upper
        assert r.upper * math.prod(factorial(x) for x in r.c) == factorial(P.n)


def test_harmonic():
    assert harmonic(1) == 1
    assert harmonic(2) == Fraction(3, 2)
    assert harmonic(4) == Fraction(25, 12)
    assert harmonic(10) == Fraction(7381, 2520)


def test_accuracy_examples():
    lhs, rhs, ok = accuracy_check((2, 2))
    assert ok
    assert lhs == pytest.approx(2.77258872223978, abs=1e-12)
    assert rhs == pytest.approx(-1.39069925584124, abs=1e-12)
    assert accuracy_check((1,)) == pytest.approx((0.0, -1.0, True))
    lhs, rhs, ok = accuracy_check((10,))
    assert ok
    assert lhs == pytest.approx(15.1044125730755, abs=1e-12)
    assert rhs == pytest.approx(2.27934863729462, abs=1e-12)


def test_accuracy_accepts_zero_padding():
    assert accuracy_check((3, 1, 0, 0)) == accuracy_check((3, 1))


def test_power_identity_examples():
    assert power_identity_check((2, 2))
    assert power_identity_check((6,))
    assert power_identity_check((3, 1))


def test_accuracy_all_partitions_to_16():
    for n in range(1, 17):
        for a in partitions_of(n):
            assert accuracy_check(a)[2]
            assert power_identity_check(a)


def _compositions(n, slots):
    if slots == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, slots - 1):
            yield (first,) + rest


@pytest.mark.parametrize("n", range(1, 8))
def test_power_form_arbitrary_sequences(n):
    for seq in _compositions(n, n):
        assert power_form_check(seq)[2]


def test_partitions_of_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert sum(1 for _ in partitions_of(20)) == 627


def test_stirling_floor():
    assert stirling_floor_check(0)
    assert stirling_floor_check(1)
    assert stirling_floor_check(1000)
