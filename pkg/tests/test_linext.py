from math import factorial

import pytest

from posetbounds.errors import ContractError, SizeError
from posetbounds.linext import (
    count_extensions,
    enumerate_extensions,
    extensions_without,
    greedy_increasing_chain,
    greedy_inject,
    greedy_recover,
    is_extension,
    ranks_from_json,
    ranks_to_json,
    recurrence_gap,
)
from posetbounds.poset import (
    antichain,
    chain,
    generate_all,
    induced_subposet,
    maximal_elements,
    random_poset,
)

from .oracles import count_by_permutations

N_PAIRS = [(0, 2), (1, 2), (1, 3)]


@pytest.mark.parametrize("n", range(0, 8))
def test_count_chain_and_antichain(n):
    assert count_extensions(chain(n)) == 1
    assert count_extensions(antichain(n)) == factorial(n)


def test_count_n_poset(npos):
    assert count_by_permutations(4, N_PAIRS) == 5
    assert count_extensions(npos) == 5


def test_count_guard():
    with pytest.raises(SizeError):
        count_extensions(antichain(25))


def test_count_matches_permutation_oracle_on_random():
    for seed in range(40):
        P = random_poset(7, [0.1, 0.3, 0.6][seed % 3], seed)
        assert count_extensions(P) == count_by_permutations(7, P.relations())


def test_enumerate_small():
    assert list(enumerate_extensions(chain(2))) == [(1, 2)]
    assert len(list(enumerate_extensions(antichain(2)))) == 2


def test_enumerate_n_poset_lexicographic(npos):
    exts = list(enumerate_extensions(npos))
    assert len(exts) == 5 == len(set(exts))
    orders = [tuple(sorted(range(4), key=f.__getitem__)) for f in exts]
    assert orders == sorted(orders)
    assert all(is_extension(npos, f) for f in exts)


def test_enumerate_guard():
    with pytest.raises(SizeError):
        next(enumerate_extensions(antichain(11)))


def test_count_agrees_with_enumeration_exhaustive():
    for n in range(6):
        for P in generate_all(n):
            assert count_extensions(P) == sum(1 for _ in enumerate_extensions(P))


def test_count_agrees_with_enumeration_random():
    for i in range(200):
        P = random_poset(1 + i % 8, (0.15, 0.35, 0.6)[i % 3], 1000 + i)
        assert count_extensions(P) == sum(1 for _ in enumerate_extensions(P))


def test_inject_single_falling_step():
    assert greedy_inject(chain(2), {1}, 1, (2, 0)) == (1, 2)


def test_inject_two_antichain():
    P = antichain(2)
    g0 = greedy_inject(P, {0, 1}, 0, (0, 2))
    g1 = greedy_inject(P, {0, 1}, 1, (2, 0))
    assert g0 == (1, 2) and g1 == (2, 1)


def test_inject_rejects_bad_input(npos):
    with pytest.raises(ContractError):
        greedy_inject(npos, {0, 2}, 0, (0, 2, 3, 4))  # 0<2 so not an antichain
    with pytest.raises(ContractError):
        greedy_inject(npos, {2, 3}, 2, (3, 2, 1, 4))  # no sentinel at x
    with pytest.raises(ContractError):
        greedy_inject(npos, {2, 3}, 2, (2, 4, 0, 3))  # 1<3 violated
    with pytest.raises(ContractError):
        greedy_inject(npos, {2, 3}, 0, (0, 2, 3, 4))  # x outside A


def test_inject_n_poset_domain(npos):
    A = {2, 3}
    assert count_by_permutations(4, N_PAIRS, [0, 1, 3]) == 3
    assert count_by_permutations(4, N_PAIRS, [0, 1, 2]) == 2
    domain = [(x, f) for x in sorted(A) for f in extensions_without(npos, x)]
    assert len(domain) == 5
    images = [greedy_inject(npos, A, x, f) for x, f in domain]
    assert len(set(images)) == 5
    assert set(images) == set(enumerate_extensions(npos))


def test_recover_examples():
    assert greedy_recover(chain(2), {1}, (1, 2)) == (1, (2, 0))
    assert greedy_recover(antichain(2), {0}, (2, 1)) is None


def test_recover_n_poset_roundtrip(npos):
    A = {2, 3}
    for g in enumerate_extensions(npos):
        x, f = greedy_recover(npos, A, g)
        assert greedy_inject(npos, A, x, f) == g


def test_recover_rejects_invalid(npos):
    with pytest.raises(ContractError):
        greedy_recover(npos, {2, 3}, (3, 1, 2, 4))


def _injection_properties(P, A):
    domain = [(x, f) for x in sorted(A) for f in extensions_without(P, x)]
    images = [greedy_inject(P, A, x, f) for x, f in domain]
    assert len(set(images)) == len(images)
    for (x, f), g in zip(domain, images):
        assert greedy_recover(P, A, g) == (x, f)
    present = sum(greedy_recover(P, A, g) is not None for g in enumerate_extensions(P))
    assert present == len(domain) == recurrence_gap(P, A)[0]


@pytest.mark.parametrize("seed", range(30))
def test_injection_properties_random(seed):
    P = random_poset(6, (0.2, 0.4, 0.6)[seed % 3], seed)
    _injection_properties(P, maximal_elements(P))
    mins = frozenset(x for x in range(P.n) if not P.down[x])
    _injection_properties(P, mins)


def test_increasing_chain_is_maximal():
    for seed in range(20):
        P = random_poset(6, 0.4, seed)
        for g in enumerate_extensions(P):
            ch = greedy_increasing_chain(P, g)
            assert not P.down[ch[0]] and not P.up[ch[-1]]
            assert all((u, v) in P.covers for u, v in zip(ch, ch[1:]))


def test_recurrence_gap_examples(npos, anti3):
    s, e = recurrence_gap(npos, maximal_elements(npos))
    assert s == e == 5
    assert count_by_permutations(4, N_PAIRS, [1, 2, 3]) == 2
    assert recurrence_gap(npos, {0}) == (2, 5)
    assert recurrence_gap(anti3, {0, 1, 2}) == (6, 6)


def test_recurrence_gap_maximal_equality_exhaustive():
    for n in range(1, 6):
        for P in generate_all(n):
            s, e = recurrence_gap(P, maximal_elements(P))
            assert s == e
            for x in range(P.n):
                s1, _ = recurrence_gap(P, {x})
                assert s1 == count_extensions(induced_subposet(P, [x])[0]) <= e


def test_ranks_json():
    assert ranks_from_json(ranks_to_json((2, 0, 3))) == (2, 0, 3)
    with pytest.raises(ContractError):
        ranks_from_json({"ranks": [0, 0, 2]})
