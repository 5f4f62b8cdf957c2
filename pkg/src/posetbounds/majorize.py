"""Majorization of finite multisets of non-negative integers.

Multisets are tuples sorted in weakly decreasing order. Comparisons between
multisets of different sizes pad the shorter one with zeros.
"""

from __future__ import annotations

from itertools import accumulate, combinations_with_replacement
from math import factorial, prod
from typing import Iterable, Iterator, Optional

from .errors import ContractError, RangeError

Multiset = tuple[int, ...]


def multiset(elems: Iterable[int] = ()) -> Multiset:
    elems = tuple(sorted(elems, reverse=True))
    if any(x < 0 for x in elems):
        raise ContractError(f"multiset elements must be non-negative: {list(elems)}")
    return elems


def s_k(X: Iterable[int], k: int) -> int:
    """Sum of the ``k`` largest elements (all of them when ``k`` exceeds the size)."""
    if k < 0:
        raise RangeError(f"k must be non-negative, got {k}")
    return sum(multiset(X)[:k])


def total(X: Iterable[int]) -> int:
    return sum(X)


def _prefixes(X: Multiset, length: int) -> list[int]:
    padded = X + (0,) * (length - len(X))
    return list(accumulate(padded))


def majorizes(X: Iterable[int], Y: Iterable[int]) -> bool:
    X, Y = multiset(X), multiset(Y)
    if sum(X) != sum(Y):
        return False
    L = max(len(X), len(Y))
    return all(a >= b for a, b in zip(_prefixes(X, L), _prefixes(Y, L)))


def union(X: Iterable[int], Z: Iterable[int]) -> Multiset:
    """Multiset sum: multiplicities add."""
    return multiset(tuple(X) + tuple(Z))


def factorial_product(X: Iterable[int]) -> int:
    return prod(factorial(x) for x in X)


def karamata_factorial_check(X: Iterable[int], Y: Iterable[int]) -> bool:
    """Under ``X`` majorizing ``Y``, check that the product of factorials dominates."""
    if not majorizes(X, Y):
        raise ContractError(f"{multiset(X)} does not majorize {multiset(Y)}")
    return factorial_product(X) >= factorial_product(Y)


def union_equivalence(X: Iterable[int], Y: Iterable[int], Z: Iterable[int]) -> bool:
    """True iff adjoining ``Z`` to both sides leaves the majorization verdict unchanged."""
    return majorizes(X, Y) == majorizes(union(X, Z), union(Y, Z))


def decrement_exchange(X: Iterable[int], m: int) -> Multiset:
    """Replace one copy of the ``m``-th largest element by that value minus one."""
    X = multiset(X)
    if not 1 <= m <= len(X):
        raise RangeError(f"m={m} outside 1..{len(X)}")
    xm = X[m - 1]
    if xm == 0:
        raise ContractError(f"the {m}-th largest element is 0 and cannot be decremented")
    rest = list(X)
    rest.remove(xm)
    return multiset(rest + [xm - 1])


def _proposition2_pre(X: Multiset, Y: Multiset, m: int) -> Optional[str]:
    if m < 1:
        return f"m must be at least 1, got {m}"
    if sum(Y) != sum(X) - 1:
        return f"s(Y)={sum(Y)} is not s(X)-1={sum(X) - 1}"
    L = max(len(X), len(Y), m)
    px, py = _prefixes(X, L), _prefixes(Y, L)
    for k in range(L):
        if not px[k] >= py[k] >= px[k] - 1:
            return f"s_{k + 1}: X={px[k]}, Y={py[k]} not within one"
    for k in range(m - 1):
        if px[k] != py[k]:
            return f"s_{k + 1} differs though k < m={m}"
    return None


def proposition2_check(X: Iterable[int], Y: Iterable[int], m: int) -> bool:
    """Given the hypotheses, verify ``x_m > 0`` and ``Y`` majorizes the exchange of ``X`` at ``m``."""
    X, Y = multiset(X), multiset(Y)
    problem = _proposition2_pre(X, Y, m)
    if problem:
        raise ContractError(problem)
    if m > len(X) or X[m - 1] == 0:
        return False
    return majorizes(Y, decrement_exchange(X, m))


def divergence_index(X: Iterable[int], Y: Iterable[int]) -> int:
    """The first ``k`` with ``s_k(X) != s_k(Y)``: the largest ``m`` Proposition 2 admits."""
    X, Y = multiset(X), multiset(Y)
    L = max(len(X), len(Y))
    for k, (a, b) in enumerate(zip(_prefixes(X, L), _prefixes(Y, L)), 1):
        if a != b:
            return k
    raise ContractError("prefix sums never diverge")


def proposition2_auto(X: Iterable[int], Y: Iterable[int]) -> bool:
    return proposition2_check(X, Y, divergence_index(X, Y))


def multisets(max_elem: int, max_size: int) -> Iterator[Multiset]:
    """All multisets with elements in ``0..max_elem`` and at most ``max_size`` members."""
    for size in range(max_size + 1):
        for combo in combinations_with_replacement(range(max_elem, -1, -1), size):
            yield combo


def partitions_with_cap(total_: int, cap: int) -> Iterator[Multiset]:
    """Multisets of positive parts ``<= cap`` summing to ``total_``."""
    if total_ == 0:
        yield ()
        return
    for first in range(min(total_, cap), 0, -1):
        for tail in partitions_with_cap(total_ - first, first):
            yield (first,) + tail
