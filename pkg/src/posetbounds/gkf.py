"""Greene-Kleitman-Fomin chain and antichain parameters.

``chain_params`` solves a node-split min-cost flow; ``antichain_params`` is
its conjugate. The ``*_bruteforce`` functions are independent exhaustive
oracles for small posets.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .errors import ContractError, InternalError, SizeError
from .flow import FlowNetwork
from .partition import Partition, conjugate
from .poset import Poset, bits, induced_subposet, is_antichain, is_chain, maximal_elements

BRUTEFORCE_MAX_N = 8


def chain_network(P: Poset) -> tuple[FlowNetwork, int, int]:
    """Source ``2n``, sink ``2n+1``; element ``v`` splits into ``2v`` (in) and ``2v+1`` (out)."""
    n = P.n
    s, t = 2 * n, 2 * n + 1
    net = FlowNetwork(2 * n + 2)
    for v in range(n):
        net.add_arc(s, 2 * v, 1, 0)
        net.add_arc(2 * v, 2 * v + 1, 1, -1)
        net.add_arc(2 * v + 1, t, 1, 0)
    for u, v in P.relations():
        net.add_arc(2 * u + 1, 2 * v, 1, 0)
    return net, s, t


def chain_params(P: Poset) -> Partition:
    """``c_1 >= c_2 >= ...`` with ``c_1 + ... + c_k`` the most elements k chains can cover."""
    net, s, t = chain_network(P)
    gains = []
    covered = 0
    for cost in net.augmentations(s, t):
        if covered == P.n:
            break
        gain = -cost
        if gains and gain > gains[-1]:
            raise InternalError(f"augmentation gains increased: {gains} then {gain}")
        if gain <= 0:
            raise InternalError(f"non-positive gain {gain} with {P.n - covered} elements uncovered")
        gains.append(gain)
        covered += gain
    if covered != P.n:
        raise InternalError(f"flow covered {covered} of {P.n} elements")
    return Partition(tuple(gains))


def antichain_params(P: Poset) -> Partition:
    return conjugate(chain_params(P))


def _maximal_families(P: Poset, test: Callable[[Poset, list[int]], bool]) -> list[int]:
    good = [m for m in range(1, 1 << P.n) if test(P, list(bits(m)))]
    # unions only grow, so inclusion-maximal members suffice
    return [m for m in good if not any(o != m and o & m == m for o in good)]


def _cover_increments(P: Poset, families: list[int]) -> Partition:
    full = P.full_mask
    reached = {0}
    best_prev = 0
    parts = []
    while best_prev < P.n:
        reached = {r | f for r in reached for f in families}
        best = max(bin(r).count("1") for r in reached)
        parts.append(best - best_prev)
        best_prev = best
        if full in reached:
            break
        # keep only unions that are not dominated by another reached union
        reached = {r for r in reached if not any(o != r and o & r == r for o in reached)}
    return Partition(tuple(parts))


def _bruteforce(P: Poset, test) -> Partition:
    if P.n > BRUTEFORCE_MAX_N:
        raise SizeError(f"brute-force oracle is guarded at n <= {BRUTEFORCE_MAX_N}, got {P.n}")
    if P.n == 0:
        return Partition(())
    return _cover_increments(P, _maximal_families(P, test))


def chain_params_bruteforce(P: Poset) -> Partition:
    return _bruteforce(P, is_chain)


def antichain_params_bruteforce(P: Poset) -> Partition:
    return _bruteforce(P, is_antichain)


def longest_chain(P: Poset) -> int:
    """Length of the longest chain, by DP over the (index-free) order."""
    height: dict[int, int] = {}

    def h(x: int) -> int:
        if x not in height:
            height[x] = 1 + max((h(y) for y in bits(P.down[x])), default=0)
        return height[x]

    return max((h(x) for x in range(P.n)), default=0)


def _reaches_prefix(P: Poset, forbidden: Iterable[int], i: int, target: int) -> bool:
    sub, _ = induced_subposet(P, forbidden)
    return chain_params(sub).prefix(i) == target


def order_maximal_antichain(P: Poset) -> list[int]:
    """Order the maximal elements so every prefix supports the optimal chain prefix.

    At step ``i`` the chosen ``x_1..x_i`` together with the non-maximal
    elements must support ``i`` chains of total size ``c_1 + ... + c_i``.
    Candidates are tried in increasing index order.
    """
    A = sorted(maximal_elements(P))
    c = chain_params(P)
    chosen: list[int] = []
    remaining = list(A)
    for i in range(1, len(A) + 1):
        target = c.prefix(i)
        for x in remaining:
            forbidden = [y for y in remaining if y != x]
            if _reaches_prefix(P, forbidden, i, target):
                chosen.append(x)
                remaining.remove(x)
                break
        else:
            raise InternalError(
                f"no maximal element extends ordering {chosen} at step {i} "
                f"(poset covers {sorted(P.covers)})"
            )
    return chosen


def verify_ordering(P: Poset, ordering: list[int]) -> bool:
    A = maximal_elements(P)
    if sorted(ordering) != sorted(A):
        raise ContractError(f"{ordering} is not a permutation of the maximal elements {sorted(A)}")
    c = chain_params(P)
    for i in range(1, len(ordering) + 1):
        forbidden = ordering[i:]
        if not _reaches_prefix(P, forbidden, i, c.prefix(i)):
            return False
    return True
