"""Counting linear extensions and the greedy-chain injection.

A linear extension is a tuple ``ranks`` with ``ranks[x]`` the position of
element ``x``. Extensions of ``P - x`` live in the ambient indexing of ``P``:
they take values in ``{2..n}`` and carry the sentinel ``0`` at ``x``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .errors import ContractError, SizeError
from .poset import Poset, bits, induced_subposet, is_antichain

LinearExtension = tuple[int, ...]

COUNT_MAX_N = 24
ENUMERATE_MAX_N = 10


def count_extensions(P: Poset) -> int:
    """Exact number of linear extensions.

    Counts maximal chains of the downset lattice layer by layer: a downset
    grows by any element whose strict downset it already contains.
    """
    if P.n > COUNT_MAX_N:
        raise SizeError(f"count_extensions is guarded at n <= {COUNT_MAX_N}, got {P.n}")
    down = P.down
    layer = {0: 1}
    for _ in range(P.n):
        nxt: dict[int, int] = {}
        get = nxt.get
        for D, cnt in layer.items():
            free = P.full_mask & ~D
            while free:
                low = free & -free
                free ^= low
                x = low.bit_length() - 1
                if down[x] & ~D == 0:
                    E = D | low
                    nxt[E] = get(E, 0) + cnt
        layer = nxt
    return layer[P.full_mask]


def enumerate_extensions(P: Poset) -> Iterator[LinearExtension]:
    """Yield every linear extension once, lexicographically by element order."""
    n = P.n
    if n > ENUMERATE_MAX_N:
        raise SizeError(f"enumerate_extensions is guarded at n <= {ENUMERATE_MAX_N}, got {n}")
    ranks = [0] * n

    def rec(D: int, r: int) -> Iterator[LinearExtension]:
        if r > n:
            yield tuple(ranks)
            return
        for x in range(n):
            if not D >> x & 1 and P.down[x] & ~D == 0:
                ranks[x] = r
                yield from rec(D | 1 << x, r + 1)

    yield from rec(0, 1)


def is_extension(P: Poset, f: LinearExtension, removed: Optional[int] = None) -> bool:
    """Check ``f`` is a linear extension of ``P``, or of ``P - removed`` onto ``{2..n}``."""
    n = P.n
    if len(f) != n:
        return False
    if removed is None:
        expected = set(range(1, n + 1))
        keep = range(n)
    else:
        if not 0 <= removed < n or f[removed] != 0:
            return False
        expected = set(range(2, n + 1))
        keep = [y for y in range(n) if y != removed]
    if {f[y] for y in keep} != expected:
        return False
    return all(f[u] < f[v] for u in keep for v in bits(P.up[u]) if v != removed)


def greedy_falling_chain(P: Poset, x: int, f: LinearExtension) -> list[int]:
    """``x = x_0 > x_1 > ... > x_t``: each step takes the element below with largest ``f``."""
    chain = [x]
    cur = x
    while P.down[cur]:
        below = list(bits(P.down[cur]))
        values = [f[y] for y in below]
        best = max(values)
        assert values.count(best) == 1, "f must be injective below x"
        cur = below[values.index(best)]
        chain.append(cur)
    return chain


def greedy_increasing_chain(P: Poset, g: LinearExtension) -> list[int]:
    """Chain from ``g^-1(1)`` upward, each step taking the element above with smallest ``g``."""
    cur = g.index(1)
    chain = [cur]
    while P.up[cur]:
        cur = min(bits(P.up[cur]), key=g.__getitem__)
        chain.append(cur)
    return chain


def _check_antichain(P: Poset, A: Iterable[int]) -> frozenset:
    A = frozenset(A)
    if not is_antichain(P, A):
        raise ContractError(f"{sorted(A)} is not an antichain")
    return A


def greedy_inject(P: Poset, A: Iterable[int], x: int, f: LinearExtension) -> LinearExtension:
    """Map an extension ``f`` of ``P - x`` (onto ``{2..n}``) to an extension of ``P``.

    The values are shifted down the greedy falling chain from ``x``; the
    bottom of the chain receives rank 1.
    """
    A = _check_antichain(P, A)
    if x not in A:
        raise ContractError(f"{x} is not in the antichain {sorted(A)}")
    f = tuple(f)
    if not is_extension(P, f, removed=x):
        raise ContractError(f"{list(f)} is not an extension of P - {x} onto 2..{P.n}")
    chain = greedy_falling_chain(P, x, f)
    g = list(f)
    for a, b in zip(chain, chain[1:]):
        g[a] = f[b]
    g[chain[-1]] = 1
    return tuple(g)


def greedy_recover(
    P: Poset, A: Iterable[int], g: LinearExtension
) -> Optional[tuple[int, LinearExtension]]:
    """Invert :func:`greedy_inject`, or return ``None`` if ``g`` is not in its image.

    ``g`` is in the image exactly when its greedy increasing chain meets ``A``.
    """
    A = _check_antichain(P, A)
    g = tuple(g)
    if not is_extension(P, g):
        raise ContractError(f"{list(g)} is not an extension of P")
    chain = greedy_increasing_chain(P, g)
    hits = [i for i, y in enumerate(chain) if y in A]
    if not hits:
        return None
    (j,) = hits  # a chain meets an antichain at most once
    x = chain[j]
    f = list(g)
    for k in range(j):
        f[chain[k]] = g[chain[k + 1]]
    f[x] = 0
    return x, tuple(f)


def extensions_without(P: Poset, x: int) -> Iterator[LinearExtension]:
    """Extensions of ``P - x`` in the ambient indexing, values ``{2..n}``, sentinel 0 at ``x``."""
    sub, old = induced_subposet(P, [x])
    for h in enumerate_extensions(sub):
        f = [0] * P.n
        for i, r in enumerate(h):
            f[old[i]] = r + 1
        yield tuple(f)


def recurrence_gap(P: Poset, A: Iterable[int]) -> tuple[int, int]:
    """Return ``(sum of e(P - x) over x in A, e(P))``; the first never exceeds the second."""
    A = _check_antichain(P, A)
    total = count_extensions(P)
    s = sum(count_extensions(induced_subposet(P, [x])[0]) for x in A)
    return s, total


def ranks_to_json(f: LinearExtension) -> dict:
    return {"ranks": list(f)}


def ranks_from_json(doc: dict) -> LinearExtension:
    ranks = doc["ranks"]
    if not all(isinstance(r, int) and r >= 0 for r in ranks):
        raise ContractError("ranks must be non-negative integers")
    if ranks.count(0) > 1:
        raise ContractError("at most one sentinel 0 is allowed")
    return tuple(ranks)

