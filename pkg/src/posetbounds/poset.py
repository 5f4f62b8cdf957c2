"""Finite posets on the elements ``0..n-1``.

A :class:`Poset` stores the strict order as two lists of bitmasks: ``up[u]``
has bit ``v`` set iff ``u < v`` and ``down[v]`` has bit ``u`` set iff
``u < v``. Element sets are passed around as ``frozenset`` values at the API
boundary and as ``int`` bitmasks internally.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import CycleError, PosetError, RangeError, SizeError

ElementSet = frozenset

GENERATE_ALL_MAX_N = 5


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """Immutable strict partial order on ``range(n)``.

    Build instances with :func:`from_covers` (or the helpers below it); the
    constructor trusts that ``up`` is already a transitively closed,
    acyclic relation.
    """

    n: int
    up: tuple[int, ...]
    down: tuple[int, ...] = field(repr=False, compare=False)
    covers: frozenset[tuple[int, int]] = field(repr=False, compare=False)

    @classmethod
    def _from_closure(cls, n: int, up: list[int]) -> "Poset":
        down = [0] * n
        for u in range(n):
            for v in bits(up[u]):
                down[v] |= 1 << u
        covers = set()
        for u in range(n):
            # v covers u iff nothing strictly between them
            between = 0
            for w in bits(up[u]):
                between |= up[w]
            for v in bits(up[u] & ~between):
                covers.add((u, v))
        return cls(n, tuple(up), tuple(down), frozenset(covers))

    def less(self, u: int, v: int) -> bool:
        return bool(self.up[u] >> v & 1)

    def comparable(self, u: int, v: int) -> bool:
        return bool((self.up[u] | self.down[u]) >> v & 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def relations(self) -> list[tuple[int, int]]:
        """All related pairs ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.up[u])]

    def to_json(self) -> dict:
        return {"n": self.n, "covers": [list(p) for p in sorted(self.covers)]}

    def to_text(self) -> str:
        lines = [f"n={self.n}"]
        lines.extend(f"{u}<{v}" for u, v in sorted(self.covers))
        return "\n".join(lines) + "\n"


def from_covers(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """Return the poset whose order is the transitive closure of ``pairs``.

    Pairs need not be covers; the cover relation is recomputed.

    >>> p = from_covers(3, [(0, 1), (1, 2)])
    >>> p.less(0, 2), sorted(p.covers)
    (True, [(0, 1), (1, 2)])
    """
    if n < 0:
        raise RangeError(f"element count must be non-negative, got {n}")
    adj = [0] * n
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise RangeError(f"pair ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise CycleError(f"pair ({u}, {u}) relates an element to itself")
        adj[u] |= 1 << v
    up = [0] * n
    for s in range(n):
        # iterative DFS from s
        seen = 0
        stack = [s]
        while stack:
            w = stack.pop()
            fresh = adj[w] & ~seen
            seen |= fresh
            stack.extend(bits(fresh))
        if seen >> s & 1:
            raise CycleError(f"element {s} lies on a cycle")
        up[s] = seen
    return Poset._from_closure(n, up)


def chain(n: int) -> Poset:
    return from_covers(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return from_covers(n, [])


def is_antichain(P: Poset, S: Iterable[int]) -> bool:
    m = mask_of(S)
    return all(not (P.up[x] & m) for x in bits(m))


def is_chain(P: Poset, S: Iterable[int]) -> bool:
    m = mask_of(S)
    for x in bits(m):
        others = m & ~(1 << x)
        if others & ~(P.up[x] | P.down[x]):
            return False
    return True


def maximal_elements(P: Poset) -> ElementSet:
    return frozenset(x for x in range(P.n) if not P.up[x])


def minimal_elements(P: Poset) -> ElementSet:
    return frozenset(x for x in range(P.n) if not P.down[x])


def induced_subposet(P: Poset, remove: Iterable[int] = ()) -> tuple[Poset, list[int]]:
    """Restrict ``P`` to the elements not in ``remove``.

    Returns the subposet and the map ``old[new_index]``.
    """
    rm = mask_of(remove)
    keep = [x for x in range(P.n) if not rm >> x & 1]
    where = {x: i for i, x in enumerate(keep)}
    up = [mask_of(where[v] for v in bits(P.up[x] & ~rm)) for x in keep]
    return Poset._from_closure(len(keep), up), keep


def generate_all(n: int) -> Iterator[Poset]:
    """Yield every poset on ``n`` elements whose order respects index order.

    Every finite poset is isomorphic to exactly such a labelling, so this
    covers all posets up to relabelling. Results are deduplicated.
    """
    if n > GENERATE_ALL_MAX_N:
        raise SizeError(f"generate_all is guarded at n <= {GENERATE_ALL_MAX_N}, got {n}")
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = set()
    for subset in range(1 << len(slots)):
        P = from_covers(n, [slots[b] for b in bits(subset)])
        if P.up not in seen:
            seen.add(P.up)
            yield P


def random_poset(n: int, density: float, seed: int) -> Poset:
    """Closure of independent upper-triangular edges, each kept with ``density``."""
    if not 0.0 <= density <= 1.0:
        raise RangeError(f"density must lie in [0, 1], got {density}")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return from_covers(n, pairs)


# -- file formats -----------------------------------------------------------


class ParseError(PosetError, ValueError):
    pass


def poset_from_json(doc: dict) -> Poset:
    try:
        n = doc["n"]
        pairs = [tuple(p) for p in doc.get("covers", [])]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad poset document: {exc}") from exc
    if not isinstance(n, int) or any(len(p) != 2 for p in pairs):
        raise ParseError("poset document needs an integer 'n' and [u, v] pairs")
    return from_covers(n, pairs)


def parse_text(text: str) -> Poset:
    """Parse the line format: ``u<v`` per line, optional ``n=<int>`` header."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("n="):
                n = int(line[2:])
            else:
                u, v = line.split("<")
                pairs.append((int(u), int(v)))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: cannot parse {raw!r}") from exc
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    return from_covers(n, pairs)


def load_poset(text: str, fmt: str = "auto") -> Poset:
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "text"
    if fmt == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc}") from exc
        return poset_from_json(doc)
    if fmt == "text":
        return parse_text(text)
    raise ParseError(f"unknown format {fmt!r}")
