"""Integer partitions: the container for chain and antichain parameters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ContractError


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = self.parts
        if any(x < 1 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ContractError(f"not a partition: {list(p)}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def prefix(self, k: int) -> int:
        return sum(self.parts[:k])

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def to_json(self) -> dict:
        return {"parts": list(self.parts), "n": self.n}

    @classmethod
    def from_json(cls, doc: dict) -> "Partition":
        p = cls.of(doc["parts"])
        if "n" in doc and doc["n"] != p.n:
            raise ContractError(f"parts sum to {p.n}, document says n={doc['n']}")
        return p


def conjugate(p: Partition | Iterable[int]) -> Partition:
    """Transpose of the Young diagram; zero parts are ignored.

    >>> conjugate(Partition((4, 2, 1))).parts
    (3, 2, 1, 1)
    """
    parts = [x for x in p if x > 0]
    top = max(parts, default=0)
    return Partition(tuple(sum(1 for x in parts if x >= k) for k in range(1, top + 1)))


def partitions_of(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    largest = n if largest is None else min(largest, n)

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, largest):
        yield Partition(parts)
