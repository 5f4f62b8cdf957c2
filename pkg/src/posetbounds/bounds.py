"""The two-sided factorial bounds on e(P) and the accuracy inequality."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lgamma, log, prod
from typing import Iterable, Sequence

from .errors import ContractError
from .gkf import antichain_params, chain_params
from .linext import count_extensions
from .majorize import factorial_product
from .partition import Partition, conjugate
from .poset import Poset, bits, is_antichain, is_chain, mask_of

ACCURACY_TOL = 1e-9

__all__ = [
    "BoundsReport",
    "accuracy_check",
    "antichain_partition_bound",
    "chain_partition_bound",
    "check_bounds",
    "conjugate",
    "greedy_chain_partition",
    "harmonic",
    "lower_bound",
    "power_form_check",
    "power_identity_check",
    "stirling_floor_check",
    "upper_bound",
]


def lower_bound(a: Iterable[int]) -> int:
    return factorial_product(a)


def upper_bound(n: int, c: Iterable[int]) -> int:
    """Multinomial coefficient ``n! / prod(c_i!)``."""
    c = list(c)
    if sum(c) != n:
        raise ContractError(f"parts {c} sum to {sum(c)}, not {n}")
    denom = factorial_product(c)
    q, r = divmod(factorial(n), denom)
    assert r == 0, "multinomial division must be exact"
    return q


def round12(x: float) -> float:
    return float(f"{x:.12g}")


@dataclass(frozen=True)
class BoundsReport:
    n: int
    a: Partition
    c: Partition
    lower: int
    e: int
    upper: int
    holds: bool
    log_ratio: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": list(self.a.parts),
            "c": list(self.c.parts),
            "lower": self.lower,
            "e": self.e,
            "upper": self.upper,
            "holds": self.holds,
            "log_ratio": round12(self.log_ratio),
        }


def check_bounds(P: Poset) -> BoundsReport:
    a = antichain_params(P)
    c = chain_params(P)
    e = count_extensions(P)
    lo = lower_bound(a)
    hi = upper_bound(P.n, c)
    return BoundsReport(
        n=P.n,
        a=a,
        c=c,
        lower=lo,
        e=e,
        upper=hi,
        holds=lo <= e <= hi,
        log_ratio=log(hi) - log(lo),
    )


def antichain_partition_bound(P: Poset, blocks: Sequence[Iterable[int]]) -> int:
    """``prod |B_i|!`` for a partition of ``P`` into antichains ``B_i``."""
    masks = [mask_of(b) for b in blocks]
    seen = 0
    for b, m in zip(blocks, masks):
        if m & seen:
            raise ContractError("blocks overlap")
        if not is_antichain(P, bits(m)):
            raise ContractError(f"block {sorted(bits(m))} is not an antichain")
        seen |= m
    if seen != P.full_mask:
        raise ContractError("blocks do not cover the poset")
    return factorial_product(bin(m).count("1") for m in masks)


def chain_partition_bound(P: Poset, blocks: Sequence[Iterable[int]]) -> int:
    """``n! / prod |C_i|!`` for a partition of ``P`` into chains ``C_i``."""
    masks = [mask_of(b) for b in blocks]
    seen = 0
    for m in masks:
        if m & seen or not is_chain(P, bits(m)):
            raise ContractError("blocks are not disjoint chains")
        seen |= m
    if seen != P.full_mask:
        raise ContractError("blocks do not cover the poset")
    return upper_bound(P.n, [bin(m).count("1") for m in masks])


def greedy_chain_partition(P: Poset, order: Sequence[int] | None = None) -> list[list[int]]:
    """Partition into chains by appending each element to the first chain it extends.

    Elements are visited in a linear-extension-compatible order, so an
    element extends a chain iff it lies above that chain's top.
    """
    if order is None:
        order = sorted(range(P.n), key=lambda x: (bin(P.down[x]).count("1"), x))
    chains: list[list[int]] = []
    for x in order:
        for ch in chains:
            if P.less(ch[-1], x):
                ch.append(x)
                break
        else:
            chains.append([x])
    return chains


def harmonic(n: int) -> Fraction:
    if n < 1:
        raise ContractError(f"harmonic number needs n >= 1, got {n}")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def log_fraction(q: Fraction) -> float:
    return log(q.numerator) - log(q.denominator)


def accuracy_rhs_log(n: int) -> float:
    """``n (ln n - 1 - ln H_n)``, the log of ``(n / (e H_n))^n``."""
    return n * (log(n) - 1 - log_fraction(harmonic(n)))


def accuracy_check(a: Iterable[int]) -> tuple[float, float, bool]:
    """Compare ``ln(prod a_i! prod c_i!)`` with ``n (ln n - 1 - ln H_n)``, ``c`` the conjugate."""
    a = [x for x in a if x]
    n = sum(a)
    c = conjugate(a)
    lhs = log(factorial_product(a) * factorial_product(c))
    rhs = accuracy_rhs_log(n)
    return lhs, rhs, lhs >= rhs - ACCURACY_TOL


def power_identity_check(a: Iterable[int]) -> bool:
    """Exact check of ``prod c_i! == prod_k k**a_k`` for ``c`` conjugate to ``a``."""
    p = Partition(tuple(x for x in a if x))
    c = conjugate(p)
    return factorial_product(c) == prod(k**ak for k, ak in enumerate(p.parts, 1))


def power_form_check(seq: Sequence[int]) -> tuple[float, float, bool]:
    """``prod_k k**s_k * s_k! >= (n / (e H_n))**n`` for any non-negative ``s`` summing to ``n``.

    ``s`` need not be sorted; position ``k`` (1-based) carries the weight ``k``.
    """
    if any(x < 0 for x in seq):
        raise ContractError("entries must be non-negative")
    n = sum(seq)
    lhs = log(prod(k**sk * factorial(sk) for k, sk in enumerate(seq, 1)))
    rhs = accuracy_rhs_log(n)
    return lhs, rhs, lhs >= rhs - ACCURACY_TOL


def stirling_floor_check(a_max: int) -> bool:
    """``ln a! >= a (ln(a + 1) - 1)`` for every ``0 <= a <= a_max``."""
    return all(lgamma(a + 1) >= a * (log(a + 1) - 1) - ACCURACY_TOL for a in range(a_max + 1))
