"""Verification sweeps over instance streams.

Each poset check returns a list of failure descriptions (empty on success).
The majorization and accuracy checks do not depend on a poset and run once
per sweep.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterator, Optional

from . import bounds, gkf, linext, majorize
from .errors import ContractError, PosetError
from .partition import conjugate, partitions_of
from .poset import (
    GENERATE_ALL_MAX_N,
    Poset,
    bits,
    generate_all,
    is_antichain,
    maximal_elements,
    minimal_elements,
    random_poset,
)

POSET_CHECKS = ("bounds", "gkf-oracle", "injection", "lemma")
GLOBAL_CHECKS = ("majorize", "accuracy")
ALL_CHECKS = POSET_CHECKS + GLOBAL_CHECKS

# per-check size guards for poset instances
CHECK_MAX_N = {
    "bounds": linext.COUNT_MAX_N,
    "gkf-oracle": gkf.BRUTEFORCE_MAX_N,
    "injection": 8,
    "lemma": None,
}


def rank_blocks(P: Poset) -> list[list[int]]:
    """Antichain partition by height: block ``h`` holds elements whose longest chain below has ``h`` elements."""
    height = [0] * P.n
    for x in sorted(range(P.n), key=lambda y: bin(P.down[y]).count("1")):
        height[x] = 1 + max((height[y] for y in bits(P.down[x])), default=0)
    blocks: dict[int, list[int]] = {}
    for x, h in enumerate(height):
        blocks.setdefault(h, []).append(x)
    return [blocks[h] for h in sorted(blocks)]


def check_bounds(P: Poset) -> list[str]:
    out = []
    r = bounds.check_bounds(P)
    if not r.holds:
        out.append(f"bound violated: lower={r.lower} e={r.e} upper={r.upper}")
    if r.upper * bounds.factorial_product(r.c) != factorial(P.n):
        out.append("upper * prod c_i! != n!")
    if P.n:
        rb = rank_blocks(P)
        b = bounds.antichain_partition_bound(P, rb)
        if not b <= r.e or not b <= r.lower:
            out.append(f"antichain partition bound {b} exceeds e={r.e} or lower={r.lower}")
        d = bounds.chain_partition_bound(P, bounds.greedy_chain_partition(P))
        if d < r.upper:
            out.append(f"greedy chain partition bound {d} below GKF upper {r.upper}")
    return out


def check_gkf_oracle(P: Poset) -> list[str]:
    out = []
    c, a = gkf.chain_params(P), gkf.antichain_params(P)
    cb, ab = gkf.chain_params_bruteforce(P), gkf.antichain_params_bruteforce(P)
    if c != cb:
        out.append(f"chain params flow={list(c)} brute={list(cb)}")
    if a != ab:
        out.append(f"antichain params conjugate={list(a)} brute={list(ab)}")
    if c.n != P.n or a.n != P.n:
        out.append("parameters do not sum to n")
    if P.n and c.parts[0] != gkf.longest_chain(P):
        out.append(f"c_1={c.parts[0]} but longest chain is {gkf.longest_chain(P)}")
    if P.n:
        width = max(len(S) for S in _all_antichains(P))
        if a.parts[0] != width:
            out.append(f"a_1={a.parts[0]} but widest antichain has {width}")
    return out


def _all_antichains(P: Poset) -> Iterator[list[int]]:
    for m in range(1 << P.n):
        S = list(bits(m))
        if is_antichain(P, S):
            yield S


def injection_failures(P: Poset, A) -> list[str]:
    """Injectivity, round trip and image count of the greedy injection for antichain ``A``."""
    out = []
    A = sorted(A)
    images = {}
    for x in A:
        for f in linext.extensions_without(P, x):
            g = linext.greedy_inject(P, A, x, f)
            if not linext.is_extension(P, g):
                out.append(f"image of x={x}, f={list(f)} is not an extension")
            if g in images:
                out.append(f"collision: {images[g]} and {(x, list(f))} both map to {list(g)}")
            images[g] = (x, list(f))
            if linext.greedy_recover(P, A, g) != (x, f):
                out.append(f"round trip failed for x={x}, f={list(f)}")
    present = 0
    for g in linext.enumerate_extensions(P):
        chain = linext.greedy_increasing_chain(P, g)
        if not _is_maximal_chain(P, chain):
            out.append(f"increasing chain {chain} of {list(g)} is not maximal")
        if linext.greedy_recover(P, A, g) is not None:
            present += 1
    s, e = linext.recurrence_gap(P, A)
    if present != s:
        out.append(f"{present} recoverable extensions but sum e(P-x) = {s}")
    if s > e:
        out.append(f"sum e(P-x) = {s} exceeds e(P) = {e}")
    return out


def _is_maximal_chain(P: Poset, chain: list[int]) -> bool:
    if P.down[chain[0]] or P.up[chain[-1]]:
        return False
    return all((u, v) in P.covers for u, v in zip(chain, chain[1:]))


def check_injection(P: Poset) -> list[str]:
    if P.n == 0:
        return []
    A = maximal_elements(P)
    out = injection_failures(P, A)
    s, e = linext.recurrence_gap(P, A)
    if s != e:
        out.append(f"maximal antichain: sum e(P-x) = {s} != e(P) = {e}")
    for B in [minimal_elements(P), *map(frozenset, rank_blocks(P))]:
        if B != A:
            out.extend(injection_failures(P, B))
    return out


def check_lemma(P: Poset) -> list[str]:
    if P.n == 0:
        return []
    try:
        order = gkf.order_maximal_antichain(P)
    except PosetError as exc:
        return [f"order_maximal_antichain raised {type(exc).__name__}: {exc}"]
    if not gkf.verify_ordering(P, order):
        return [f"ordering {order} fails verification"]
    return []


POSET_CHECK_FUNCS: dict[str, Callable[[Poset], list[str]]] = {
    "bounds": check_bounds,
    "gkf-oracle": check_gkf_oracle,
    "injection": check_injection,
    "lemma": check_lemma,
}


# -- poset-free sweeps ------------------------------------------------------


def sweep_majorize(max_elem: int = 5, max_size: int = 4) -> tuple[int, list[str]]:
    """Karamata (factorial), union equivalence and the decrement exchange, exhaustively."""
    out = []
    cases = 0
    pool = list(majorize.multisets(max_elem, max_size))
    by_sum: dict[int, list] = {}
    for X in pool:
        by_sum.setdefault(sum(X), []).append(X)
    for X in pool:
        for Y in by_sum[sum(X)]:
            if majorize.majorizes(X, Y):
                cases += 1
                if not majorize.karamata_factorial_check(X, Y):
                    out.append(f"karamata: {X} > {Y} but factorial products disagree")
    # union equivalence: all (X, Y) with equal sum, Z over the whole pool
    for group in by_sum.values():
        for X in group:
            for Y in group:
                for Z in pool:
                    cases += 1
                    if not majorize.union_equivalence(X, Y, Z):
                        out.append(f"union equivalence fails for X={X}, Y={Y}, Z={Z}")
    for X in pool:
        if sum(X) == 0:
            continue
        top = X[0]
        for Y in majorize.partitions_with_cap(sum(X) - 1, top):
            L = max(len(X), len(Y))
            px = majorize._prefixes(X, L)
            py = majorize._prefixes(Y, L)
            if not all(a >= b >= a - 1 for a, b in zip(px, py)):
                continue
            for m in range(1, majorize.divergence_index(X, Y) + 1):
                cases += 1
                if not majorize.proposition2_check(X, Y, m):
                    out.append(f"proposition 2 fails for X={X}, Y={Y}, m={m}")
    return cases, out


def sweep_accuracy(max_n: int = 20) -> tuple[int, list[str]]:
    out = []
    cases = 0
    for n in range(1, max_n + 1):
        for a in partitions_of(n):
            cases += 1
            lhs, rhs, ok = bounds.accuracy_check(a)
            if not ok:
                out.append(f"accuracy fails for a={list(a)}: {lhs} < {rhs}")
            if not bounds.power_identity_check(a):
                out.append(f"power identity fails for a={list(a)}")
            if conjugate(conjugate(a)) != a:
                out.append(f"conjugation not involutive on {list(a)}")
    if not bounds.stirling_floor_check(1000):
        out.append("a! >= ((a+1)/e)^a failed for some a <= 1000")
    return cases, out


GLOBAL_CHECK_FUNCS = {"majorize": sweep_majorize, "accuracy": sweep_accuracy}


# -- configuration and driver -----------------------------------------------


@dataclass
class VerifyConfig:
    mode: str = "exhaustive"
    n_lo: int = 1
    n_hi: int = 5
    count: int = 200
    densities: tuple[float, ...] = (0.3,)
    seed: Optional[int] = 0
    checks: tuple[str, ...] = ALL_CHECKS
    jobs: int = 1
    poset: Optional[Poset] = field(default=None, repr=False)

    def validate(self) -> None:
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ContractError(f"unknown checks: {sorted(unknown)}")
        if self.n_lo < 0 or self.n_hi < self.n_lo:
            raise ContractError(f"bad n range {self.n_lo}..{self.n_hi}")
        if self.poset is None:
            if self.mode == "exhaustive":
                if self.n_hi > GENERATE_ALL_MAX_N:
                    raise ContractError(f"exhaustive mode requires n <= {GENERATE_ALL_MAX_N}")
            elif self.mode == "random":
                if self.count < 1:
                    raise ContractError("random mode requires count >= 1")
                if self.seed is None:
                    raise ContractError("random mode requires a seed")
                if any(not 0 <= d <= 1 for d in self.densities):
                    raise ContractError("densities must lie in [0, 1]")
            else:
                raise ContractError(f"unknown mode {self.mode!r}")
        top = self.poset.n if self.poset is not None else self.n_hi
        for name in self.checks:
            guard = CHECK_MAX_N.get(name)
            if guard is not None and top > guard:
                raise ContractError(f"check {name!r} is guarded at n <= {guard}, got n={top}")

    def to_json(self) -> dict:
        doc = {"mode": "input" if self.poset is not None else self.mode, "checks": list(self.checks)}
        if self.poset is None:
            doc["n"] = [self.n_lo, self.n_hi]
            if self.mode == "random":
                doc.update(count=self.count, densities=list(self.densities), seed=self.seed)
        return doc


def random_instance(cfg: VerifyConfig, i: int) -> Poset:
    span = cfg.n_hi - cfg.n_lo + 1
    n = cfg.n_lo + i % span
    density = cfg.densities[(i // span) % len(cfg.densities)]
    return random_poset(n, density, cfg.seed + i)


def instances(cfg: VerifyConfig) -> Iterator[Poset]:
    if cfg.poset is not None:
        yield cfg.poset
    elif cfg.mode == "exhaustive":
        for n in range(cfg.n_lo, cfg.n_hi + 1):
            yield from generate_all(n)
    else:
        for i in range(cfg.count):
            yield random_instance(cfg, i)


def _run_one(args: tuple[Poset, tuple[str, ...]]) -> list[tuple[str, str]]:
    P, checks = args
    out = []
    for name in checks:
        try:
            problems = POSET_CHECK_FUNCS[name](P)
        except PosetError as exc:
            problems = [f"{type(exc).__name__}: {exc}"]
        out.extend((name, p) for p in problems)
    return out


def run_verify(cfg: VerifyConfig, timing: bool = False) -> dict:
    cfg.validate()
    start = time.perf_counter()
    poset_checks = tuple(c for c in cfg.checks if c in POSET_CHECKS)
    failures = []
    tested = 0
    if poset_checks:
        work = ((P, poset_checks) for P in instances(cfg))
        if cfg.jobs > 1:
            with ProcessPoolExecutor(cfg.jobs) as pool:
                items = list(work)
                results = pool.map(_run_one, items, chunksize=16)
                paired = zip((P for P, _ in items), results)
                collected = list(paired)
        else:
            collected = ((P, _run_one((P, poset_checks))) for P, _ in work)
        for i, (P, probs) in enumerate(collected):
            tested += 1
            for name, detail in probs:
                failures.append({"check": name, "instance": i, "poset": P.to_json(), "detail": detail})
    global_cases = {}
    for name in cfg.checks:
        if name in GLOBAL_CHECKS:
            cases, probs = GLOBAL_CHECK_FUNCS[name]()
            global_cases[name] = cases
            failures.extend({"check": name, "detail": p} for p in probs)
    summary = {
        "config": cfg.to_json(),
        "instances": tested,
        "global_cases": global_cases,
        "failures": failures,
        "passed": not failures,
    }
    if timing:
        summary["wall_time"] = round(time.perf_counter() - start, 3)
    return summary

