"""Exhaustive search for rainbow arborescences.

This is the ground truth the constructive solvers are checked against, so it
shares no code with them. :func:`find_rainbow` grows an arborescence from a
root one arc at a time and memoizes failed ``(spanned, used colors)``
states. Whether a partial tree can still be completed depends only on which
vertices it spans and which colors it has used, so the memo is exact.
:func:`count_rainbow_spanning` instead assigns every non-root vertex a
``(color, parent)`` pair directly. That keeps the count free of
double-counting and gives a second, independent route to existence.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .certificate import RainbowCertificate
from .errors import BudgetExhausted, TooLarge
from .instance import Arborescence, ColoredArc, ColoredInstance

_TIME_CHECK_EVERY = 256


@dataclass(frozen=True)
class SearchConfig:
    required_root: int | None = None
    target_size: int | None = None  # None means n - 1 (spanning)
    node_budget: int | None = None
    time_budget: float | None = None


@dataclass
class SearchStats:
    nodes: int = 0
    elapsed: float = 0.0


class _Budget:
    __slots__ = ("nodes", "max_nodes", "deadline", "time_budget")

    def __init__(self, cfg: SearchConfig):
        self.nodes = 0
        self.max_nodes = cfg.node_budget
        self.time_budget = cfg.time_budget
        self.deadline = None if cfg.time_budget is None else time.perf_counter() + cfg.time_budget

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhausted("nodes", self.max_nodes, self.nodes)
        if self.deadline is not None and self.nodes % _TIME_CHECK_EVERY == 0:
            if time.perf_counter() > self.deadline:
                raise BudgetExhausted("seconds", self.time_budget, self.nodes)


def _hall_ok(need: list[int], avail: list[int]) -> bool:
    """True iff every vertex in ``need`` can get its own color from ``avail``."""
    owner: dict[int, int] = {}

    def augment(i, seen):
        m = avail[i]
        while m:
            b = m & -m
            m ^= b
            if b in seen:
                continue
            seen.add(b)
            j = owner.get(b)
            if j is None or augment(j, seen):
                owner[b] = i
                return True
        return False

    for i in range(len(need)):
        if not augment(i, set()):
            return False
    return True


def find_rainbow(
    inst: ColoredInstance, cfg: SearchConfig | None = None, stats: SearchStats | None = None
) -> RainbowCertificate | None:
    """Search for a rainbow arborescence with ``cfg.target_size`` arcs.

    Returns ``None`` only after the whole search space is exhausted; a cap
    on nodes or seconds raises :class:`BudgetExhausted` instead.
    """
    cfg = cfg or SearchConfig()
    n, k = inst.n, inst.k
    target = n - 1 if cfg.target_size is None else cfg.target_size
    if not 1 <= target <= n - 1:
        raise ValueError(f"target_size must lie in 1..{n - 1}")
    if cfg.required_root is not None and not 1 <= cfg.required_root <= n:
        raise ValueError(f"required_root {cfg.required_root} outside 1..{n}")
    spanning = target == n - 1
    t0 = time.perf_counter()
    budget = _Budget(cfg)
    if target > k:
        return None

    # bit v-1 for vertex v, bit c-1 for color c
    arcs_by_color = [
        [(t - 1, h - 1) for (_, t, h) in inst.color_arcs(c)] for c in range(1, k + 1)
    ]
    in_arcs = [[] for _ in range(n)]  # head -> [(color bit, tail bit)]
    for c, arcs in enumerate(arcs_by_color):
        for t, h in arcs:
            in_arcs[h].append((1 << c, 1 << t))
    all_v = (1 << n) - 1
    failed: set[tuple[int, int]] = set()
    stack: list[ColoredArc] = []

    def completable(S: int, U: int) -> bool:
        R = S
        grew = True
        while grew:
            grew = False
            for h in range(n):
                hb = 1 << h
                if R & hb:
                    continue
                for cb, tb in in_arcs[h]:
                    if not U & cb and R & tb:
                        R |= hb
                        grew = True
                        break
        if R != all_v:
            return False
        need = [h for h in range(n) if not S >> h & 1]
        if len(need) < 2:
            return True
        avail = []
        for h in need:
            m = 0
            for cb, _ in in_arcs[h]:
                if not U & cb:
                    m |= cb
            avail.append(m)
        return _hall_ok(need, avail)

    def dfs(S: int, U: int, depth: int) -> bool:
        budget.tick()
        if depth == target:
            return True
        key = (S, U)
        if key in failed:
            return False
        if spanning and not completable(S, U):
            failed.add(key)
            return False
        for c, arcs in enumerate(arcs_by_color):
            cb = 1 << c
            if U & cb:
                continue
            for t, h in arcs:
                if S >> t & 1 and not S >> h & 1:
                    stack.append(ColoredArc(c + 1, t + 1, h + 1))
                    if dfs(S | 1 << h, U | cb, depth + 1):
                        return True
                    stack.pop()
        failed.add(key)
        return False

    roots = [cfg.required_root] if cfg.required_root is not None else range(1, n + 1)
    try:
        for r in roots:
            if dfs(1 << (r - 1), 0, 0):
                return RainbowCertificate.from_arcs(stack, root=r)
        return None
    finally:
        if stats is not None:
            stats.nodes += budget.nodes
            stats.elapsed += time.perf_counter() - t0


def count_rainbow_spanning(
    inst: ColoredInstance, node_budget: int | None = None, time_budget: float | None = None
) -> int:
    """Exact number of distinct rainbow spanning arborescences (as arc sets)."""
    n, k = inst.n, inst.k
    if k < n - 1:
        return 0
    budget = _Budget(SearchConfig(node_budget=node_budget, time_budget=time_budget))
    cands = [
        [(c, a.parents[v]) for c, a in enumerate(inst.colors) if a.parents[v]] for v in range(n + 1)
    ]
    total = 0
    for r in range(1, n + 1):
        order = [v for v in range(1, n + 1) if v != r]
        par = [0] * (n + 1)

        def rec(i: int, used: int) -> int:
            budget.tick()
            if i == len(order):
                return 1
            v = order[i]
            found = 0
            for c, t in cands[v]:
                if used >> c & 1:
                    continue
                # adding t -> v closes a cycle iff v is an ancestor of t
                u = t
                while u != r and par[u] and u != v:
                    u = par[u]
                if u == v:
                    continue
                par[v] = t
                found += rec(i + 1, used | 1 << c)
                par[v] = 0
            return found

        total += rec(0, 0)
    return total


@lru_cache(maxsize=None)
def _arborescences(n: int) -> tuple[Arborescence, ...]:
    out = []
    for r in range(1, n + 1):
        others = [v for v in range(1, n + 1) if v != r]
        choices = [[p for p in range(1, n + 1) if p != v] for v in others]
        for pick in itertools.product(*choices):
            par = [0] * (n + 1)
            for v, p in zip(others, pick):
                par[v] = p
            ok = True
            for v in others:
                steps = 0
                u = v
                while u != r and steps < n:
                    u = par[u]
                    steps += 1
                if u != r:
                    ok = False
                    break
            if ok:
                out.append(Arborescence(r, tuple(par)))
    return tuple(out)


def enumerate_arborescences(n: int) -> Iterator[Arborescence]:
    """All ``n**(n-1)`` labeled spanning arborescences on ``1..n``.

    Ordered by root, then lexicographically by the parent tuple.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > 5:
        raise TooLarge(f"enumerating arborescences is limited to n <= 5 (got {n})")
    return iter(_arborescences(n))
