"""Instances with at most two multi-roots (and hence every instance with n <= 6)."""

from __future__ import annotations

from dataclasses import dataclass

from ..certificate import RainbowCertificate
from ..errors import TooManyMultiRoots, WrongColorCount
from ..instance import ColoredArc, ColoredInstance, rho_profile
from .greedy import Seed, greedy_extend


@dataclass(frozen=True)
class DualGrowth:
    """Two arc-disjoint rainbow in-arborescences, rooted at ``x1`` and ``x2``."""

    B1: frozenset[ColoredArc]
    B2: frozenset[ColoredArc]
    V1: frozenset[int]
    V2: frozenset[int]
    x1: int
    x2: int

    def is_valid(self) -> bool:
        colors = [a.color for a in self.B1 | self.B2]
        if len(colors) != len(set(colors)) or self.B1 & self.B2:
            return False
        for B, V, x in ((self.B1, self.V1, self.x1), (self.B2, self.V2, self.x2)):
            out = {}
            for a in B:
                if a.tail in out:
                    return False
                out[a.tail] = a.head
            if x in out or set(out) | {x} != set(V) or len(B) != len(V) - 1:
                return False
            for v in V:
                steps = 0
                while v != x and steps <= len(V):
                    v = out[v]
                    steps += 1
                if v != x:
                    return False
        return True


def dual_growth(inst: ColoredInstance, x1: int, x2: int, trace: list | None = None) -> DualGrowth:
    """Grow in-arborescences at ``x1`` and ``x2`` until their vertex sets meet."""
    sides = [({}, {x1}), ({}, {x2})]  # (tail -> arc, vertex set)
    used: set[int] = set()

    def snapshot():
        return DualGrowth(
            frozenset(sides[0][0].values()), frozenset(sides[1][0].values()),
            frozenset(sides[0][1]), frozenset(sides[1][1]), x1, x2,
        )

    while not sides[0][1] & sides[1][1]:
        i = min(c for c in range(1, inst.k + 1) if c not in used)
        par = inst.arb(i).parents
        j = 0 if inst.root(i) not in sides[0][1] else 1
        out, V = sides[j]
        u, v = min((par[v], v) for v in V if par[v] and par[v] not in V)
        out[u] = ColoredArc(i, u, v)
        V.add(u)
        used.add(i)
        if trace is not None:
            trace.append(snapshot())
    return snapshot()


def _path_out(arcs: frozenset[ColoredArc], start: int, end: int) -> list[ColoredArc]:
    out = {a.tail: a for a in arcs}
    path = []
    while start != end:
        a = out[start]
        path.append(a)
        start = a.head
    return path


def solve_two_multiroots(inst: ColoredInstance, trace: list | None = None) -> RainbowCertificate:
    n = inst.n
    if inst.k != n - 1:
        raise WrongColorCount(f"two-multi-root solver needs k = n - 1 = {n - 1}, got {inst.k}")
    rho = rho_profile(inst)
    multi = rho.multi_roots
    if len(multi) > 2:
        raise TooManyMultiRoots(f"{len(multi)} multi-roots: {multi}")
    if len(multi) <= 1:
        best = max(len(s) for s in rho.rho.values())
        r = min(v for v, s in rho.rho.items() if len(s) == best)
        return greedy_extend(inst, Seed.single(r))
    x1, x2 = multi
    g = dual_growth(inst, x1, x2, trace)
    meet = min(g.V1 & g.V2)
    # the two meet->x_j paths share only `meet`, so their union is an out-arborescence
    arcs = _path_out(g.B1, meet, x1) + _path_out(g.B2, meet, x2)
    seed = Seed(frozenset(arcs), frozenset({meet, x1, x2} | {a.head for a in arcs}))
    return greedy_extend(inst, seed)
