"""Solvers for instances whose colors are all paths, or paths and stars."""

from __future__ import annotations

from dataclasses import dataclass

from ..certificate import RainbowCertificate
from ..errors import NotAllPaths, ShapeViolation, WrongColorCount
from ..instance import ColoredArc, ColoredInstance
from .stars import star_lift, star_reduce


@dataclass(frozen=True)
class SelectionState:
    """One arc per color, every vertex but ``r`` entered exactly once."""

    S: frozenset[ColoredArc]
    r: int
    potential: int

    def cycles(self) -> list[list[int]]:
        """Directed cycles of ``S``, each listed from its least vertex."""
        par = {a.head: a.tail for a in self.S}
        state: dict[int, int] = {}
        out = []
        for v in sorted(par):
            chain = []
            u = v
            while u in par and u not in state:
                state[u] = 1
                chain.append(u)
                u = par[u]
            if u in par and state.get(u) == 1:
                cyc = chain[chain.index(u):]
                cyc.reverse()  # follow arcs forward: tail before head
                i = cyc.index(min(cyc))
                out.append(cyc[i:] + cyc[:i])
            for w in chain:
                state[w] = 2
        return out


def _potential(inst: ColoredInstance, S, r) -> int:
    return sum(inst.arb(a.color).depth[a.head] - inst.arb(a.color).depth[r] for a in S)


def selection_conditions_hold(inst: ColoredInstance, st: SelectionState) -> bool:
    """One arc per color, distinct heads avoiding ``r``, and every arc taken from the part of its path below ``r``."""
    if sorted(a.color for a in st.S) != list(range(1, inst.k + 1)):
        return False
    heads = [a.head for a in st.S]
    if len(set(heads)) != len(heads) or st.r in heads or len(heads) != inst.n - 1:
        return False
    for a in st.S:
        arb = inst.arb(a.color)
        if arb.parents[a.head] != a.tail:
            return False
        # the arc must lie on the path below r
        if arb.depth[a.tail] < arb.depth[st.r]:
            return False
    return True


def path_repair_states(inst: ColoredInstance) -> list[SelectionState]:
    """Initial selection followed by the state after every cycle-repair round.

    Each round re-hangs one cycle: every cycle arc ``(u, w)`` of color ``i``
    is replaced by the arc of color ``i`` entering ``u``.
    """
    n = inst.n
    if inst.k != n - 1:
        raise WrongColorCount(f"all-paths solver needs k = n - 1 = {n - 1}, got {inst.k}")
    if not all(a.is_path() for a in inst.colors):
        raise NotAllPaths("every color must be a path")

    covered: set[int] = set()
    S = []
    for c, arb in enumerate(inst.colors, 1):
        (leaf,) = arb.leaves()
        line = arb.path_to(leaf)
        v = next(u for u in reversed(line) if u not in covered)
        S.append(ColoredArc(c, arb.parents[v], v))
        covered.add(v)
    (r,) = set(range(1, n + 1)) - covered
    states = [SelectionState(frozenset(S), r, _potential(inst, S, r))]

    while True:
        cur = states[-1]
        cyc = cur.cycles()
        if not cyc:
            return states
        cycle = cyc[0]
        by_tail = {a.tail: a for a in cur.S if a.head in set(cycle)}
        new = set(cur.S)
        for u in cycle:
            a = by_tail[u]
            new.discard(a)
            new.add(ColoredArc(a.color, inst.arb(a.color).parents[u], u))
        nxt = SelectionState(frozenset(new), r, _potential(inst, new, r))
        if nxt.potential >= cur.potential:
            raise AssertionError("cycle repair did not decrease the potential")
        states.append(nxt)


def solve_all_paths(inst: ColoredInstance) -> RainbowCertificate:
    final = path_repair_states(inst)[-1]
    return RainbowCertificate.from_arcs(final.S, root=final.r)


def solve_paths_and_stars(inst: ColoredInstance) -> RainbowCertificate:
    """Peel off star colors one at a time, then solve the remaining all-paths instance."""
    n = inst.n
    if inst.k != n - 1:
        raise WrongColorCount(f"paths/stars solver needs k = n - 1 = {n - 1}, got {inst.k}")
    paths = [a.is_path() for a in inst.colors]
    stars = [a.is_star() for a in inst.colors]
    if not all(p or s for p, s in zip(paths, stars)):
        raise ShapeViolation("every color must be a path or a star")
    if all(paths):
        return solve_all_paths(inst)
    star = stars.index(True) + 1
    reduced, lift = star_reduce(inst, star)
    return star_lift(solve_paths_and_stars(reduced), lift, inst, star)
