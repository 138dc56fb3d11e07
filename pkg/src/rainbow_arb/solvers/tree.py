"""Instances whose colors all orient one undirected tree."""

from __future__ import annotations

from ..certificate import RainbowCertificate
from ..errors import NotUnderlyingTree, WrongColorCount
from ..instance import ColoredArc, ColoredInstance, classify_shape


def solve_tree_underlying(inst: ColoredInstance) -> RainbowCertificate:
    """Repeatedly cut a leaf of the last remaining color and keep its arc.

    Removing that leaf from every other color (by deleting the single arc
    touching it) leaves orientations of a smaller common tree.
    """
    n = inst.n
    if inst.k != n - 1:
        raise WrongColorCount(f"tree solver needs k = n - 1 = {n - 1}, got {inst.k}")
    if not classify_shape(inst).underlying_tree:
        raise NotUnderlyingTree("colors do not share one underlying tree")

    alive = set(range(1, n + 1))
    colors = list(range(1, inst.k + 1))
    par = {c: {v: p for v, p in enumerate(inst.arb(c).parents) if p} for c in colors}
    root = {c: inst.root(c) for c in colors}
    picked: list[ColoredArc] = []

    while len(alive) > 2:
        last = colors.pop()
        has_child = set(par[last].values())
        v = min(u for u in alive if u not in has_child)
        picked.append(ColoredArc(last, par[last][v], v))
        alive.discard(v)
        for c in colors:
            if root[c] == v:
                (w,) = [u for u, p in par[c].items() if p == v]
                del par[c][w]
                root[c] = w
            else:
                del par[c][v]

    (c,) = colors
    (v, p), = par[c].items()
    picked.append(ColoredArc(c, p, v))
    return RainbowCertificate.from_arcs(picked, root=root[c])
