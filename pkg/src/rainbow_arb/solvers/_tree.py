"""Mutable rainbow arborescence used while a constructive solver runs."""

from __future__ import annotations

from typing import Iterable

from ..certificate import RainbowCertificate
from ..instance import ColoredArc, ColoredInstance


class RainbowTree:
    def __init__(self, inst: ColoredInstance, root: int, arcs: Iterable[ColoredArc] = ()):
        self.inst = inst
        self.root = root
        self.into: dict[int, ColoredArc] = {}
        self.spanned: set[int] = {root}
        self.used: set[int] = set()
        pending = list(arcs)
        for a in pending:
            self.into[a.head] = a
            self.spanned.update((a.tail, a.head))
            self.used.add(a.color)

    def __len__(self):
        return len(self.into)

    def add(self, arc: ColoredArc):
        assert arc.tail in self.spanned and arc.head not in self.spanned, arc
        assert arc.color not in self.used, arc
        self.into[arc.head] = arc
        self.spanned.add(arc.head)
        self.used.add(arc.color)

    def crossing_arc(self, color: int) -> ColoredArc | None:
        """Least arc of ``color`` leaving the spanned set, if any."""
        par = self.inst.colors[color - 1].parents
        best = None
        for h in range(1, self.inst.n + 1):
            t = par[h]
            if t and h not in self.spanned and t in self.spanned:
                if best is None or (t, h) < best:
                    best = (t, h)
        return None if best is None else ColoredArc(color, *best)

    def grow(self, colors: Iterable[int] | None = None) -> "RainbowTree":
        """Add crossing arcs, least unused color first, until none is left."""
        allowed = sorted(colors) if colors is not None else range(1, self.inst.k + 1)
        progress = True
        while progress and len(self.spanned) < self.inst.n:
            progress = False
            for c in allowed:
                if c in self.used:
                    continue
                arc = self.crossing_arc(c)
                if arc is not None:
                    self.add(arc)
                    progress = True
                    break
        return self

    def unused(self) -> list[int]:
        return [c for c in range(1, self.inst.k + 1) if c not in self.used]

    def children(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in self.spanned}
        for a in self.into.values():
            out[a.tail].append(a.head)
        return out

    def truncate(self, size: int):
        """Drop arcs into leaves (least leaf first) until ``size`` arcs remain."""
        while len(self.into) > size:
            ch = self.children()
            leaf = min(v for v in self.spanned if v != self.root and not ch[v])
            arc = self.into.pop(leaf)
            self.spanned.discard(leaf)
            self.used.discard(arc.color)

    def certificate(self) -> RainbowCertificate:
        return RainbowCertificate(frozenset(self.into.values()), self.root, frozenset(self.spanned))
