"""Data model for arc-colored digraphs made of spanning arborescences.

Vertices are the integers ``1..n`` and colors the integers ``1..k``. Color
``i`` is a spanning arborescence stored as a parent tuple, so the arc of
color ``i`` entering ``v`` is ``(parents[v], v)``. Arcs of different colors
may be parallel; an arc is identified by ``(color, tail, head)`` and that
triple is also the global iteration order.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    ColorNotSpanning,
    CycleInColor,
    DuplicateArc,
    MultipleIncoming,
    UnknownColor,
    UnknownVertex,
)


class ColoredArc(NamedTuple):
    color: int
    tail: int
    head: int

    def __str__(self):
        return f"({self.color}: {self.tail}->{self.head})"


@dataclass(frozen=True)
class Arborescence:
    """One color class.

    ``parents`` has length ``n + 1``; ``parents[v]`` is the parent of ``v``
    and ``parents[root] == parents[0] == 0``. The constructor trusts its
    input; use :meth:`from_parent_map` for unchecked data.
    """

    root: int
    parents: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parents) - 1

    @classmethod
    def from_parent_map(cls, n: int, parent: Mapping[int, int], color: int = 0) -> "Arborescence":
        par = [0] * (n + 1)
        for v, p in parent.items():
            if not 1 <= v <= n:
                raise UnknownVertex(v, n)
            if not 1 <= p <= n:
                raise UnknownVertex(p, n)
            if v == p:
                raise CycleInColor(color, v)
            par[v] = p
        return cls(_root_of(n, par, color), tuple(par))

    @property
    def parent(self) -> dict[int, int]:
        return {v: p for v, p in enumerate(self.parents) if p}

    def parent_of(self, v: int) -> int | None:
        return self.parents[v] or None

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        ch: list[list[int]] = [[] for _ in self.parents]
        for v, p in enumerate(self.parents):
            if p:
                ch[p].append(v)
        return tuple(tuple(c) for c in ch)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        d = [-1] * len(self.parents)
        d[self.root] = 0
        for v in range(1, len(self.parents)):
            chain = []
            u = v
            while d[u] < 0:
                chain.append(u)
                u = self.parents[u]
            for w in reversed(chain):
                d[w] = d[self.parents[w]] + 1
        return tuple(d)

    def leaves(self) -> list[int]:
        return [v for v in range(1, len(self.parents)) if not self.children[v]]

    def is_path(self) -> bool:
        return len(self.leaves()) == 1

    def is_star(self) -> bool:
        return all(p == self.root for p in self.parents[1:] if p)

    def edges(self) -> frozenset[frozenset[int]]:
        """Underlying undirected edge set."""
        return frozenset(frozenset((p, v)) for v, p in enumerate(self.parents) if p)

    def path_to(self, v: int) -> list[int]:
        """Vertices on the tree path from the root down to ``v``."""
        out = [v]
        while self.parents[out[-1]]:
            out.append(self.parents[out[-1]])
        out.reverse()
        return out


def _root_of(n, par, color):
    # cycles first: a cycle leaves the in-degree-0 count meaningless
    state = [0] * (n + 1)  # 0 new, 1 on stack, 2 done
    for v in range(1, n + 1):
        chain = []
        u = v
        while u and state[u] == 0:
            state[u] = 1
            chain.append(u)
            u = par[u]
        if u and state[u] == 1:
            raise CycleInColor(color, u)
        for w in chain:
            state[w] = 2
    roots = [v for v in range(1, n + 1) if par[v] == 0]
    if len(roots) != 1:
        raise ColorNotSpanning(color, roots)
    return roots[0]


@dataclass(frozen=True)
class ColoredInstance:
    """``k`` spanning arborescences on the common vertex set ``1..n``."""

    n: int
    colors: tuple[Arborescence, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("an instance needs n >= 2")
        if not self.colors:
            raise ValueError("an instance needs k >= 1")
        for a in self.colors:
            if a.n != self.n:
                raise ValueError("arborescence size does not match n")

    @property
    def k(self) -> int:
        return len(self.colors)

    @classmethod
    def from_parent_maps(cls, n: int, maps: Sequence[Mapping[int, int]]) -> "ColoredInstance":
        return cls(n, tuple(Arborescence.from_parent_map(n, m, i) for i, m in enumerate(maps, 1)))

    def arb(self, color: int) -> Arborescence:
        return self.colors[color - 1]

    def root(self, color: int) -> int:
        return self.colors[color - 1].root

    def roots(self) -> tuple[int, ...]:
        return tuple(a.root for a in self.colors)

    def tail_of(self, color: int, head: int) -> int | None:
        return self.colors[color - 1].parents[head] or None

    def has_arc(self, arc: ColoredArc) -> bool:
        c, t, h = arc
        if not (1 <= c <= self.k and 1 <= h <= self.n):
            return False
        return t != 0 and self.colors[c - 1].parents[h] == t

    def arc_into(self, color: int, head: int) -> ColoredArc | None:
        t = self.colors[color - 1].parents[head]
        return ColoredArc(color, t, head) if t else None

    def color_arcs(self, color: int) -> list[ColoredArc]:
        par = self.colors[color - 1].parents
        return sorted(ColoredArc(color, p, v) for v, p in enumerate(par) if p)

    def arcs(self) -> list[ColoredArc]:
        out = []
        for c in range(1, self.k + 1):
            out.extend(self.color_arcs(c))
        return out


def validate_instance(raw: Iterable[Sequence[int]], n: int, k: int) -> ColoredInstance:
    """Build a :class:`ColoredInstance` from raw ``(color, tail, head)`` triples.

    Raises the first structural violation found, with color/vertex coordinates.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 1:
        raise ValueError("k must be at least 1")
    maps: list[dict[int, int]] = [dict() for _ in range(k)]
    for c, t, h in raw:
        if not 1 <= c <= k:
            raise UnknownColor(c, k)
        for v in (t, h):
            if not 1 <= v <= n:
                raise UnknownVertex(v, n)
        if t == h:
            raise CycleInColor(c, h)
        seen = maps[c - 1].get(h)
        if seen is not None:
            if seen == t:
                raise DuplicateArc(c, h)
            raise MultipleIncoming(c, h)
        maps[c - 1][h] = t
    return ColoredInstance.from_parent_maps(n, maps)


# --- derived views -------------------------------------------------------------

@dataclass(frozen=True)
class RhoProfile:
    """``rho[v]`` is the set of colors whose arborescence is rooted at ``v``."""

    rho: Mapping[int, frozenset[int]]

    @property
    def multi_roots(self) -> list[int]:
        return [v for v, s in sorted(self.rho.items()) if len(s) >= 2]

    @property
    def non_roots(self) -> list[int]:
        return [v for v, s in sorted(self.rho.items()) if not s]

    @property
    def root_vertices(self) -> list[int]:
        return [v for v, s in sorted(self.rho.items()) if s]

    def __getitem__(self, v):
        return self.rho[v]


def rho_profile(inst: ColoredInstance) -> RhoProfile:
    acc: dict[int, set[int]] = defaultdict(set)
    for c, a in enumerate(inst.colors, 1):
        acc[a.root].add(c)
    return RhoProfile({v: frozenset(acc.get(v, ())) for v in range(1, inst.n + 1)})


@dataclass(frozen=True)
class ShapeReport:
    paths: tuple[bool, ...]
    stars: tuple[bool, ...]
    underlying_tree: bool
    multi_root_count: int

    @property
    def all_paths(self) -> bool:
        return all(self.paths)

    @property
    def all_paths_or_stars(self) -> bool:
        return all(p or s for p, s in zip(self.paths, self.stars))


def classify_shape(inst: ColoredInstance) -> ShapeReport:
    edges = {a.edges() for a in inst.colors}
    return ShapeReport(
        paths=tuple(a.is_path() for a in inst.colors),
        stars=tuple(a.is_star() for a in inst.colors),
        underlying_tree=len(edges) == 1,
        multi_root_count=len(rho_profile(inst).multi_roots),
    )


def induced(inst: ColoredInstance, vertices: Sequence[int], colors: Sequence[int]):
    """Restrict ``colors`` to ``vertices`` and relabel both to ``1..``.

    Every restricted color must still be a spanning arborescence of
    ``vertices``. Returns ``(sub, vertex_back, color_back)`` where the
    ``*_back`` tuples map new labels (index) to old labels.
    """
    vertices = sorted(vertices)
    fwd = {v: i for i, v in enumerate(vertices, 1)}
    maps = []
    for c in colors:
        par = inst.colors[c - 1].parents
        maps.append({fwd[v]: fwd[par[v]] for v in vertices if par[v] and par[v] in fwd})
    sub = ColoredInstance.from_parent_maps(len(vertices), maps)
    return sub, (0, *vertices), (0, *colors)
