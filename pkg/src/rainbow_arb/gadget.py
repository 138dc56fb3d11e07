"""Reduction from 3-dimensional matching to the fixed-root rainbow problem.

Each hyperedge ``H = (x, y, z)`` becomes a four-arc path
``s -> a -> b -> c -> t`` whose arcs carry the colors of ``x``, ``y``, ``z``
and a private color for ``(H, copy)``. ``p`` copies of this bundle are
chained end to end, and a sink ``t`` plus filler stars make every color a
spanning arborescence. A rainbow spanning arborescence rooted at the first
junction exists exactly when the hypergraph has a perfect matching.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .certificate import RainbowCertificate
from .errors import InvalidHypergraph, NotAPerfectMatching, NotRootedAtS1, PathNotFound
from .instance import Arborescence, ColoredArc, ColoredInstance

Triple = tuple[int, int, int]
PARTS = "XYZ"


@dataclass(frozen=True)
class ThreeDMInstance:
    p: int
    edges: tuple[Triple, ...]

    def __post_init__(self):
        if self.p < 1:
            raise InvalidHypergraph("part size p must be at least 1")
        if not self.edges:
            raise InvalidHypergraph("at least one hyperedge is required")
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        for e in self.edges:
            if len(e) != 3 or not all(1 <= x <= self.p for x in e):
                raise InvalidHypergraph(f"hyperedge {e} needs one element of 1..{self.p} per part")

    @property
    def q(self) -> int:
        return len(self.edges)


def is_perfect_matching(h: ThreeDMInstance, triples) -> bool:
    triples = [tuple(t) for t in triples]
    if len(triples) != h.p:
        return False
    pool = list(h.edges)
    for t in triples:
        if t not in pool:
            return False
        pool.remove(t)
    return all(len({t[i] for t in triples}) == h.p for i in range(3))


def perfect_matchings(h: ThreeDMInstance) -> list[tuple[Triple, ...]]:
    """Brute force: every p-subset of hyperedges (by position) that is disjoint."""
    out = []
    for combo in itertools.combinations(range(h.q), h.p):
        ts = [h.edges[i] for i in combo]
        if all(len({t[i] for t in ts}) == h.p for i in range(3)):
            out.append(tuple(ts))
    return out


def random_3dm(p: int, q: int, rng: random.Random) -> ThreeDMInstance:
    """``q`` hyperedges drawn independently and uniformly from X x Y x Z."""
    return ThreeDMInstance(p, tuple(tuple(rng.randint(1, p) for _ in range(3)) for _ in range(q)))


@dataclass(frozen=True)
class GadgetLayout:
    p: int
    edges: tuple[Triple, ...]
    vertex_names: tuple[str, ...]  # index 0 unused
    color_names: tuple[str, ...]  # index 0 unused

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def n(self) -> int:
        return len(self.vertex_names) - 1

    @property
    def k(self) -> int:
        return len(self.color_names) - 1

    # vertex indices; junction(0) is s_1 and junction(j) is t_j = s_{j+1}
    def junction(self, j: int) -> int:
        return 1 if j == 0 else 1 + j * (3 * self.q + 1)

    def internal(self, j: int, h: int, pos: int) -> int:
        """Vertex after the ``pos``-th arc of hyperedge ``h`` (0-based) in copy ``j``."""
        return self.junction(j - 1) + 3 * h + pos

    @property
    def root(self) -> int:
        return 1

    @property
    def t_p(self) -> int:
        return self.junction(self.p)

    @property
    def sink(self) -> int:
        return self.n

    # color indices
    def part_color(self, part: int, x: int) -> int:
        return 1 + part * self.p + (x - 1)

    def edge_color(self, h: int, j: int) -> int:
        return 1 + 3 * self.p + (j - 1) * self.q + h

    def star_color(self, s: int) -> int:
        return 1 + 3 * self.p + self.p * self.q + (s - 1)

    @property
    def star_count(self) -> int:
        return 2 * self.p * self.q - 2 * self.p + 1

    def locate(self, v: int):
        """``("junction", j)``, ``("internal", j, h, pos)`` or ``("sink",)``."""
        if v == self.sink:
            return ("sink",)
        off = v - 1
        block = 3 * self.q + 1
        j, rem = divmod(off, block)
        if rem == 0:
            return ("junction", j)
        h, pos = divmod(rem - 1, 3)
        return ("internal", j + 1, h, pos + 1)


def _layout(h: ThreeDMInstance) -> GadgetLayout:
    p, q = h.p, h.q
    vnames = ["", "s1"]
    for j in range(1, p + 1):
        for e in range(q):
            vnames.extend(f"u{j}.{e + 1}.{pos}" for pos in (1, 2, 3))
        vnames.append(f"t{j}")
    vnames.append("t")
    cnames = [""]
    cnames += [f"c{part}{x}" for part in PARTS for x in range(1, p + 1)]
    cnames += [f"cH{e + 1}.{j}" for j in range(1, p + 1) for e in range(q)]
    cnames += [f"star_{s}" for s in range(1, 2 * p * q - 2 * p + 2)]
    return GadgetLayout(p, h.edges, tuple(vnames), tuple(cnames))


def build_gadget(h: ThreeDMInstance) -> tuple[ColoredInstance, GadgetLayout, int]:
    """Return ``(instance, layout, root)``; the instance has ``3pq + p + 2`` vertices."""
    lay = _layout(h)
    n, k, p, q = lay.n, lay.k, lay.p, lay.q
    par = [[0] * (n + 1) for _ in range(k + 1)]
    for j in range(1, p + 1):
        for e, triple in enumerate(h.edges):
            chain = [lay.junction(j - 1)] + [lay.internal(j, e, pos) for pos in (1, 2, 3)]
            for part in range(3):
                par[lay.part_color(part, triple[part])][chain[part + 1]] = chain[part]
            par[lay.edge_color(e, j)][lay.junction(j)] = chain[3]

    tp, t = lay.t_p, lay.sink
    colors = []
    for c in range(1, k + 1):
        root = t if 3 * p < c <= 3 * p + p * q else tp
        row = par[c]
        for v in range(1, n + 1):
            if v != root and not row[v]:
                row[v] = root
        colors.append(Arborescence(root, tuple(row)))
    return ColoredInstance(n, tuple(colors)), lay, lay.root


def encode_matching(matching, layout: GadgetLayout) -> RainbowCertificate:
    """Witness arborescence rooted at ``s_1`` for a perfect matching (``H_j`` used in copy ``j``)."""
    h = ThreeDMInstance(layout.p, layout.edges)
    matching = [tuple(m) for m in matching]
    if not is_perfect_matching(h, matching):
        raise NotAPerfectMatching(f"{matching} is not a perfect matching")
    arcs = []
    for j, triple in enumerate(matching, 1):
        e = layout.edges.index(triple)
        chain = [layout.junction(j - 1)] + [layout.internal(j, e, pos) for pos in (1, 2, 3)]
        for part in range(3):
            arcs.append(ColoredArc(layout.part_color(part, triple[part]), chain[part], chain[part + 1]))
        arcs.append(ColoredArc(layout.edge_color(e, j), chain[3], layout.junction(j)))
    arcs.append(ColoredArc(layout.star_color(1), layout.t_p, layout.sink))

    used = {a.color for a in arcs}
    spanned = {layout.root} | {a.head for a in arcs}
    todo = [v for v in range(1, layout.n + 1) if v not in spanned]
    spare = [layout.star_color(s) for s in range(2, layout.star_count + 1)]
    spare += [c for c in range(3 * layout.p + 1, 3 * layout.p + layout.p * layout.q + 1) if c not in used]
    assert len(todo) == len(spare)
    for v, c in zip(todo, spare):
        tail = layout.sink if c < layout.star_color(1) else layout.t_p
        arcs.append(ColoredArc(c, tail, v))
    return RainbowCertificate.from_arcs(arcs, root=layout.root)


def decode_matching(cert: RainbowCertificate, layout: GadgetLayout) -> list[Triple]:
    """Read the hyperedges ``[H_1, ..., H_p]`` off the ``s_1``-``t_p`` path of ``cert``."""
    if cert.root != layout.root:
        raise NotRootedAtS1(f"certificate is rooted at {cert.root}, not s_1 = {layout.root}")
    parent = cert.parent_map()
    line = [layout.t_p]
    while line[-1] != layout.root:
        if line[-1] not in parent or len(line) > layout.n:
            raise PathNotFound("no s_1 -> t_p path in the certificate")
        line.append(parent[line[-1]])
    line.reverse()
    if len(line) != 4 * layout.p + 1:
        raise PathNotFound("s_1 -> t_p path has the wrong length")
    out = []
    for j in range(1, layout.p + 1):
        seg = line[4 * (j - 1): 4 * j + 1]
        if seg[0] != layout.junction(j - 1) or seg[4] != layout.junction(j):
            raise PathNotFound(f"segment {j} does not connect consecutive junctions")
        spots = [layout.locate(v) for v in seg[1:4]]
        if any(s[0] != "internal" for s in spots):
            raise PathNotFound(f"segment {j} leaves the path bundle")
        hs = {s[2] for s in spots if s[0] == "internal" and s[1] == j}
        if len(hs) != 1 or [s[3] for s in spots] != [1, 2, 3]:
            raise PathNotFound(f"segment {j} is not a hyperedge path")
        out.append(layout.edges[hs.pop()])
    return out
