"""Random and exhaustive instance families for the hypothesis classes.

All randomness goes through :class:`random.Random` (MT19937). Seeds are
plain integers, and the derived per-instance seeds of a campaign come from
SHA-256, so every instance can be regenerated on any platform from the
numbers printed in a report.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .errors import InfeasibleSpec, TooLarge
from .exact import enumerate_arborescences
from .instance import Arborescence, ColoredInstance

SHAPES = ("random", "all_paths", "paths_and_stars", "two_multiroots", "underlying_tree", "shared_root")


@dataclass(frozen=True)
class GenSpec:
    n: int
    k: int
    shape: str = "random"
    seed: int = 0


def derive_seed(seed: int, index: int) -> int:
    """Portable 64-bit seed for instance ``index`` of a campaign seeded by ``seed``."""
    digest = hashlib.sha256(f"rba:{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _from_parents(root, n, parent):
    par = [0] * (n + 1)
    for v, p in parent.items():
        par[v] = p
    return Arborescence(root, tuple(par))


def random_arborescence(n: int, rng: random.Random, forced_root: int | None = None) -> Arborescence:
    """Uniform spanning arborescence on ``1..n`` (optionally with a fixed root).

    A uniform root plus a uniform spanning tree of K_n (Wilson's loop-erased
    walks) oriented away from that root is uniform over all ``n**(n-1)``
    arborescences, since each arborescence is exactly one (tree, root) pair.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    root = forced_root if forced_root is not None else rng.randint(1, n)
    if not 1 <= root <= n:
        raise ValueError(f"forced_root {root} outside 1..{n}")
    in_tree = [False] * (n + 1)
    in_tree[root] = True
    nxt = [0] * (n + 1)
    for start in range(1, n + 1):
        u = start
        while not in_tree[u]:
            w = rng.randint(1, n - 1)
            nxt[u] = w if w < u else w + 1  # uniform neighbor != u
            u = nxt[u]
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = nxt[u]
    par = list(nxt)
    par[0] = 0
    par[root] = 0
    return Arborescence(root, tuple(par))


def random_path(n: int, rng: random.Random, forced_root: int | None = None) -> Arborescence:
    order = list(range(1, n + 1))
    rng.shuffle(order)
    if forced_root is not None:
        order.remove(forced_root)
        order.insert(0, forced_root)
    return _from_parents(order[0], n, {order[i + 1]: order[i] for i in range(n - 1)})


def random_star(n: int, rng: random.Random, forced_root: int | None = None) -> Arborescence:
    root = forced_root if forced_root is not None else rng.randint(1, n)
    return _from_parents(root, n, {v: root for v in range(1, n + 1) if v != root})


def orient(tree_edges, n: int, root: int) -> Arborescence:
    """Orient an undirected spanning tree away from ``root``."""
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for u, v in tree_edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = {}
    stack = [root]
    seen = {root}
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                stack.append(w)
    return _from_parents(root, n, parent)


def _check(spec: GenSpec):
    if spec.shape not in SHAPES:
        raise InfeasibleSpec(f"unknown shape {spec.shape!r}; choose from {', '.join(SHAPES)}")
    if spec.n < 2 or spec.k < 1:
        raise InfeasibleSpec("need n >= 2 and k >= 1")
    if spec.shape == "two_multiroots" and spec.k < 4:
        raise InfeasibleSpec(
            f"two multi-roots need at least 4 colors (each needs |rho| >= 2); got k={spec.k}"
        )
    if spec.shape == "underlying_tree" and spec.k != spec.n - 1:
        raise InfeasibleSpec("underlying_tree instances use exactly k = n - 1 orientations")


def generate(spec: GenSpec) -> ColoredInstance:
    """Random instance of the requested class; deterministic in ``spec.seed``."""
    _check(spec)
    n, k = spec.n, spec.k
    rng = random.Random(spec.seed)
    if spec.shape == "random":
        colors = [random_arborescence(n, rng) for _ in range(k)]
    elif spec.shape == "all_paths":
        colors = [random_path(n, rng) for _ in range(k)]
    elif spec.shape == "paths_and_stars":
        colors = [(random_path if rng.random() < 0.5 else random_star)(n, rng) for _ in range(k)]
    elif spec.shape == "shared_root":
        r = rng.randint(1, n)
        colors = [random_arborescence(n, rng, r) for _ in range(k)]
    elif spec.shape == "two_multiroots":
        x1, x2 = rng.sample(range(1, n + 1), 2)
        split = rng.randint(2, k - 2)
        roots = [x1] * split + [x2] * (k - split)
        rng.shuffle(roots)
        colors = [random_arborescence(n, rng, r) for r in roots]
    else:  # underlying_tree
        base = random_arborescence(n, rng)
        edges = [(p, v) for v, p in enumerate(base.parents) if p]
        colors = [orient(edges, n, rng.randint(1, n)) for _ in range(k)]
    return ColoredInstance(n, tuple(colors))


def enumerate_instances(n: int, k: int, limit: int = 10**6) -> Iterator[ColoredInstance]:
    """Every k-tuple of spanning arborescences on ``1..n`` in lexicographic order."""
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    if n > 5 or (n ** (n - 1)) ** k > limit:
        raise TooLarge(f"{n}^{(n - 1) * k} instances exceed the limit of {limit}")
    arbs = tuple(enumerate_arborescences(n))
    for combo in itertools.product(arbs, repeat=k):
        yield ColoredInstance(n, combo)


def count_instances(n: int, k: int) -> int:
    return (n ** (n - 1)) ** k
