"""Relaxed versions: more colors than n - 1, or a smaller target size."""

from __future__ import annotations

from ..certificate import RainbowCertificate
from ..errors import TargetTooLarge, TooFewColors, WrongColorCount
from ..instance import ColoredArc, ColoredInstance, induced
from ._tree import RainbowTree
from .multiroot import solve_two_multiroots


def maximal_rainbow(inst: ColoredInstance, start: int = 1) -> RainbowTree:
    """Inclusion-wise maximal rainbow arborescence grown greedily from ``start``."""
    return RainbowTree(inst, start).grow()


def solve_many_colors(inst: ColoredInstance, events: list | None = None) -> RainbowCertificate:
    """Rainbow spanning arborescence when ``k >= 2n - 3`` (or ``k >= 2n - 4``, ``n >= 3``).

    ``events`` (if given) receives ``("fallback", n)`` whenever a recursion
    level hands over to the two-multi-root solver.
    """
    n, k = inst.n, inst.k
    if not (k >= 2 * n - 3 or (n >= 3 and k >= 2 * n - 4)):
        raise TooFewColors(f"need k >= 2n-4 = {2 * n - 4} (n >= 3) or k >= 2n-3; got k={k}")
    return _many(inst, events)


def _many(inst: ColoredInstance, events) -> RainbowCertificate:
    n = inst.n
    if n == 2:
        return RainbowCertificate.from_arcs([inst.color_arcs(1)[0]])
    big = maximal_rainbow(inst)
    if len(big.spanned) == n:
        return big.certificate()

    rest = sorted(set(range(1, n + 1)) - big.spanned)
    J = big.unused()  # all rooted in `rest`, and closed under restriction to it
    if len(rest) >= 2:
        sub, vb, cb = induced(inst, rest, J)
        part = _many(sub, events)
        arcs = [ColoredArc(cb[a.color], vb[a.tail], vb[a.head]) for a in part.arcs]
        tree = RainbowTree(inst, vb[part.root], arcs)
    else:
        tree = RainbowTree(inst, rest[0])

    tree.grow(J)
    if len(tree.spanned) == n:
        return tree.certificate()
    # only reachable when k = 2n - 4: one vertex w is left, try the remaining colors
    tree.grow()
    if len(tree.spanned) == n:
        return tree.certificate()
    # every unused color is rooted at w and every J color at rest[0]: <= 2 multi-roots
    if inst.k != 2 * n - 4 or len(tree.spanned) != n - 1:
        raise AssertionError("extension stalled outside the k = 2n - 4 boundary case")
    if events is not None:
        events.append(("fallback", n))
    chosen = list(range(1, n))
    sub, vb, cb = induced(inst, range(1, n + 1), chosen)
    cert = solve_two_multiroots(sub)
    return RainbowCertificate.from_arcs([ColoredArc(cb[a.color], a.tail, a.head) for a in cert.arcs],
                                        root=cert.root)


def solve_two_arcs_per_color(inst: ColoredInstance) -> tuple[ColoredArc, ...]:
    """Spanning arborescence using each of ``k = n - 2`` colors at most twice."""
    n, k = inst.n, inst.k
    if n < 3 or k != n - 2:
        raise WrongColorCount(f"need n >= 3 and k = n - 2 = {n - 2}; got n={n}, k={k}")
    doubled = ColoredInstance(n, inst.colors + inst.colors)
    cert = solve_many_colors(doubled)
    return tuple(sorted(ColoredArc((a.color - 1) % k + 1, a.tail, a.head) for a in cert.arcs))


def solve_half_size(inst: ColoredInstance, k_target: int, trace: list | None = None) -> RainbowCertificate:
    """Rainbow arborescence with exactly ``k_target <= n // 2`` arcs.

    ``trace`` (if given) receives ``(|tree|, |unused colors|)`` before every
    exchange step.
    """
    n = inst.n
    if inst.k != n - 1:
        raise WrongColorCount(f"half-size solver needs k = n - 1 = {n - 1}, got {inst.k}")
    if k_target < 1:
        raise ValueError("k_target must be positive")
    if k_target > n // 2:
        raise TargetTooLarge(f"k_target={k_target} exceeds floor(n/2)={n // 2}")

    if n <= 6:
        full = solve_two_multiroots(inst)
        tree = RainbowTree(inst, full.root, full.arcs)
        tree.truncate(k_target)
        return tree.certificate()

    tree = maximal_rainbow(inst)
    while len(tree) < k_target:
        _exchange(inst, tree, trace)
        tree.grow()
    tree.truncate(k_target)
    return tree.certificate()


def _exchange(inst: ColoredInstance, tree: RainbowTree, trace):
    """Enlarge a maximal tree by one vertex via a rainbow path ending at its root."""
    rt = tree.root
    J = tree.unused()
    inside = tree.spanned
    if trace is not None:
        trace.append((len(tree), len(J)))
    if not len(J) + 1 > len(inside):
        raise AssertionError("fewer unused colors than the exchange argument requires")

    # P_i: the tail end of A_i's root->rt path, starting at its last vertex outside the tree
    P = {}
    for i in J:
        line = inst.arb(i).path_to(rt)
        start = max(idx for idx, v in enumerate(line) if v not in inside)
        P[i] = [ColoredArc(i, line[t], line[t + 1]) for t in range(start, len(line) - 1)]

    out: dict[int, ColoredArc] = {}  # in-arborescence at rt, keyed by tail
    Vp = {rt}
    outsider = None
    for i in J:
        a = min((a for a in P[i] if a.tail not in Vp and a.head in Vp), key=lambda a: (a.tail, a.head))
        out[a.tail] = a
        Vp.add(a.tail)
        if a.tail not in inside:
            outsider = a.tail
            break
    if outsider is None:
        raise AssertionError("no rainbow path from outside the tree was found")

    path = []
    v = outsider
    while v != rt:
        path.append(out[v])
        v = out[v].head
    for a in path:
        q = tree.into.pop(a.head, None)
        if q is not None:
            tree.used.discard(q.color)
    for a in path:
        tree.into[a.head] = a
        tree.used.add(a.color)
    tree.spanned.add(outsider)
    tree.root = outsider
