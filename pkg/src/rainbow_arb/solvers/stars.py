"""Remove a star color together with its root, and lift solutions back."""

from __future__ import annotations

from dataclasses import dataclass

from ..certificate import RainbowCertificate, check_certificate
from ..errors import InvalidReducedCertificate, NotAStar, WrongColorCount
from ..instance import Arborescence, ColoredArc, ColoredInstance


@dataclass(frozen=True)
class LiftEntry:
    color: int  # original color id
    r_prime: int  # original vertex id
    rooted_at_r: bool
    substituted: frozenset[int]  # original heads whose arc was re-hung onto r_prime


@dataclass(frozen=True)
class LiftMap:
    r: int
    star_color: int
    reduced: ColoredInstance
    vertex_back: tuple[int, ...]  # reduced vertex -> original vertex
    entries: tuple[LiftEntry, ...]  # indexed by reduced color - 1


def star_reduce(inst: ColoredInstance, star_color: int) -> tuple[ColoredInstance, LiftMap]:
    """Delete ``star_color`` and its root ``r``; re-hang the arcs leaving ``r``.

    A color rooted at ``r`` gets its least child ``r'`` as new root and the
    other children of ``r`` become children of ``r'``. Any other color hands
    the children of ``r`` to the parent of ``r``.
    """
    n = inst.n
    if inst.k != n - 1:
        raise WrongColorCount(f"star reduction needs k = n - 1 = {n - 1}, got {inst.k}")
    if n < 3:
        raise WrongColorCount("star reduction needs n >= 3")
    if not 1 <= star_color <= inst.k or not inst.arb(star_color).is_star():
        raise NotAStar(f"color {star_color} is not a star")
    r = inst.root(star_color)
    vertex_back = (0, *[v for v in range(1, n + 1) if v != r])
    fwd = {v: i for i, v in enumerate(vertex_back) if i}

    colors, entries = [], []
    for c in range(1, inst.k + 1):
        if c == star_color:
            continue
        a = inst.arb(c)
        kids = a.children[r]
        if a.root == r:
            r_prime = min(kids)
            skip = {r, r_prime}
        else:
            r_prime = a.parents[r]
            skip = {r}
        par = [0] * n
        subst = set()
        for v in range(1, n + 1):
            if v in skip:
                continue
            p = a.parents[v]
            if p == r:
                p = r_prime
                subst.add(v)
            par[fwd[v]] = fwd[p] if p else 0
        root = r_prime if a.root == r else a.root
        colors.append(Arborescence(fwd[root], tuple(par)))
        entries.append(LiftEntry(c, r_prime, a.root == r, frozenset(subst)))
    reduced = ColoredInstance(n - 1, tuple(colors))
    return reduced, LiftMap(r, star_color, reduced, vertex_back, tuple(entries))


def star_lift(
    reduced_cert: RainbowCertificate, lift: LiftMap, inst: ColoredInstance, star_color: int
) -> RainbowCertificate:
    """Turn a rainbow spanning arborescence of the reduced instance into one of ``inst``."""
    chk = check_certificate(lift.reduced, reduced_cert)
    if not chk:
        raise InvalidReducedCertificate(f"{chk.reason}: {chk.detail}")
    if star_color != lift.star_color:
        raise ValueError("star_color does not match the lift map")
    r, vb = lift.r, lift.vertex_back
    hat: set[ColoredArc] = set()
    companions: set[ColoredArc] = set()
    for a in reduced_cert.arcs:
        entry = lift.entries[a.color - 1]
        c, t, h = entry.color, vb[a.tail], vb[a.head]
        if h not in entry.substituted:
            hat.add(ColoredArc(c, t, h))
            continue
        other = ColoredArc(c, r, entry.r_prime) if entry.rooted_at_r else ColoredArc(c, entry.r_prime, r)
        hat.add(ColoredArc(c, r, h))
        hat.add(other)
        companions.add(other)
    # |hat| == n-2 exactly when nothing was substituted; otherwise drop the companions
    arcs = hat - companions
    other_root = vb[reduced_cert.root]
    arcs.add(ColoredArc(star_color, r, other_root))
    return RainbowCertificate.from_arcs(arcs, root=r)
