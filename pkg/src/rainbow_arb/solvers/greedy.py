"""Extend a rainbow arborescence covering every multi-root to a spanning one."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..certificate import RainbowCertificate, check_certificate
from ..errors import NotRainbowSeed, SeedMissingMultiRoot, WrongColorCount
from ..instance import ColoredArc, ColoredInstance, rho_profile
from ._tree import RainbowTree


@dataclass(frozen=True)
class Seed:
    arcs: frozenset[ColoredArc]
    spanned: frozenset[int]

    @classmethod
    def single(cls, v: int) -> "Seed":
        return cls(frozenset(), frozenset({v}))

    @classmethod
    def from_arcs(cls, arcs: Iterable[ColoredArc]) -> "Seed":
        cert = RainbowCertificate.from_arcs(arcs)
        return cls(cert.arcs, cert.spanned)

    def certificate(self) -> RainbowCertificate:
        if not self.arcs:
            if len(self.spanned) != 1:
                raise NotRainbowSeed("an empty seed must span exactly one vertex")
            (v,) = self.spanned
            return RainbowCertificate(frozenset(), v, self.spanned)
        try:
            cert = RainbowCertificate.from_arcs(self.arcs)
        except ValueError as exc:
            raise NotRainbowSeed(str(exc)) from None
        if cert.spanned != self.spanned:
            raise NotRainbowSeed("spanned set does not match the seed arcs")
        return cert


def greedy_extend(inst: ColoredInstance, seed: Seed, events: list | None = None) -> RainbowCertificate:
    """Augment ``seed`` one vertex at a time until it spans ``inst``.

    Mode ``"cross"``: some unused color is rooted inside the tree, so it has
    an arc leaving the tree. Mode ``"exchange"``: otherwise take the least
    unused color's arc ``(v, root)``. Either grow by it (``"prepend"``), or,
    if ``v`` is already spanned, swap it for the tree arc into ``v`` and
    grow with the color that frees up. ``events`` (if given) receives the
    mode of every step.
    """
    n = inst.n
    if inst.k != n - 1:
        raise WrongColorCount(f"greedy extension needs k = n - 1 = {n - 1}, got {inst.k}")
    cert = seed.certificate()
    chk = check_certificate(inst, cert, require_spanning=False)
    if not chk:
        raise NotRainbowSeed(f"{chk.reason}: {chk.detail}")
    missing = [v for v in rho_profile(inst).multi_roots if v not in cert.spanned]
    if missing:
        raise SeedMissingMultiRoot(f"multi-roots {missing} are not in the seed")

    tree = RainbowTree(inst, cert.root, cert.arcs)
    roots = inst.roots()
    while len(tree.spanned) < n:
        arc = _cross(tree, roots)
        if arc is not None:
            tree.add(arc)
            _log(events, "cross")
            continue
        i = min(tree.unused())
        e = inst.arc_into(i, tree.root)
        if e is None:
            raise AssertionError("unused color rooted at the tree root despite no crossing arc")
        v = e.tail
        if v not in tree.spanned:
            tree.into[tree.root] = e
            tree.spanned.add(v)
            tree.used.add(i)
            tree.root = v
            _log(events, "prepend")
            continue
        f = tree.into.pop(v)
        tree.used.discard(f.color)
        tree.into[tree.root] = e
        tree.used.add(i)
        tree.root = v
        arc = tree.crossing_arc(f.color)
        if arc is None:
            raise AssertionError("freed color has no crossing arc")
        tree.add(arc)
        _log(events, "exchange")
    return tree.certificate()


def _cross(tree: RainbowTree, roots) -> ColoredArc | None:
    for c in tree.unused():
        if roots[c - 1] in tree.spanned:
            arc = tree.crossing_arc(c)
            if arc is not None:
                return arc
    return None


def _log(events, what):
    if events is not None:
        events.append(what)
