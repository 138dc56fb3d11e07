"""Rainbow certificates and the single verifier every solver output must pass."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .instance import ColoredArc, ColoredInstance


@dataclass(frozen=True)
class RainbowCertificate:
    arcs: frozenset[ColoredArc]
    root: int
    spanned: frozenset[int]

    @classmethod
    def from_arcs(cls, arcs: Iterable[Iterable[int]], root: int | None = None) -> "RainbowCertificate":
        """Infer ``spanned`` (and ``root`` unless given) from an arc set."""
        arcs = frozenset(ColoredArc(*a) for a in arcs)
        spanned = {a.tail for a in arcs} | {a.head for a in arcs}
        if root is None:
            tops = spanned - {a.head for a in arcs}
            if len(tops) != 1:
                raise ValueError(f"cannot infer a unique root from {len(tops)} candidates")
            (root,) = tops
        spanned.add(root)
        return cls(arcs, root, frozenset(spanned))

    def __len__(self):
        return len(self.arcs)

    @property
    def sorted_arcs(self) -> list[ColoredArc]:
        return sorted(self.arcs)

    @property
    def color_usage(self) -> dict[int, list[ColoredArc]]:
        out: dict[int, list[ColoredArc]] = {}
        for a in self.sorted_arcs:
            out.setdefault(a.color, []).append(a)
        return out

    def parent_map(self) -> dict[int, int]:
        return {a.head: a.tail for a in self.arcs}


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def _fail(reason, detail=""):
    return CertificateCheck(False, reason, detail)


def check_certificate(
    inst: ColoredInstance,
    cert: RainbowCertificate,
    require_spanning: bool = True,
    require_root: int | None = None,
    size: int | None = None,
    max_per_color: int = 1,
) -> CertificateCheck:
    """Verify ``cert`` against ``inst``.

    Reason codes: ``NotInInstance``, ``RepeatedColor``, ``Inconsistent``,
    ``NotArborescence``, ``NotSpanning``, ``WrongRoot``, ``WrongSize``.
    ``max_per_color`` > 1 relaxes the rainbow condition (used for the
    two-arcs-per-color relaxation).
    """
    for a in sorted(cert.arcs):
        if not inst.has_arc(a):
            return _fail("NotInInstance", str(a))
    counts = Counter(a.color for a in cert.arcs)
    for c, m in sorted(counts.items()):
        if m > max_per_color:
            return _fail("RepeatedColor", f"color {c} used {m} times")

    verts = {a.tail for a in cert.arcs} | {a.head for a in cert.arcs} | {cert.root}
    if verts != set(cert.spanned):
        return _fail("Inconsistent", "spanned set does not match the arcs")
    parent: dict[int, int] = {}
    for a in cert.arcs:
        if a.head in parent:
            return _fail("NotArborescence", f"vertex {a.head} entered twice")
        parent[a.head] = a.tail
    if cert.root in parent:
        return _fail("NotArborescence", f"root {cert.root} has an incoming arc")
    if len(parent) != len(verts) - 1:
        return _fail("NotArborescence", "more than one vertex without incoming arc")
    for v in verts:
        seen = set()
        while v != cert.root:
            if v in seen:
                return _fail("NotArborescence", f"cycle through {v}")
            seen.add(v)
            v = parent[v]

    if require_spanning and len(verts) != inst.n:
        return _fail("NotSpanning", f"{len(verts)} of {inst.n} vertices")
    if require_root is not None and cert.root != require_root:
        return _fail("WrongRoot", f"root {cert.root}, required {require_root}")
    if size is not None and len(cert.arcs) != size:
        return _fail("WrongSize", f"{len(cert.arcs)} arcs, required {size}")
    return CertificateCheck(True)
