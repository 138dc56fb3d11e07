"""Text formats: instance files, 3DM files and gadget layout sidecars.

Instance file::

    rba 1 <n> <k>
    <color> <tail> <head>      # one line per arc, sorted by (color, tail, head)

3DM file: a ``p q`` line, then ``q`` lines ``x y z`` (1-based, part-local).
Layout sidecar: ``index name`` lines, with the root recorded as ``# root <index>``.
``#`` starts a comment everywhere.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from .errors import InvalidHypergraph, ParseError
from .gadget import GadgetLayout, ThreeDMInstance
from .instance import ColoredInstance, validate_instance

MAGIC = "rba"
VERSION = 1


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _ints(tokens, no):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no) from None


def serialize_instance(inst: ColoredInstance) -> str:
    out = [f"{MAGIC} {VERSION} {inst.n} {inst.k}"]
    out += [f"{c} {t} {h}" for c, t, h in inst.arcs()]
    return "\n".join(out) + "\n"


def parse_instance(text: str) -> ColoredInstance:
    """Parse and validate; structural problems raise :class:`InstanceError` subclasses."""
    it = _lines(text)
    try:
        no, head = next(it)
    except StopIteration:
        raise ParseError("empty instance file") from None
    if len(head) != 4 or head[0] != MAGIC:
        raise ParseError(f"header must be '{MAGIC} {VERSION} <n> <k>'", no)
    version, n, k = _ints(head[1:], no)
    if version != VERSION:
        raise ParseError(f"unsupported format version {version}", no)
    if n < 2 or k < 1:
        raise ParseError("header needs n >= 2 and k >= 1", no)
    raw = []
    for no, toks in it:
        if len(toks) != 3:
            raise ParseError("arc lines have the form '<color> <tail> <head>'", no)
        raw.append(tuple(_ints(toks, no)))
    return validate_instance(raw, n, k)


def read_instance(path) -> ColoredInstance:
    return parse_instance(Path(path).read_text())


def write_instance(path, inst: ColoredInstance):
    Path(path).write_text(serialize_instance(inst))


def instance_digest(inst: ColoredInstance) -> str:
    return hashlib.sha256(serialize_instance(inst).encode()).hexdigest()


def serialize_3dm(h: ThreeDMInstance) -> str:
    return "\n".join([f"{h.p} {h.q}"] + [f"{x} {y} {z}" for x, y, z in h.edges]) + "\n"


def parse_3dm(text: str) -> ThreeDMInstance:
    it = _lines(text)
    try:
        no, head = next(it)
    except StopIteration:
        raise ParseError("empty 3DM file") from None
    if len(head) != 2:
        raise ParseError("first line must be 'p q'", no)
    p, q = _ints(head, no)
    edges = []
    for no, toks in it:
        if len(toks) != 3:
            raise ParseError("hyperedge lines have the form 'x y z'", no)
        e = tuple(_ints(toks, no))
        if not all(1 <= x <= p for x in e):
            raise ParseError(f"hyperedge {e} has an element outside 1..{p}", no)
        edges.append(e)
    if len(edges) != q:
        raise ParseError(f"header announces {q} hyperedges, found {len(edges)}")
    try:
        return ThreeDMInstance(p, tuple(edges))
    except InvalidHypergraph as exc:
        raise ParseError(str(exc)) from None


def serialize_layout(layout: GadgetLayout) -> str:
    out = [f"# rba-layout {VERSION} p={layout.p} q={layout.q}", f"# root {layout.root}"]
    out += [f"# color {c} {name}" for c, name in enumerate(layout.color_names) if c]
    out += [f"{v} {name}" for v, name in enumerate(layout.vertex_names) if v]
    return "\n".join(out) + "\n"


def parse_layout(text: str) -> tuple[dict[int, str], int | None]:
    """Return ``(vertex index -> name, root index)`` from a sidecar file."""
    names, root = {}, None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("# root "):
            root = int(line.split()[2])
            continue
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        toks = body.split()
        if len(toks) != 2:
            raise ParseError("layout lines have the form 'index name'", no)
        names[_ints(toks[:1], no)[0]] = toks[1]
    return names, root
