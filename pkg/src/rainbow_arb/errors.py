"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RainbowError(Exception):
    """Base class for all errors raised by :mod:`rainbow_arb`."""


# --- malformed instances -------------------------------------------------

class InstanceError(RainbowError, ValueError):
    """Raw arc data does not describe k spanning arborescences."""

    color: int | None = None
    vertex: int | None = None


class UnknownVertex(InstanceError):
    def __init__(self, vertex, n):
        self.vertex = vertex
        super().__init__(f"vertex {vertex!r} outside 1..{n}")


class UnknownColor(InstanceError):
    def __init__(self, color, k):
        self.color = color
        super().__init__(f"color {color!r} outside 1..{k}")


class DuplicateArc(InstanceError):
    def __init__(self, color, head):
        self.color, self.vertex = color, head
        super().__init__(f"arc into {head} of color {color} listed twice")


class MultipleIncoming(InstanceError):
    def __init__(self, color, vertex):
        self.color, self.vertex = color, vertex
        super().__init__(f"vertex {vertex} has more than one incoming arc of color {color}")


class CycleInColor(InstanceError):
    def __init__(self, color, vertex=None):
        self.color, self.vertex = color, vertex
        where = f" through vertex {vertex}" if vertex is not None else ""
        super().__init__(f"color {color} contains a directed cycle{where}")


class ColorNotSpanning(InstanceError):
    def __init__(self, color, roots=()):
        self.color = color
        self.roots = tuple(roots)
        super().__init__(
            f"color {color} is not a spanning arborescence (in-degree-0 vertices: {list(self.roots)})"
        )


# --- solver preconditions --------------------------------------------------

class PreconditionFailed(RainbowError, ValueError):
    """The input does not satisfy the hypotheses of the requested algorithm."""


class WrongColorCount(PreconditionFailed):
    pass


class NotAStar(PreconditionFailed):
    pass


class NotAllPaths(PreconditionFailed):
    pass


class ShapeViolation(PreconditionFailed):
    pass


class TooManyMultiRoots(PreconditionFailed):
    pass


class NotUnderlyingTree(PreconditionFailed):
    pass


class TooFewColors(PreconditionFailed):
    pass


class TargetTooLarge(PreconditionFailed):
    pass


class SeedMissingMultiRoot(PreconditionFailed):
    pass


class NotRainbowSeed(PreconditionFailed):
    pass


class InvalidReducedCertificate(PreconditionFailed):
    pass


# --- generators / enumeration ------------------------------------------------

class InfeasibleSpec(RainbowError, ValueError):
    pass


class TooLarge(RainbowError, ValueError):
    pass


# --- gadget ------------------------------------------------------------------

class InvalidHypergraph(RainbowError, ValueError):
    pass


class NotAPerfectMatching(RainbowError, ValueError):
    pass


class NotRootedAtS1(RainbowError, ValueError):
    pass


class PathNotFound(RainbowError, ValueError):
    pass


# --- search ------------------------------------------------------------------

class BudgetExhausted(RainbowError):
    """The search hit its node or time cap. The answer is unknown, not "no"."""

    def __init__(self, kind, limit, nodes=0):
        self.kind = kind
        self.limit = limit
        self.nodes = nodes
        super().__init__(f"{kind} budget of {limit} exhausted after {nodes} nodes")


class ParseError(RainbowError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
