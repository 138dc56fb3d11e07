"""Solver dispatch and verification campaigns.

Everything here returns plain dicts so the CLI can print them as JSON lines.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .certificate import RainbowCertificate, check_certificate
from .errors import BudgetExhausted, PreconditionFailed, TooLarge
from .exact import SearchConfig, SearchStats, enumerate_arborescences, find_rainbow
from .fileio import instance_digest, serialize_instance
from .generators import GenSpec, count_instances, derive_seed, generate
from .instance import ColoredInstance, classify_shape
from .solvers import (
    solve_all_paths,
    solve_half_size,
    solve_many_colors,
    solve_paths_and_stars,
    solve_tree_underlying,
    solve_two_arcs_per_color,
    solve_two_multiroots,
)

ALGORITHMS = (
    "auto", "exact", "paths", "paths-stars", "two-multiroots", "tree",
    "many-colors", "two-arcs", "half-size",
)


def choose_algorithm(inst: ColoredInstance, root: int | None = None, size: int | None = None) -> str:
    """Most specific constructive solver whose hypotheses hold, else ``"exact"``."""
    n, k = inst.n, inst.k
    if root is not None:
        return "exact"
    if size is not None and size < n - 1:
        return "half-size" if k == n - 1 and size <= n // 2 else "exact"
    if k == n - 1:
        shape = classify_shape(inst)
        if shape.all_paths:
            return "paths"
        if shape.all_paths_or_stars:
            return "paths-stars"
        if shape.underlying_tree:
            return "tree"
        if shape.multi_root_count <= 2:
            return "two-multiroots"
        return "exact"
    if k >= 2 * n - 3 or (n >= 3 and k >= 2 * n - 4):
        return "many-colors"
    return "exact"


@dataclass
class SolveResult:
    algorithm: str
    outcome: str  # found | none
    certificate: RainbowCertificate | None = None
    nodes: int = 0
    elapsed: float = 0.0
    max_per_color: int = 1
    extra: dict = field(default_factory=dict)


def solve(
    inst: ColoredInstance,
    algo: str = "auto",
    root: int | None = None,
    size: int | None = None,
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> SolveResult:
    """Run one solver and re-verify its output before returning it."""
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}")
    if algo == "auto":
        algo = choose_algorithm(inst, root, size)
    if root is not None and algo != "exact":
        raise PreconditionFailed(f"{algo}: a required root is only supported by the exact solver")
    if size is not None and algo not in ("exact", "half-size") and size != inst.n - 1:
        raise PreconditionFailed(f"{algo}: only spanning solutions are produced")
    t0 = time.perf_counter()
    stats = SearchStats()
    max_per = 1
    spanning = True
    if algo == "exact":
        cert = find_rainbow(inst, SearchConfig(root, size, node_budget, time_budget), stats)
        spanning = size is None or size == inst.n - 1
    elif algo == "half-size":
        size = inst.n // 2 if size is None else size
        cert = solve_half_size(inst, size)
        spanning = False
    elif algo == "two-arcs":
        cert = RainbowCertificate.from_arcs(solve_two_arcs_per_color(inst))
        max_per = 2
    else:
        fn = {
            "paths": solve_all_paths,
            "paths-stars": solve_paths_and_stars,
            "two-multiroots": solve_two_multiroots,
            "tree": solve_tree_underlying,
            "many-colors": solve_many_colors,
        }[algo]
        cert = fn(inst)
    elapsed = time.perf_counter() - t0
    if cert is None:
        return SolveResult(algo, "none", None, stats.nodes, elapsed)
    chk = check_certificate(inst, cert, require_spanning=spanning, require_root=root,
                            size=size, max_per_color=max_per)
    if not chk:
        raise AssertionError(f"{algo} produced an invalid certificate: {chk.reason} {chk.detail}")
    return SolveResult(algo, "found", cert, stats.nodes, elapsed, max_per)


def cert_record(cert: RainbowCertificate | None) -> dict:
    if cert is None:
        return {"certificate": None, "root": None}
    return {"certificate": [list(a) for a in cert.sorted_arcs], "root": cert.root}


# --- campaigns -------------------------------------------------------------------

def instance_at(n: int, k: int, index: int) -> ColoredInstance:
    """Instance number ``index`` in the order of :func:`generators.enumerate_instances`."""
    arbs = tuple(enumerate_arborescences(n))
    picks = []
    for _ in range(k):
        index, d = divmod(index, len(arbs))
        picks.append(arbs[d])
    picks.reverse()
    return ColoredInstance(n, tuple(picks))


def _campaign_instance(n, k, mode, seed, index):
    if mode == "exhaustive":
        return instance_at(n, k, index), None
    s = derive_seed(seed, index)
    return generate(GenSpec(n, k, "random", s)), s


def _run_chunk(args):
    n, k, mode, seed, lo, hi, size, node_budget, time_budget = args
    counts = {"found": 0, "none": 0, "unknown": 0}
    flagged = []
    nodes = 0
    for i in range(lo, hi):
        inst, s = _campaign_instance(n, k, mode, seed, i)
        stats = SearchStats()
        try:
            cert = find_rainbow(inst, SearchConfig(None, size, node_budget, time_budget), stats)
            outcome = "found" if cert is not None else "none"
        except BudgetExhausted:
            cert, outcome = None, "unknown"
        nodes += stats.nodes
        if cert is not None:
            chk = check_certificate(inst, cert, require_spanning=size is None, size=size)
            if not chk:
                raise AssertionError(f"exact solver certificate failed: {chk.reason}")
        counts[outcome] += 1
        if outcome != "found":
            flagged.append({
                "type": "instance", "index": i, "seed": s, "outcome": outcome,
                "digest": instance_digest(inst), "instance": serialize_instance(inst),
            })
    return counts, flagged, nodes


def verify_campaign(
    n: int,
    k: int,
    mode: str = "sample",
    samples: int = 1000,
    seed: int = 0,
    jobs: int = 1,
    size: int | None = None,
    node_budget: int | None = None,
    time_budget: float | None = None,
    chunk: int = 4096,
) -> dict:
    """Run the exact solver over a family of instances.

    Returns a summary dict; ``"flagged"`` lists every instance whose outcome
    was ``none`` (a counterexample candidate) or ``unknown``, with its
    serialization. Summaries are identical for any ``jobs`` value.
    """
    if mode not in ("exhaustive", "sample"):
        raise ValueError("mode must be 'exhaustive' or 'sample'")
    if size is None and k < n - 1:
        raise ValueError("spanning verification needs k >= n - 1 (use size for smaller targets)")
    if size is not None and (k != n - 1 or not 1 <= size <= n - 1):
        raise ValueError("size-restricted verification needs k = n - 1 and 1 <= size <= n - 1")
    if mode == "exhaustive":
        if n > 4 or count_instances(n, k) > 10**6:
            raise TooLarge(f"exhaustive verification of {count_instances(n, k)} instances is not supported")
        total = count_instances(n, k)
    else:
        total = samples
    tasks = [(n, k, mode, seed, lo, min(lo + chunk, total), size, node_budget, time_budget)
             for lo in range(0, total, chunk)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, tasks))
    else:
        results = [_run_chunk(t) for t in tasks]
    counts = {"found": 0, "none": 0, "unknown": 0}
    flagged = []
    nodes = 0
    for c, f, m in results:
        for key in counts:
            counts[key] += c[key]
        flagged.extend(f)
        nodes += m
    flagged.sort(key=lambda r: r["index"])
    return {
        "type": "summary", "command": "verify", "n": n, "k": k, "mode": mode,
        "seed": seed if mode == "sample" else None, "size": size,
        "total": total, **counts, "nodes": nodes, "flagged": flagged,
    }
