"""Run each constructive solver on a generated instance of its class.

    python3 demos/constructive_tour.py
"""

from rainbow_arb import GenSpec, generate
from rainbow_arb.solvers import (
    solve_all_paths,
    solve_half_size,
    solve_many_colors,
    solve_paths_and_stars,
    solve_tree_underlying,
    solve_two_arcs_per_color,
    solve_two_multiroots,
)

n = 9
runs = [
    ("all paths", GenSpec(n, n - 1, "all_paths", 1), solve_all_paths),
    ("paths and stars", GenSpec(n, n - 1, "paths_and_stars", 1), solve_paths_and_stars),
    ("two multi-roots", GenSpec(n, n - 1, "two_multiroots", 1), solve_two_multiroots),
    ("common tree", GenSpec(n, n - 1, "underlying_tree", 1), solve_tree_underlying),
    ("k = 2n-4", GenSpec(n, 2 * n - 4, "random", 1), solve_many_colors),
    ("k = n-2, two per color", GenSpec(n, n - 2, "random", 1), solve_two_arcs_per_color),
    ("half size", GenSpec(n, n - 1, "random", 1), lambda inst: solve_half_size(inst, n // 2)),
]
for label, spec, fn in runs:
    out = fn(generate(spec))
    arcs = sorted(out.arcs) if hasattr(out, "arcs") else list(out)
    print(f"{label:>24}: {len(arcs)} arcs, colors {[a.color for a in arcs]}")
