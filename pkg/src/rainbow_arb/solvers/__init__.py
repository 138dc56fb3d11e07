"""Constructive solvers, one per special case in which a rainbow arborescence is known to exist."""

from .greedy import Seed, greedy_extend
from .multiroot import DualGrowth, dual_growth, solve_two_multiroots
from .paths import (
    SelectionState,
    path_repair_states,
    selection_conditions_hold,
    solve_all_paths,
    solve_paths_and_stars,
)
from .relax import maximal_rainbow, solve_half_size, solve_many_colors, solve_two_arcs_per_color
from .stars import LiftEntry, LiftMap, star_lift, star_reduce
from .tree import solve_tree_underlying

__all__ = [
    "DualGrowth",
    "LiftEntry",
    "LiftMap",
    "Seed",
    "SelectionState",
    "dual_growth",
    "greedy_extend",
    "maximal_rainbow",
    "path_repair_states",
    "selection_conditions_hold",
    "solve_all_paths",
    "solve_half_size",
    "solve_many_colors",
    "solve_paths_and_stars",
    "solve_tree_underlying",
    "solve_two_arcs_per_color",
    "solve_two_multiroots",
    "star_lift",
    "star_reduce",
]
