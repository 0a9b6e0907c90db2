from setcodes.analysis.balls import (
    Ball,
    Confusable,
    Packing,
    ReverseIndex,
    balls_disjoint,
    enumerate_ball,
    enumerate_confusable,
    greedy_packing,
)
from setcodes.analysis.boundary import Boundary, SpecialSubsets, boundary_and_influence, count_special_subsets
from setcodes.analysis.bounds import evaluate_bounds
from setcodes.analysis.suite import Scope, analyse_word, run_suite, suite

__all__ = [
    "Ball",
    "Boundary",
    "Confusable",
    "Packing",
    "ReverseIndex",
    "Scope",
    "SpecialSubsets",
    "analyse_word",
    "balls_disjoint",
    "boundary_and_influence",
    "count_special_subsets",
    "enumerate_ball",
    "enumerate_confusable",
    "evaluate_bounds",
    "greedy_packing",
    "run_suite",
    "suite",
]
