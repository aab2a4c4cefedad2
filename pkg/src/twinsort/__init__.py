"""Instrumented twin sort with an exhaustive oracle and a benchmark harness."""

from twinsort.core import (
    Element,
    PassParity,
    PassTrace,
    SortStats,
    pairs_for_pass,
    run_pass,
    sort_in_place,
    twin_sort,
    twin_sort_traced,
)
from twinsort.efficiency import average_case, best_case, efficiency_table, worst_case
from twinsort.oracle import (
    empirical_average_comparisons,
    reference_sort,
    stability_check,
    verify_permutations,
)

__version__ = "0.1.0"
