"""Test-only helpers: a standalone comparison counter and a broken pass variant."""

import itertools
from fractions import Fraction

from twinsort.core import PassOutcome, make_less


def simulate_comparisons(perm):
    """Second, standalone rendering of the sort loop, used only to count comparisons."""
    a = list(perm)
    n = len(a)
    count = run = 0
    for p in range(n if n > 1 else 0):
        for i in range(p % 2, n - 1, 2):
            count += 1
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                run = 0
            else:
                run += 1
                if run == n - 1:
                    return count
    return count


def simulated_mean(n):
    perms = list(itertools.permutations(range(1, n + 1)))
    return Fraction(sum(simulate_comparisons(p) for p in perms), len(perms))


def run_pass_without_reset(elements, parity, stats, less=make_less()):
    # identical to the real pass except a swap never clears false_run
    n = stats.n
    comparisons = swaps = 0
    for i in range(parity.value, n - 1, 2):
        comparisons += 1
        stats.comparisons += 1
        if less(elements[i + 1], elements[i]):
            elements[i], elements[i + 1] = elements[i + 1], elements[i]
            swaps += 1
            stats.swaps += 1
        else:
            stats.false_run += 1
            if stats.false_run == n - 1:
                return PassOutcome(comparisons, swaps, True)
    return PassOutcome(comparisons, swaps, False)
