"""Twin sort: alternating even/odd adjacent-pair passes with early exit.

Even passes compare the pairs (0, 1), (2, 3), ...; odd passes compare
(1, 2), (3, 4), .... A pair is swapped only when its left element is
strictly greater than its right one, so the sort is stable.

Every comparison that does not swap extends a run of "in order" results;
any swap resets that run to zero. Once the run reaches ``n - 1`` the
sequence is known to be sorted and the sort stops, possibly in the middle
of a pass. Independently of that, at most ``n`` passes are made, which is
enough for odd-even transposition to sort any input.

>>> twin_sort([5, 4, 3, 2, 1])[0]
[1, 2, 3, 4, 5]
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, MutableSequence, Optional

__all__ = [
    "Element",
    "PassOutcome",
    "PassParity",
    "PassSnapshot",
    "PassTrace",
    "SortStats",
    "make_less",
    "pairs_for_pass",
    "run_pass",
    "sort_in_place",
    "twin_sort",
    "twin_sort_traced",
]

Less = Callable[[Any, Any], bool]


class PassParity(enum.Enum):
    EVEN = 0
    ODD = 1

    @classmethod
    def for_pass(cls, pass_index: int) -> "PassParity":
        return cls.ODD if pass_index % 2 else cls.EVEN

    @property
    def first_index(self) -> int:
        return self.value


@dataclass(frozen=True, order=True)
class Element:
    """A sortable record. Ordering and equality look at ``key`` only."""

    key: Any
    payload: Any = field(default=None, compare=False)


@dataclass
class SortStats:
    n: int
    comparisons: int = 0
    swaps: int = 0
    passes: int = 0
    terminated_early: bool = False
    # consecutive comparisons without a swap; survives pass boundaries
    false_run: int = 0

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "comparisons": self.comparisons,
            "swaps": self.swaps,
            "passes": self.passes,
            "terminated_early": self.terminated_early,
        }


@dataclass(frozen=True)
class PassOutcome:
    comparisons: int
    swaps: int
    terminated: bool


@dataclass(frozen=True)
class PassSnapshot:
    pass_index: int
    parity: PassParity
    elements: tuple
    comparisons: int
    swaps: int


@dataclass
class PassTrace:
    initial: tuple
    snapshots: list[PassSnapshot] = field(default_factory=list)

    def arrays(self) -> list[list]:
        return [list(s.elements) for s in self.snapshots]


def make_less(key: Optional[Callable] = None, reverse: bool = False) -> Less:
    """Build a strict "a sorts before b" predicate.

    ``reverse`` flips the predicate rather than the output, so equal keys
    keep their input order in both directions.
    """
    if key is None:
        if reverse:
            return lambda a, b: b < a
        return lambda a, b: a < b
    if reverse:
        return lambda a, b: key(b) < key(a)
    return lambda a, b: key(a) < key(b)


def _pair_starts(parity: PassParity, n: int) -> range:
    return range(parity.first_index, n - 1, 2)


def pairs_for_pass(parity: PassParity, n: int) -> list[tuple[int, int]]:
    """Index pairs compared by one pass of the given parity, left to right."""
    return [(i, i + 1) for i in _pair_starts(parity, n)]


def run_pass(
    elements: MutableSequence,
    parity: PassParity,
    stats: SortStats,
    less: Less = make_less(),
) -> PassOutcome:
    """Run one compare-and-swap pass over ``elements`` in place.

    Updates ``stats`` as it goes and returns early, with ``terminated``
    set, as soon as ``stats.false_run`` reaches ``stats.n - 1``.
    """
    n = stats.n
    comparisons = swaps = 0
    for i in _pair_starts(parity, n):
        left, right = elements[i], elements[i + 1]
        comparisons += 1
        stats.comparisons += 1
        if less(right, left):
            elements[i], elements[i + 1] = right, left
            swaps += 1
            stats.swaps += 1
            stats.false_run = 0
        else:
            stats.false_run += 1
            if stats.false_run == n - 1:
                return PassOutcome(comparisons, swaps, True)
    return PassOutcome(comparisons, swaps, False)


def sort_in_place(
    elements: MutableSequence,
    less: Less = make_less(),
    trace: Optional[PassTrace] = None,
) -> SortStats:
    """Twin-sort ``elements`` in place and return the run's counters."""
    n = len(elements)
    stats = SortStats(n=n)
    if n < 2:
        return stats
    for pass_index in range(n):
        parity = PassParity.for_pass(pass_index)
        stats.passes += 1
        outcome = run_pass(elements, parity, stats, less)
        if trace is not None:
            trace.snapshots.append(
                PassSnapshot(
                    pass_index,
                    parity,
                    tuple(elements),
                    outcome.comparisons,
                    outcome.swaps,
                )
            )
        if outcome.terminated:
            stats.terminated_early = True
            break
    return stats


def twin_sort(
    elements: Iterable,
    key: Optional[Callable] = None,
    reverse: bool = False,
) -> tuple[list, SortStats]:
    """Return a sorted copy of ``elements`` together with its ``SortStats``."""
    out = list(elements)
    stats = sort_in_place(out, make_less(key, reverse))
    return out, stats


def twin_sort_traced(
    elements: Iterable,
    key: Optional[Callable] = None,
    reverse: bool = False,
) -> tuple[list, SortStats, PassTrace]:
    out = list(elements)
    trace = PassTrace(initial=tuple(out))
    stats = sort_in_place(out, make_less(key, reverse), trace)
    return out, stats, trace
