"""Brute-force checks of twin sort against an independent reference sort.

Nothing in here reuses the twin sort code path: ``reference_sort`` is a
plain insertion sort, and sortedness is checked directly on the output.
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from twinsort import core

MAX_N = 9

WRONG_ORDER = "wrong-order"
NOT_PERMUTATION = "not-permutation"
UNSTABLE = "unstable"
UNSAFE_TERMINATION = "unsafe-termination"
BOUND_EXCEEDED = "bound-exceeded"

FAILURE_KINDS = (WRONG_ORDER, NOT_PERMUTATION, UNSTABLE, UNSAFE_TERMINATION, BOUND_EXCEEDED)


@dataclass
class VerificationReport:
    n: int
    permutations_checked: int = 0
    failures: list[tuple[tuple[int, ...], str]] = field(default_factory=list)
    max_comparisons: int = 0
    total_comparisons: int = 0

    @property
    def mean_comparisons(self) -> Fraction:
        if not self.permutations_checked:
            return Fraction(0)
        return Fraction(self.total_comparisons, self.permutations_checked)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        if other.n != self.n:
            raise ValueError(f"cannot merge reports for n={self.n} and n={other.n}")
        return VerificationReport(
            n=self.n,
            permutations_checked=self.permutations_checked + other.permutations_checked,
            failures=sorted(self.failures + other.failures),
            max_comparisons=max(self.max_comparisons, other.max_comparisons),
            total_comparisons=self.total_comparisons + other.total_comparisons,
        )


def reference_sort(elements: Iterable, key: Optional[Callable] = None, reverse: bool = False) -> list:
    """Stable insertion sort. Slow on purpose; it only has to be obviously right."""
    if key is None:
        key = _identity
    out: list = []
    for item in elements:
        k = key(item)
        pos = len(out)
        # walk left past every element that must come after ``item``
        while pos > 0:
            prev = key(out[pos - 1])
            after = prev < k if reverse else k < prev
            if not after:
                break
            pos -= 1
        out.insert(pos, item)
    return out


def _identity(x):
    return x


def _is_nondecreasing(seq: Sequence) -> bool:
    return all(not (seq[i + 1] < seq[i]) for i in range(len(seq) - 1))


def _check_guardrail(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")


def _default_sorter(elements):
    # looked up at call time so a patched core is honoured
    return core.twin_sort(elements)


def classify(perm: tuple[int, ...], sorter: Callable = _default_sorter) -> tuple[Optional[str], int]:
    """Sort one permutation; return (failure kind or None, comparisons)."""
    n = len(perm)
    out, stats = sorter(list(perm))
    if sorted(out) != sorted(perm):
        return NOT_PERMUTATION, stats.comparisons
    if not _is_nondecreasing(out):
        kind = UNSAFE_TERMINATION if stats.terminated_early else WRONG_ORDER
        return kind, stats.comparisons
    if stats.comparisons > n * (n - 1) // 2:
        return BOUND_EXCEEDED, stats.comparisons
    return None, stats.comparisons


def _verify_prefix(n: int, first: int, sorter: Callable = _default_sorter) -> VerificationReport:
    report = VerificationReport(n=n)
    rest = [k for k in range(1, n + 1) if k != first]
    for tail in itertools.permutations(rest):
        perm = (first, *tail)
        kind, comparisons = classify(perm, sorter)
        report.permutations_checked += 1
        report.total_comparisons += comparisons
        report.max_comparisons = max(report.max_comparisons, comparisons)
        if kind is not None:
            report.failures.append((perm, kind))
    return report


def verify_permutations(
    n: int,
    sorter: Optional[Callable] = None,
    workers: int = 1,
) -> VerificationReport:
    """Run the sorter on every permutation of 1..n, in lexicographic order.

    Work is split by leading element. With ``workers > 1`` the batches run
    in separate processes; the merged report is the same either way.
    """
    _check_guardrail(n)
    sorter = sorter or _default_sorter
    firsts = range(1, n + 1)
    if workers > 1 and sorter is _default_sorter:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_verify_prefix, [n] * n, firsts))
    else:
        batches = [_verify_prefix(n, first, sorter) for first in firsts]
    report = VerificationReport(n=n)
    for batch in batches:
        report = report.merge(batch)
    return report


def empirical_average_comparisons(n: int, sorter: Optional[Callable] = None) -> Fraction:
    """Exact mean comparison count of twin sort over all n! inputs."""
    return verify_permutations(n, sorter).mean_comparisons


def stability_check(keys: Sequence, payloads: Optional[Sequence] = None) -> bool:
    """Twin-sort tagged records and compare with the reference sort, payloads included."""
    if payloads is None:
        payloads = range(len(keys))
    if len(payloads) != len(keys):
        raise ValueError("keys and payloads differ in length")
    records = [core.Element(k, p) for k, p in zip(keys, payloads)]
    got, _ = core.twin_sort(records)
    want = reference_sort(records)
    return [(e.key, e.payload) for e in got] == [(e.key, e.payload) for e in want]


def stability_sweep(n: int, distinct_keys: int = 3, cases: int = 100, seed: int = 0) -> bool:
    """Random duplicate-heavy inputs of length ``n`` drawn from ``distinct_keys`` keys."""
    rng = random.Random(seed)
    for _ in range(cases):
        keys = [rng.randrange(distinct_keys) for _ in range(n)]
        if not stability_check(keys):
            return False
    return True


def load_golden(path: Path) -> dict[int, Fraction]:
    raw = json.loads(Path(path).read_text())
    return {int(n): Fraction(v["numerator"], v["denominator"]) for n, v in raw.items()}


def save_golden(path: Path, means: dict[int, Fraction]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    raw = {
        str(n): {"numerator": m.numerator, "denominator": m.denominator}
        for n, m in sorted(means.items())
    }
    path.write_text(json.dumps(raw, indent=2) + "\n")
