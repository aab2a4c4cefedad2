"""Deterministic inputs, baseline sorts and a counting/timing benchmark loop.

All randomness comes from SplitMix64 so that a (kind, n, seed) triple
produces the same input on every platform.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from twinsort.core import make_less, twin_sort

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

ALGORITHMS = ("twin", "insertion", "merge", "quick")


class ConfigError(ValueError):
    pass


def splitmix64_next(state: int) -> tuple[int, int]:
    """One SplitMix64 step: returns ``(value, next_state)``."""
    state = (state + GOLDEN_GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31), state


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        value, self.state = splitmix64_next(self.state)
        return value


class GeneratorKind(enum.Enum):
    SORTED = "sorted"
    REVERSED = "reversed"
    RANDOM = "random"
    NEARLY_SORTED = "nearly-sorted"
    FEW_UNIQUE = "few-unique"

    @classmethod
    def parse(cls, name: "str | GeneratorKind") -> "GeneratorKind":
        if isinstance(name, cls):
            return name
        normalized = name.strip().lower().replace("_", "-")
        for kind in cls:
            if kind.value == normalized or kind.name.lower() == normalized.replace("-", "_"):
                return kind
        raise ConfigError(f"unknown generator {name!r}; choose from {[k.value for k in cls]}")


def generate(kind: GeneratorKind, n: int, seed: int) -> list[int]:
    kind = GeneratorKind.parse(kind)
    rng = SplitMix64(seed)
    if kind is GeneratorKind.SORTED:
        return list(range(n))
    if kind is GeneratorKind.REVERSED:
        return list(range(n - 1, -1, -1))
    if kind is GeneratorKind.RANDOM:
        out = list(range(n))
        for i in range(n - 1, 0, -1):
            j = rng.next() % (i + 1)
            out[i], out[j] = out[j], out[i]
        return out
    if kind is GeneratorKind.NEARLY_SORTED:
        out = list(range(n))
        if n >= 2:
            for _ in range(-(-n // 10)):
                i = rng.next() % (n - 1)
                out[i], out[i + 1] = out[i + 1], out[i]
        return out
    return [rng.next() % 4 for _ in range(n)]


def insertion_sort(a: list, less) -> tuple[int, int]:
    comparisons = moves = 0
    for i in range(1, len(a)):
        item = a[i]
        j = i
        while j > 0:
            comparisons += 1
            if not less(item, a[j - 1]):
                break
            a[j] = a[j - 1]
            moves += 1
            j -= 1
        a[j] = item
    return comparisons, moves


def merge_sort(a: list, less) -> tuple[int, int]:
    """Top-down merge sort; moves counts element writes back into ``a``."""
    counts = [0, 0]

    def sort(lo: int, hi: int) -> None:
        if hi - lo < 2:
            return
        mid = (lo + hi) // 2
        sort(lo, mid)
        sort(mid, hi)
        left = a[lo:mid]
        i, j, k = 0, mid, lo
        while i < len(left) and j < hi:
            counts[0] += 1
            # take from the right only when strictly smaller: keeps it stable
            if less(a[j], left[i]):
                a[k] = a[j]
                j += 1
            else:
                a[k] = left[i]
                i += 1
            k += 1
            counts[1] += 1
        while i < len(left):
            a[k] = left[i]
            i += 1
            k += 1
            counts[1] += 1

    sort(0, len(a))
    return counts[0], counts[1]


def quick_sort(a: list, less) -> tuple[int, int]:
    """Median-of-three Hoare partitioning; recurses on the smaller side."""
    comparisons = swaps = 0

    def lt(x, y) -> bool:
        nonlocal comparisons
        comparisons += 1
        return less(x, y)

    def swap(i: int, j: int) -> None:
        nonlocal swaps
        a[i], a[j] = a[j], a[i]
        swaps += 1

    stack = [(0, len(a) - 1)]
    while stack:
        lo, hi = stack.pop()
        while lo < hi:
            mid = (lo + hi) // 2
            if lt(a[mid], a[lo]):
                swap(mid, lo)
            if lt(a[hi], a[lo]):
                swap(hi, lo)
            if lt(a[hi], a[mid]):
                swap(hi, mid)
            pivot = a[mid]
            i, j = lo - 1, hi + 1
            while True:
                i += 1
                while lt(a[i], pivot):
                    i += 1
                j -= 1
                while lt(pivot, a[j]):
                    j -= 1
                if i >= j:
                    break
                swap(i, j)
            if j - lo < hi - j:
                stack.append((j + 1, hi))
                hi = j
            else:
                stack.append((lo, j))
                lo = j + 1
    return comparisons, swaps


_BASELINES: dict[str, Callable] = {
    "insertion": insertion_sort,
    "merge": merge_sort,
    "quick": quick_sort,
}


def baseline_sort(
    algo: str,
    elements: Iterable,
    key: Optional[Callable] = None,
    reverse: bool = False,
) -> tuple[list, int, int]:
    """Sort a copy with a classical algorithm: ``(sorted, comparisons, swaps_or_moves)``."""
    try:
        fn = _BASELINES[algo]
    except KeyError:
        raise ConfigError(f"unknown baseline {algo!r}; choose from {sorted(_BASELINES)}") from None
    out = list(elements)
    comparisons, moves = fn(out, make_less(key, reverse))
    return out, comparisons, moves


def sort_with(algo: str, elements: Sequence) -> tuple[list, int, int]:
    if algo == "twin":
        out, stats = twin_sort(elements)
        return out, stats.comparisons, stats.swaps
    return baseline_sort(algo, elements)


@dataclass
class BenchConfig:
    algorithms: Sequence[str] = ("twin",)
    generators: Sequence[GeneratorKind] = (GeneratorKind.RANDOM,)
    sizes: Sequence[int] = (100,)
    seed: int = 0
    trials: int = 1
    measure_time: bool = True

    def __post_init__(self):
        self.algorithms = tuple(self.algorithms)
        for algo in self.algorithms:
            if algo not in ALGORITHMS:
                raise ConfigError(f"unknown algorithm {algo!r}; choose from {list(ALGORITHMS)}")
        self.generators = tuple(GeneratorKind.parse(g) for g in self.generators)
        self.sizes = tuple(self.sizes)
        if not self.algorithms:
            raise ConfigError("no algorithms selected")
        if not self.generators:
            raise ConfigError("no generators selected")
        if not self.sizes:
            raise ConfigError("sizes must be non-empty")
        if any(n < 0 for n in self.sizes):
            raise ConfigError("sizes must be non-negative")
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if not 0 <= self.seed <= MASK64:
            raise ConfigError("seed must be a 64-bit unsigned integer")


@dataclass
class BenchRecord:
    algo: str
    generator: str
    n: int
    seed: int
    trial: int
    comparisons: int
    swaps: int
    elapsed_ns: Optional[int] = field(default=None)

    def as_dict(self) -> dict:
        return asdict(self)


def trial_seed(seed: int, trial: int) -> int:
    """Seed for trial ``t``: the (t+1)-th SplitMix64 output from ``seed``."""
    state = seed & MASK64
    for _ in range(trial + 1):
        value, state = splitmix64_next(state)
    return value


def run_trial(algo: str, kind: GeneratorKind, n: int, seed: int, trial: int, measure_time: bool) -> BenchRecord:
    effective = trial_seed(seed, trial)
    data = generate(kind, n, effective)
    if measure_time:
        start = time.perf_counter_ns()
        _, comparisons, swaps = sort_with(algo, data)
        elapsed = time.perf_counter_ns() - start
    else:
        _, comparisons, swaps = sort_with(algo, data)
        elapsed = None
    return BenchRecord(algo, kind.value, n, effective, trial, comparisons, swaps, elapsed)


def _run_cell(args) -> BenchRecord:
    return run_trial(*args)


def run_bench(config: BenchConfig, workers: int = 1) -> list[BenchRecord]:
    """One record per (algorithm, generator, size, trial), in that nesting order.

    Trial 0 of each cell may include cold-cache effects in ``elapsed_ns``.
    """
    cells = [
        (algo, kind, n, config.seed, trial, config.measure_time)
        for algo in config.algorithms
        for kind in config.generators
        for n in config.sizes
        for trial in range(config.trials)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_cell, cells))
    return [_run_cell(c) for c in cells]
