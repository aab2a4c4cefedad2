"""Exit criteria for the package, one test per criterion.

Each result is also printed as a PASS/FAIL line in the pytest summary.
"""

import time
import random
from math import factorial
from pathlib import Path

import pytest

from twinsort import bench, cli, oracle
from twinsort.core import Element, twin_sort, twin_sort_traced
from twinsort.efficiency import average_case, best_case, efficiency_table, format_decimal, worst_case

from helpers import simulated_mean

GOLDEN = Path(__file__).resolve().parents[1] / "goldens" / "empirical_avg.json"

WORKED_EXAMPLE = [
    [4, 5, 2, 3, 1],
    [4, 2, 5, 1, 3],
    [2, 4, 1, 5, 3],
    [2, 1, 4, 3, 5],
    [1, 2, 3, 4, 5],
]

PUBLISHED_TABLE = [
    (2, 1, 1, "0.5"), (3, 2, 3, "1.5"), (4, 3, 6, "3"), (5, 4, 10, "5"),
    (6, 5, 15, "7.5"), (7, 6, 21, "10.5"), (8, 7, 28, "14"), (9, 8, 36, "18"),
    (10, 9, 45, "22.5"), (11, 10, 55, "27.5"), (12, 11, 66, "33"), (13, 12, 78, "39"),
]


@pytest.mark.acceptance("1", "golden trace of 5,4,3,2,1 (exact, < 1 ms)")
def test_golden_trace():
    elapsed = []
    for _ in range(5):
        start = time.perf_counter()
        out, stats, trace = twin_sort_traced([5, 4, 3, 2, 1])
        elapsed.append(time.perf_counter() - start)
    assert trace.arrays() == WORKED_EXAMPLE
    assert out == [1, 2, 3, 4, 5]
    assert (stats.comparisons, stats.swaps) == (10, 10)
    assert min(elapsed) < 1e-3


@pytest.mark.acceptance("2", "efficiency table n=2..13 equals the published rows")
def test_table_reproduction():
    rows = efficiency_table(2, 13)
    assert [(r.n, r.best, r.worst, format_decimal(r.average)) for r in rows] == PUBLISHED_TABLE


@pytest.mark.acceptance("3", "sorted input: n-1 comparisons, 0 swaps, <= 2 passes, early exit")
def test_measured_best_case():
    for n in range(2, 14):
        _, stats = twin_sort(range(n))
        assert stats.comparisons == n - 1 == best_case(n), n
        assert stats.swaps == 0
        assert stats.passes <= 2
        assert stats.terminated_early


@pytest.mark.acceptance("4", "reversed input: (n-1)*n/2 comparisons")
def test_measured_worst_case():
    for n in range(2, 14):
        _, stats = twin_sort(range(n, 0, -1))
        assert stats.comparisons == (n - 1) * n // 2 == worst_case(n), n


@pytest.mark.acceptance("5", "all permutations n<=8 verified, max = (n-1)*n/2, < 60 s")
def test_exhaustive_verification():
    start = time.perf_counter()
    for n in range(1, 9):
        report = oracle.verify_permutations(n)
        assert report.permutations_checked == factorial(n)
        assert report.failures == [], report.failures[:3]
        if n >= 2:
            assert report.max_comparisons == (n - 1) * n // 2
    assert time.perf_counter() - start < 60


@pytest.mark.acceptance("6", "stability on 1000 seeded duplicate-keyed inputs, n <= 64")
def test_stability():
    rng = random.Random(20240607)
    for case in range(1000):
        n = rng.randint(0, 64)
        distinct = rng.randint(1, 8)
        records = [Element(rng.randrange(distinct), i) for i in range(n)]
        got, _ = twin_sort(records)
        want = oracle.reference_sort(records)
        pairs = [(e.key, e.payload) for e in got]
        assert pairs == [(e.key, e.payload) for e in want], case
        assert pairs == sorted(pairs), case


@pytest.mark.acceptance("7", "measured averages n<=8 match pinned golden values")
def test_average_case_golden(capsys):
    golden = oracle.load_golden(GOLDEN)
    with capsys.disabled():
        print("\n  n  measured mean            model")
        for n in range(1, 9):
            measured = oracle.empirical_average_comparisons(n)
            print(f"  {n}  {str(measured):>12} ~ {float(measured):7.4f}  {format_decimal(average_case(n)):>5}")
            assert measured == golden[n], n
            assert measured == simulated_mean(n), n


def _bench_csv_without_time(capsys, argv):
    assert cli.main(argv) == 0
    out = capsys.readouterr().out
    return [line.rsplit(",", 1)[0] for line in out.splitlines()]


@pytest.mark.acceptance("8", "bench output is identical across runs apart from elapsed_ns")
def test_bench_determinism(capsys):
    argv = [
        "bench", "--algos", "twin,insertion,merge,quick",
        "--gens", "sorted,reversed,random,nearly-sorted,few-unique",
        "--sizes", "0,1,2,16,100", "--trials", "3", "--seed", "12345",
    ]
    first = _bench_csv_without_time(capsys, argv)
    second = _bench_csv_without_time(capsys, argv)
    assert first == second
    assert len(first) == 1 + 4 * 5 * 5 * 3


@pytest.mark.acceptance("9", "merge sort uses fewer comparisons than twin sort on random n=256,1024")
def test_comparative_sanity():
    config = bench.BenchConfig(
        algorithms=["twin", "merge"], generators=["random"], sizes=[256, 1024],
        seed=1, trials=1, measure_time=False,
    )
    counts = {(r.algo, r.n): r.comparisons for r in bench.run_bench(config)}
    for n in (256, 1024):
        assert counts[("merge", n)] < counts[("twin", n)], (n, counts)
