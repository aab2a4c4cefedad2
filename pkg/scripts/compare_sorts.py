#!/usr/bin/env python3
"""Mean comparisons and time per algorithm over generated inputs.

Writes a small text table; use ``twinsort bench --format csv`` for raw records.
"""

import argparse
from collections import defaultdict
from statistics import mean

from twinsort.bench import ALGORITHMS, BenchConfig, GeneratorKind, run_bench


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[16, 64, 256, 1024])
    parser.add_argument("--trials", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    config = BenchConfig(
        algorithms=ALGORITHMS,
        generators=list(GeneratorKind),
        sizes=args.sizes,
        seed=args.seed,
        trials=args.trials,
    )
    cells = defaultdict(list)
    for r in run_bench(config, workers=args.workers):
        # trial 0 is often cold; keep it unless it is the only one
        if r.trial == 0 and args.trials > 1:
            continue
        cells[(r.generator, r.n, r.algo)].append(r)

    print(f"{'generator':<14}{'n':>6}  " + "".join(f"{a:>22}" for a in ALGORITHMS))
    for kind in GeneratorKind:
        for n in args.sizes:
            row = []
            for algo in ALGORITHMS:
                recs = cells[(kind.value, n, algo)]
                comps = mean(r.comparisons for r in recs)
                us = mean(r.elapsed_ns for r in recs) / 1000
                row.append(f"{comps:>11.0f} {us:>8.0f}us")
            print(f"{kind.value:<14}{n:>6}  " + "".join(f"{c:>22}" for c in row))


if __name__ == "__main__":
    main()
