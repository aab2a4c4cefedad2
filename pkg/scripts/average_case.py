#!/usr/bin/env python3
"""Measured mean comparisons (all n! inputs) next to the half-of-worst-case model."""

import argparse

from twinsort.efficiency import average_case, best_case, format_decimal, worst_case
from twinsort.oracle import MAX_N, verify_permutations


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8, choices=range(1, MAX_N + 1), metavar=f"1..{MAX_N}")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    print(f"{'n':>2} {'best':>5} {'worst':>6} {'model avg':>10} {'measured avg':>22} {'ratio':>6}")
    for n in range(1, args.max_n + 1):
        report = verify_permutations(n, workers=args.workers)
        mean = report.mean_comparisons
        model = average_case(n)
        ratio = f"{float(mean) / float(model):.3f}" if model else "-"
        print(
            f"{n:>2} {best_case(n):>5} {worst_case(n):>6} {format_decimal(model):>10} "
            f"{str(mean):>13} ({float(mean):6.3f}) {ratio:>6}"
        )


if __name__ == "__main__":
    main()
