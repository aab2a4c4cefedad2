#!/usr/bin/env python3
"""Print the pass-by-pass trace for an input (default 5 4 3 2 1)."""

import argparse

from twinsort import twin_sort_traced


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("values", nargs="*", type=int, default=[5, 4, 3, 2, 1])
    args = parser.parse_args()

    out, stats, trace = twin_sort_traced(args.values)
    print("input:", *trace.initial)
    for snap in trace.snapshots:
        print(
            f"pass {snap.pass_index} ({snap.parity.name.lower():4}): "
            f"{' '.join(map(str, snap.elements)):<30} "
            f"{snap.comparisons} comparisons, {snap.swaps} swaps"
        )
    print(
        f"total: {stats.comparisons} comparisons, {stats.swaps} swaps, "
        f"{stats.passes} passes, early exit: {stats.terminated_early}"
    )


if __name__ == "__main__":
    main()
