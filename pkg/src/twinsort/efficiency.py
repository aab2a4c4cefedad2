"""Closed-form comparison counts for twin sort and the table built from them.

``average_case`` is the textbook model (half the worst case). It is not
the measured mean; see ``twinsort.oracle.empirical_average_comparisons``.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal


@dataclass(frozen=True)
class EfficiencyRow:
    n: int
    best: int
    worst: int
    average: Decimal


def best_case(n: int) -> int:
    return max(n - 1, 0)


def worst_case(n: int) -> int:
    return (n - 1) * n // 2 if n > 0 else 0


def average_case(n: int) -> Decimal:
    return Decimal(worst_case(n)) / 2


def efficiency_table(n_min: int, n_max: int) -> list[EfficiencyRow]:
    if n_min < 0:
        raise ValueError(f"n_min must be non-negative, got {n_min}")
    if n_min > n_max:
        raise ValueError(f"n_min ({n_min}) exceeds n_max ({n_max})")
    return [
        EfficiencyRow(n, best_case(n), worst_case(n), average_case(n))
        for n in range(n_min, n_max + 1)
    ]


def format_decimal(value: Decimal) -> str:
    """Shortest exact rendering: ``0.5``, ``5``, ``22.5``."""
    if value == value.to_integral_value():
        return str(int(value))
    return format(value.normalize(), "f")
