from decimal import Decimal

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twinsort.core import twin_sort
from twinsort.efficiency import (
    EfficiencyRow,
    average_case,
    best_case,
    efficiency_table,
    format_decimal,
    worst_case,
)

# n, best, worst, average as printed in the published table
PUBLISHED_TABLE = [
    (2, 1, 1, "0.5"),
    (3, 2, 3, "1.5"),
    (4, 3, 6, "3"),
    (5, 4, 10, "5"),
    (6, 5, 15, "7.5"),
    (7, 6, 21, "10.5"),
    (8, 7, 28, "14"),
    (9, 8, 36, "18"),
    (10, 9, 45, "22.5"),
    (11, 10, 55, "27.5"),
    (12, 11, 66, "33"),
    (13, 12, 78, "39"),
]


@pytest.mark.parametrize("n, expected", [(25, 24), (2, 1), (1, 0), (0, 0)])
def test_best_case(n, expected):
    assert best_case(n) == expected


@pytest.mark.parametrize("n, expected", [(5, 10), (13, 78), (0, 0), (1, 0)])
def test_worst_case(n, expected):
    assert worst_case(n) == expected


@pytest.mark.parametrize("n, expected", [(5, "5"), (10, "22.5"), (0, "0")])
def test_average_case(n, expected):
    assert average_case(n) == Decimal(expected)


def test_table_matches_published_rows():
    rows = efficiency_table(2, 13)
    assert [(r.n, r.best, r.worst, format_decimal(r.average)) for r in rows] == PUBLISHED_TABLE


def test_single_rows():
    assert efficiency_table(7, 7) == [EfficiencyRow(7, 6, 21, Decimal("10.5"))]
    assert efficiency_table(0, 0) == [EfficiencyRow(0, 0, 0, Decimal(0))]


def test_table_rejects_inverted_range():
    with pytest.raises(ValueError):
        efficiency_table(5, 2)


@pytest.mark.parametrize("value, text", [("0.5", "0.5"), ("5", "5"), ("5.0", "5"), ("10", "10"), ("22.50", "22.5")])
def test_format_decimal(value, text):
    assert format_decimal(Decimal(value)) == text


@given(st.integers(min_value=0, max_value=10**6))
def test_average_is_exact_half(n):
    avg = average_case(n)
    assert avg * 2 == worst_case(n)
    assert format_decimal(avg).endswith(".5") or "." not in format_decimal(avg)


@pytest.mark.parametrize("n", range(2, 14))
def test_model_matches_measured_extremes(n):
    _, best = twin_sort(range(n))
    _, worst = twin_sort(range(n, 0, -1))
    assert best.comparisons == best_case(n)
    assert worst.comparisons == worst_case(n)
