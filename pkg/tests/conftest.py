"""Shared generators and independent grid validators for the test suite."""

import itertools

from riggedcrystals.forward import validate_forward
from riggedcrystals.reverse import validate_reverse


def all_forward(n, bound):
    """Every weakly increasing triangle with entries <= bound."""
    cols = [list(itertools.combinations_with_replacement(range(bound + 1), n - j + 1))
            for j in range(1, n + 1)]
    for combo in itertools.product(*cols):
        yield validate_forward([list(c) for c in combo], n)


def all_reverse(n, bound):
    """Every weakly decreasing triangle with entries <= bound."""
    cols = [[list(reversed(c))
             for c in itertools.combinations_with_replacement(range(bound + 1), n - j + 1)]
            for j in range(1, n + 1)]
    for combo in itertools.product(*cols):
        yield validate_reverse([list(c) for c in combo], n)


def is_semistandard(rows):
    """Rows weakly increase, columns strictly increase; top-anchored columns."""
    for row in rows:
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
    for r in range(len(rows) - 1):
        for c in range(len(rows[r + 1])):
            if c >= len(rows[r]) or rows[r][c] >= rows[r + 1][c]:
                return False
    return True


def is_reverse_semistandard(rows):
    """Rows weakly decrease, columns strictly increase; bottom-anchored columns."""
    for r, row in enumerate(rows):
        if any(row[c] < row[c + 1] for c in range(len(row) - 1)):
            return False
        if r + 1 < len(rows) and len(row) > len(rows[r + 1]):
            return False
    for r in range(len(rows) - 1):
        for c in range(len(rows[r])):
            if rows[r][c] >= rows[r + 1][c]:
                return False
    return True


def forward_columns(rows):
    """Column lists of a top-anchored grid."""
    width = len(rows[0]) if rows else 0
    return [[row[c] for row in rows if c < len(row)] for c in range(width)]


def reverse_columns(rows):
    """Column lists of a bottom-anchored grid."""
    width = len(rows[-1]) if rows else 0
    return [[row[c] for row in rows if c < len(row)] for c in range(width)]


def count_basic_columns(columns, n):
    """How many columns equal the basic column 1..i, per height i."""
    found = {i: 0 for i in range(1, n + 1)}
    for col in columns:
        h = len(col)
        if 1 <= h <= n and col == list(range(1, h + 1)):
            found[h] += 1
    return found
