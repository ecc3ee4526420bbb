"""Forward exponent triangles and their rigged-configuration closed form.

A forward triangle x has non-negative entries x[i,j] on 1 <= i, j with
i + j <= n + 1, weakly increasing in i.  It extends to a three-index table
N[i,j,k] (k = 0 layer equals x) whose partial sums give the row lengths and
riggings of a rigged configuration; recovery inverts the construction and
doubles as the membership test for the model.
"""

from typing import NamedTuple, Optional

from .errors import HeightBoundError, InvalidExponentsError
from .rc import RiggedConfiguration, RiggedRow, apply_f, empty_rc


class ForwardExponents:
    """Weakly increasing triangle; cols[j-1][i-1] = x[i,j]."""

    __slots__ = ("n", "cols")

    def __init__(self, n: int, cols):
        self.n = n
        self.cols = tuple(tuple(int(v) for v in col) for col in cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.cols[j - 1][i - 1]

    def __eq__(self, other):
        if not isinstance(other, ForwardExponents):
            return NotImplemented
        return self.n == other.n and self.cols == other.cols

    def __hash__(self):
        return hash((self.n, self.cols))

    def __repr__(self):
        return f"ForwardExponents(n={self.n}, cols={self.cols})"

    def total(self) -> int:
        return sum(sum(col) for col in self.cols)


class Membership(NamedTuple):
    """Outcome of a membership test: exponents when inside, stage name when not."""
    member: bool
    exponents: Optional[object]
    reason: Optional[str]


def validate_forward(raw, n: int) -> ForwardExponents:
    """Check shape (column j holds i = 1..n-j+1), non-negativity and weak increase in i."""
    cols = [list(col) for col in raw]
    if len(cols) != n:
        raise InvalidExponentsError(f"expected {n} columns, got {len(cols)}")
    for j, col in enumerate(cols, start=1):
        if len(col) != n - j + 1:
            raise InvalidExponentsError(
                f"column j={j} must hold {n - j + 1} entries, got {len(col)}")
        for i, value in enumerate(col, start=1):
            if not isinstance(value, int) or value < 0:
                raise InvalidExponentsError(f"entry ({i},{j}) = {value!r} is not a non-negative integer")
        for i in range(1, len(col)):
            if col[i - 1] > col[i]:
                raise InvalidExponentsError(
                    f"weak increase fails at ({i},{j}) <= ({i + 1},{j}): {col[i - 1]} > {col[i]}")
    return ForwardExponents(n, cols)


def word_of_forward(x: ForwardExponents):
    """Application-order word: waves j = 1..n, within a wave index i = 1..n-j+1."""
    word = []
    for j in range(1, x.n + 1):
        for i in range(1, x.n - j + 2):
            word.extend([i] * x[i, j])
    return word


class ForwardExtendedTable:
    """N[i,j,k] table produced from x; entries live on i+j+k <= n+2 (k >= 1) plus the k = 0 layer."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: dict):
        self.n = n
        self.entries = entries

    def __getitem__(self, ijk):
        return self.entries[ijk]

    def __contains__(self, ijk):
        return ijk in self.entries

    def row_sum(self, i: int, j: int, k: int) -> int:
        """Partial sum over the second index: sum of N[i,t,k] for t = 1..j."""
        return sum(self.entries[i, t, k] for t in range(1, j + 1))

    def row_length(self, i: int, j: int, k: int) -> int:
        """Length of the k-th row of part i after the first j+k-1 waves; 0 at j = 0."""
        if j == 0:
            return 0
        return self.row_sum(i, j, k - 1) - self.row_sum(i, j - 1, k)


def extend_forward(x: ForwardExponents) -> ForwardExtendedTable:
    """Iterative min-formula extension of x to the three-index table."""
    n = x.n
    entries = {}
    for j in range(1, n + 1):
        for i in range(1, n - j + 2):
            entries[i, j, 0] = x[i, j]
    table = ForwardExtendedTable(n, entries)
    for k in range(1, n + 1):
        for j in range(1, n - k + 2):
            entries[1, j, k] = 0
            for i in range(2, n - j - k + 3):
                entries[i, j, k] = min(
                    entries[i - 1, j + 1, k - 1],
                    table.row_sum(i, j, k - 1)
                    - table.row_sum(i, j - 1, k)
                    - table.row_sum(i - 1, j, k - 1)
                    + table.row_sum(i - 1, j, k),
                )
    return table


class LengthRiggingTable:
    """Row lengths and riggings keyed by (i, k) for 1 <= i <= n, 1 <= k <= n-i+1."""

    __slots__ = ("n", "lengths", "riggings")

    def __init__(self, n: int, lengths: dict, riggings: dict):
        self.n = n
        self.lengths = lengths
        self.riggings = riggings


def lengths_riggings_forward(table: ForwardExtendedTable) -> LengthRiggingTable:
    n = table.n
    lengths, riggings = {}, {}
    for i in range(1, n + 1):
        for k in range(1, n - i + 2):
            j = n - i - k + 2
            lengths[i, k] = table.row_length(i, j, k)
            riggings[i, k] = -table[i, j, k - 1] + table[i, j, k]
    return LengthRiggingTable(n, lengths, riggings)


def rc_from_forward(x: ForwardExponents) -> RiggedConfiguration:
    """Closed-form rigged configuration labelled by x (zero-length rows dropped)."""
    lr = lengths_riggings_forward(extend_forward(x))
    parts = []
    for i in range(1, x.n + 1):
        parts.append([RiggedRow(lr.lengths[i, k], lr.riggings[i, k])
                      for k in range(1, x.n - i + 2) if lr.lengths[i, k] > 0])
    return RiggedConfiguration(x.n, parts)


def _length_rigging_of_rc(rc: RiggedConfiguration) -> LengthRiggingTable:
    """Read lengths/riggings off a configuration, zero-filling absent rows (fake riggings)."""
    n = rc.n
    lengths, riggings = {}, {}
    for i in range(1, n + 1):
        part = rc.parts[i - 1]
        if len(part) > min(i, n - i + 1):
            raise HeightBoundError(
                f"part {i} has {len(part)} rows, bound is {min(i, n - i + 1)}")
        for k in range(1, n - i + 2):
            if k <= len(part):
                lengths[i, k] = part[k - 1].length
                riggings[i, k] = part[k - 1].rigging
            else:
                lengths[i, k] = 0
                riggings[i, k] = 0
    return LengthRiggingTable(n, lengths, riggings)


def recover_forward(rc: RiggedConfiguration):
    """Invert the closed form: rebuild the N table from {L, R} and return the k = 0 layer.

    Assignments reverse the extension exactly, filling anti-diagonals
    i+j+k = n+1-t for t = 0, 1, ..., n-1; on members this returns the unique
    labelling triangle, on anything else merely a candidate.
    """
    lr = _length_rigging_of_rc(rc)
    n, L, R = lr.n, lr.lengths, lr.riggings
    N = {}

    def nsum(i, k, lo, hi):
        return sum(N[i, t, k] for t in range(lo, hi + 1))

    for k in range(0, n):
        i = n - k
        N[i, 1, k] = L[i, k + 1]
        for j in range(2, n - k + 1):
            i = n - j - k + 1
            N[i, j, k] = (R[i + 1, k + 1] + N[i + 1, j - 1, k]
                          - min(0, L[i + 1, k + 1] - L[i, k + 1]))
    for t in range(1, n):
        for k in range(0, n - t):
            i = n - k - t
            N[i, 1, k] = L[i, k + 1] - nsum(i, k, 2, 1 + t) + nsum(i, k + 1, 1, t)
            for j in range(2, n - k - t + 1):
                i = n - j - k + 1 - t
                N[i, j, k] = N[i + 1, j - 1, k + 1] - min(
                    0,
                    L[i + 1, k + 1] - L[i, k + 1]
                    - nsum(i + 1, k, j, j + t - 1)
                    + nsum(i + 1, k + 1, j - 1, j + t - 2)
                    + nsum(i, k, j + 1, j + t)
                    - nsum(i, k + 1, j, j + t - 1),
                )
    return [[N[i, j, 0] for i in range(1, n - j + 2)] for j in range(1, n + 1)]


def is_member_rcinf(rc: RiggedConfiguration) -> Membership:
    """Recover a candidate triangle, rebuild, and compare; only the compare decides."""
    try:
        raw = recover_forward(rc)
    except HeightBoundError:
        return Membership(False, None, "height")
    try:
        x = validate_forward(raw, rc.n)
    except InvalidExponentsError:
        return Membership(False, None, "validate")
    if rc_from_forward(x) == rc:
        return Membership(True, x, None)
    return Membership(False, None, "rebuild")


def bfs_ball(n: int, depth: int):
    """All elements within the given operator distance of the highest weight element.

    Returns {rc: depth}, closed under apply_f up to the radius.
    """
    seen = {empty_rc(n): 0}
    frontier = [empty_rc(n)]
    for d in range(1, depth + 1):
        new_frontier = []
        for rc in frontier:
            for i in range(1, n + 1):
                nxt = apply_f(rc, i)
                if nxt not in seen:
                    seen[nxt] = d
                    new_frontier.append(nxt)
        frontier = new_frontier
    return seen


def _defined_n(n: int, i: int, j: int, k: int) -> bool:
    if i < 1 or j < 1 or k < 0:
        return False
    if k == 0:
        return i + j <= n + 1
    return j <= n - k + 1 and i <= n - j - k + 2


def _defined_a(n: int, i: int, j: int, k: int) -> bool:
    if i < 1 or j < 0 or k < 1:
        return False
    return i + j + k <= n + 2


def check_forward_tables(table: ForwardExtendedTable) -> list:
    """Inequality suite over an extension table; returns violations (empty = pass).

    Covers the bounds forced by the min-formula (the table checks), the
    monotonicity of the derived row lengths in every index direction (the
    rows checks), and the coupling of empty rows to zero riggings.  Each
    violation records the failed comparison as lhs <= rhs.
    """
    n = table.n
    out = []

    def expect_le(name, i, j, k, lhs, rhs):
        if lhs > rhs:
            out.append({"lemma": name, "indices": [i, j, k], "lhs": lhs, "rhs": rhs})

    for (i, j, k), value in table.entries.items():
        expect_le("table-nonneg", i, j, k, 0, value)
        if _defined_n(n, i - 1, j + 1, k - 1):
            expect_le("table-min-arg", i, j, k, value, table[i - 1, j + 1, k - 1])
        if _defined_n(n, i + 1, j, k):
            expect_le("table-monotone-i", i, j, k, value, table[i + 1, j, k])
        if k >= 1 and _defined_n(n, i, j + 1, k - 1):
            expect_le("table-shift", i, j, k, value, table[i, j + 1, k - 1])
        if k >= 1 and i <= k:
            expect_le("table-zero-wedge", i, j, k, value, 0)

    for i in range(1, n + 1):
        for k in range(1, n + 1):
            for j in range(1, n + 3 - i - k):
                length = table.row_length(i, j, k)
                expect_le("rows-nonneg", i, j, k, 0, length)
                if _defined_a(n, i, j + 1, k):
                    expect_le("rows-monotone-j", i, j, k, length, table.row_length(i, j + 1, k))
                if _defined_a(n, i + 1, j, k):
                    expect_le("rows-monotone-i", i, j, k, length, table.row_length(i + 1, j, k))
                if _defined_a(n, i, j, k + 1):
                    expect_le("rows-monotone-k", i, j, k + 1, table.row_length(i, j, k + 1), length)
                if _defined_a(n, i, j + 1, k) and _defined_a(n, i, j, k + 1):
                    expect_le("rows-cross-jk", i, j, k + 1,
                              table.row_length(i, j, k + 1), table.row_length(i, j + 1, k))
                if i >= 2 and k >= 2 and _defined_a(n, i - 1, j + 1, k - 1):
                    expect_le("rows-cross-ik", i, j, k,
                              length, table.row_length(i - 1, j + 1, k - 1))

    lr = lengths_riggings_forward(table)
    for (i, k), length in lr.lengths.items():
        if length == 0:
            expect_le("empty-row-rigging", i, k, 0, abs(lr.riggings[i, k]), 0)
    return out


def check_forward_inequalities(x: ForwardExponents) -> list:
    """Run the inequality suite on the table generated from x."""
    return check_forward_tables(extend_forward(x))
