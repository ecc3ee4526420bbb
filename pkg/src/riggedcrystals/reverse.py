"""Reverse exponent triangles: the mirror parametrization of the same crystal.

A reverse triangle psi has entries psi[i,j] on 1 <= j <= n, j <= i <= n,
weakly decreasing in i.  The extension table M, the row-length/rigging
closed form and the recovery run exactly as on the forward side with the
i-neighbour flipped from i-1 to i+1 and the index ranges transposed.
"""

from .errors import HeightBoundError, InvalidExponentsError
from .forward import Membership
from .rc import RiggedConfiguration, RiggedRow


class ReverseExponents:
    """Weakly decreasing triangle; cols[j-1][i-j] = psi[i,j]."""

    __slots__ = ("n", "cols")

    def __init__(self, n: int, cols):
        self.n = n
        self.cols = tuple(tuple(int(v) for v in col) for col in cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.cols[j - 1][i - j]

    def __eq__(self, other):
        if not isinstance(other, ReverseExponents):
            return NotImplemented
        return self.n == other.n and self.cols == other.cols

    def __hash__(self):
        return hash((self.n, self.cols))

    def __repr__(self):
        return f"ReverseExponents(n={self.n}, cols={self.cols})"

    def total(self) -> int:
        return sum(sum(col) for col in self.cols)


def validate_reverse(raw, n: int) -> ReverseExponents:
    """Check shape (column j holds i = j..n), non-negativity and weak decrease in i."""
    cols = [list(col) for col in raw]
    if len(cols) != n:
        raise InvalidExponentsError(f"expected {n} columns, got {len(cols)}")
    for j, col in enumerate(cols, start=1):
        if len(col) != n - j + 1:
            raise InvalidExponentsError(
                f"column j={j} must hold {n - j + 1} entries, got {len(col)}")
        for offset, value in enumerate(col):
            if not isinstance(value, int) or value < 0:
                raise InvalidExponentsError(
                    f"entry ({j + offset},{j}) = {value!r} is not a non-negative integer")
        for offset in range(1, len(col)):
            if col[offset - 1] < col[offset]:
                raise InvalidExponentsError(
                    f"weak decrease fails at ({j + offset - 1},{j}) >= ({j + offset},{j}):"
                    f" {col[offset - 1]} < {col[offset]}")
    return ReverseExponents(n, cols)


def word_of_reverse(psi: ReverseExponents):
    """Application-order word: waves j = 1..n, within a wave index i = n down to j."""
    word = []
    for j in range(1, psi.n + 1):
        for i in range(psi.n, j - 1, -1):
            word.extend([i] * psi[i, j])
    return word


class ReverseExtendedTable:
    """M[i,j,k] table; entries live on j + k <= i + 1 (k >= 1) plus the k = 0 layer j <= i."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: dict):
        self.n = n
        self.entries = entries

    def __getitem__(self, ijk):
        return self.entries[ijk]

    def __contains__(self, ijk):
        return ijk in self.entries

    def row_sum(self, i: int, j: int, k: int) -> int:
        return sum(self.entries[i, t, k] for t in range(1, j + 1))

    def row_length(self, i: int, j: int, k: int) -> int:
        """Mirror of the forward row-length combination; 0 at j = 0."""
        if j == 0:
            return 0
        return self.row_sum(i, j, k - 1) - self.row_sum(i, j - 1, k)


def extend_reverse(psi: ReverseExponents) -> ReverseExtendedTable:
    """Mirror extension: boundary zeros at i = n, min-formula with neighbour i+1."""
    n = psi.n
    entries = {}
    for j in range(1, n + 1):
        for i in range(j, n + 1):
            entries[i, j, 0] = psi[i, j]
    table = ReverseExtendedTable(n, entries)
    for k in range(1, n + 1):
        for j in range(1, n - k + 2):
            entries[n, j, k] = 0
            for i in range(n - 1, j + k - 2, -1):
                entries[i, j, k] = min(
                    entries[i + 1, j + 1, k - 1],
                    table.row_sum(i, j, k - 1)
                    - table.row_sum(i + 1, j, k - 1)
                    - table.row_sum(i, j - 1, k)
                    + table.row_sum(i + 1, j, k),
                )
    return table


def lengths_riggings_reverse(table: ReverseExtendedTable):
    """Row lengths Lam[i,k] and riggings P[i,k] for 1 <= k <= i."""
    n = table.n
    lam, rig = {}, {}
    for i in range(1, n + 1):
        for k in range(1, i + 1):
            j = i - k + 1
            lam[i, k] = table.row_length(i, j, k)
            rig[i, k] = -table[i, j, k - 1] + table[i, j, k]
    return lam, rig


def rc_from_reverse(psi: ReverseExponents) -> RiggedConfiguration:
    """Closed-form rigged configuration labelled by psi (zero-length rows dropped)."""
    lam, rig = lengths_riggings_reverse(extend_reverse(psi))
    parts = []
    for i in range(1, psi.n + 1):
        parts.append([RiggedRow(lam[i, k], rig[i, k])
                      for k in range(1, i + 1) if lam[i, k] > 0])
    return RiggedConfiguration(psi.n, parts)


def _length_rigging_of_rc(rc: RiggedConfiguration):
    n = rc.n
    lam, rig = {}, {}
    for i in range(1, n + 1):
        part = rc.parts[i - 1]
        if len(part) > min(i, n - i + 1):
            raise HeightBoundError(
                f"part {i} has {len(part)} rows, bound is {min(i, n - i + 1)}")
        for k in range(1, i + 1):
            if k <= len(part):
                lam[i, k] = part[k - 1].length
                rig[i, k] = part[k - 1].rigging
            else:
                lam[i, k] = 0
                rig[i, k] = 0
    return lam, rig


def recover_reverse(rc: RiggedConfiguration):
    """Mirror of the forward recovery, filling diagonals i-j-k = t upward in t."""
    lam, rig = _length_rigging_of_rc(rc)
    n = rc.n
    M = {}

    def msum(i, k, lo, hi):
        return sum(M[i, t, k] for t in range(lo, hi + 1))

    for k in range(0, n):
        i = k + 1
        M[i, 1, k] = lam[i, k + 1]
        for j in range(2, n - k + 1):
            i = j + k
            M[i, j, k] = (rig[i - 1, k + 1] + M[i - 1, j - 1, k]
                          - min(0, lam[i - 1, k + 1] - lam[i, k + 1]))
    for t in range(1, n):
        for k in range(0, n - t):
            i = 1 + k + t
            M[i, 1, k] = lam[i, k + 1] - msum(i, k, 2, 1 + t) + msum(i, k + 1, 1, t)
            for j in range(2, n - k - t + 1):
                i = j + k + t
                M[i, j, k] = M[i - 1, j - 1, k + 1] - min(
                    0,
                    lam[i - 1, k + 1] - lam[i, k + 1]
                    - msum(i - 1, k, j, j + t - 1)
                    + msum(i - 1, k + 1, j - 1, j + t - 2)
                    + msum(i, k, j + 1, j + t)
                    - msum(i, k + 1, j, j + t - 1),
                )
    return [[M[i, j, 0] for i in range(j, n + 1)] for j in range(1, n + 1)]


def is_member_rcinf_reverse(rc: RiggedConfiguration) -> Membership:
    """Mirror membership test: recover, validate, rebuild, compare."""
    try:
        raw = recover_reverse(rc)
    except HeightBoundError:
        return Membership(False, None, "height")
    try:
        psi = validate_reverse(raw, rc.n)
    except InvalidExponentsError:
        return Membership(False, None, "validate")
    if rc_from_reverse(psi) == rc:
        return Membership(True, psi, None)
    return Membership(False, None, "rebuild")


def _defined_m(n: int, i: int, j: int, k: int) -> bool:
    if i < 1 or i > n or j < 1 or k < 0:
        return False
    if k == 0:
        return j <= i
    return j <= n - k + 1 and i >= j + k - 1


def _defined_b(n: int, i: int, j: int, k: int) -> bool:
    if i < 1 or i > n or j < 0 or k < 1:
        return False
    return j + k <= i + 1


def check_reverse_tables(table: ReverseExtendedTable) -> list:
    """Mirrored inequality suite (index substitutions of the forward one)."""
    n = table.n
    out = []

    def expect_le(name, i, j, k, lhs, rhs):
        if lhs > rhs:
            out.append({"lemma": name, "indices": [i, j, k], "lhs": lhs, "rhs": rhs})

    for (i, j, k), value in table.entries.items():
        expect_le("table-nonneg-rev", i, j, k, 0, value)
        if _defined_m(n, i + 1, j + 1, k - 1):
            expect_le("table-min-arg-rev", i, j, k, value, table[i + 1, j + 1, k - 1])
        if _defined_m(n, i - 1, j, k):
            expect_le("table-monotone-i-rev", i, j, k, value, table[i - 1, j, k])
        if k >= 1 and _defined_m(n, i, j + 1, k - 1):
            expect_le("table-shift-rev", i, j, k, value, table[i, j + 1, k - 1])
        if k >= 1 and i >= n - k + 1:
            expect_le("table-zero-wedge-rev", i, j, k, value, 0)

    for i in range(1, n + 1):
        for k in range(1, n + 1):
            for j in range(1, i - k + 2):
                length = table.row_length(i, j, k)
                expect_le("rows-nonneg-rev", i, j, k, 0, length)
                if _defined_b(n, i, j + 1, k):
                    expect_le("rows-monotone-j-rev", i, j, k, length, table.row_length(i, j + 1, k))
                if _defined_b(n, i - 1, j, k):
                    expect_le("rows-monotone-i-rev", i, j, k, length, table.row_length(i - 1, j, k))
                if _defined_b(n, i, j, k + 1):
                    expect_le("rows-monotone-k-rev", i, j, k + 1, table.row_length(i, j, k + 1), length)
                if _defined_b(n, i, j + 1, k) and _defined_b(n, i, j, k + 1):
                    expect_le("rows-cross-jk-rev", i, j, k + 1,
                              table.row_length(i, j, k + 1), table.row_length(i, j + 1, k))
                if i + 1 <= n and k >= 2 and _defined_b(n, i + 1, j + 1, k - 1):
                    expect_le("rows-cross-ik-rev", i, j, k,
                              length, table.row_length(i + 1, j + 1, k - 1))

    lam, rig = lengths_riggings_reverse(table)
    for (i, k), length in lam.items():
        if length == 0:
            expect_le("empty-row-rigging-rev", i, k, 0, abs(rig[i, k]), 0)
    return out


def check_reverse_inequalities(psi: ReverseExponents) -> list:
    """Run the mirrored suite on the table generated from psi."""
    return check_reverse_tables(extend_reverse(psi))
