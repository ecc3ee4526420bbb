"""Rigged configurations and the lowering operator acting on them.

A rigged configuration of rank n is an n-tuple of rigged partitions; a
rigged partition is a multiset of rows, each row a (length, rigging) pair
with length >= 1.  Rows are stored in canonical order (length descending,
rigging ascending) so that equality and hashing are multiset equality.
"""

from typing import Iterable, NamedTuple

from .errors import MalformedInputError


class RiggedRow(NamedTuple):
    length: int
    rigging: int


RiggedPartition = tuple  # tuple[RiggedRow, ...] in canonical order
RootWeight = tuple       # tuple[int, ...], box count per part


def _canonical(rows: Iterable) -> RiggedPartition:
    """Sort rows by length descending, rigging ascending; drop nothing."""
    return tuple(sorted((RiggedRow(int(a), int(b)) for a, b in rows),
                        key=lambda row: (-row.length, row.rigging)))


class RiggedConfiguration:
    """Immutable n-tuple of canonically ordered rigged partitions."""

    __slots__ = ("n", "parts", "_hash")

    def __init__(self, n: int, parts: Iterable[Iterable]):
        if n < 1:
            raise ValueError(f"rank must be >= 1, got {n}")
        parts = tuple(_canonical(part) for part in parts)
        if len(parts) != n:
            raise ValueError(f"expected {n} parts, got {len(parts)}")
        for idx, part in enumerate(parts, start=1):
            for row in part:
                if row.length < 1:
                    raise ValueError(f"part {idx} stores a row of length {row.length}")
        self.n = n
        self.parts = parts
        self._hash = hash((n, parts))

    def __eq__(self, other):
        if not isinstance(other, RiggedConfiguration):
            return NotImplemented
        return self.n == other.n and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __repr__(self):
        inner = ", ".join(
            "{" + ", ".join(f"({r.length},{r.rigging})" for r in part) + "}"
            for part in self.parts
        )
        return f"RC(n={self.n}; {inner})"

    def height(self, i: int) -> int:
        """Number of rows of part i (1-based)."""
        return len(self.parts[i - 1])


def empty_rc(n: int) -> RiggedConfiguration:
    """The highest weight element: n empty rigged partitions."""
    return RiggedConfiguration(n, [()] * n)


def apply_f(rc: RiggedConfiguration, i: int) -> RiggedConfiguration:
    """Lowering operator: add one box to part i and adjust riggings.

    Selection: the row of part i carrying the smallest non-positive rigging,
    longest such row first; with no non-positive rigging a fresh (1, -1) row
    appears.  Writing ell for the selected row's length *before* the new box,
    every other row of part i longer than ell has its rigging dropped by 2,
    and every row of parts i-1, i+1 longer than ell gains 1.
    """
    if not 1 <= i <= rc.n:
        raise ValueError(f"operator index {i} out of range 1..{rc.n}")
    part = list(rc.parts[i - 1])

    candidates = [row for row in part if row.rigging <= 0]
    if candidates:
        min_rig = min(row.rigging for row in candidates)
        selected = max((row for row in candidates if row.rigging == min_rig),
                       key=lambda row: row.length)
        ell = selected.length
        part.remove(selected)
        new_row = RiggedRow(ell + 1, selected.rigging - 1)
    else:
        ell = 0
        new_row = RiggedRow(1, -1)

    part = [RiggedRow(r.length, r.rigging - 2) if r.length > ell else r
            for r in part]
    part.append(new_row)

    parts = list(rc.parts)
    parts[i - 1] = part
    for j in (i - 1, i + 1):
        if 1 <= j <= rc.n:
            parts[j - 1] = [
                RiggedRow(r.length, r.rigging + 1) if r.length > ell else r
                for r in parts[j - 1]
            ]
    return RiggedConfiguration(rc.n, parts)


def apply_f_word(rc: RiggedConfiguration, word: Iterable[int]) -> RiggedConfiguration:
    """Fold apply_f over a word given in application order."""
    for i in word:
        rc = apply_f(rc, i)
    return rc


def weight(rc: RiggedConfiguration) -> RootWeight:
    """Box count of each part, i.e. the element's depth in each simple root."""
    return tuple(sum(row.length for row in part) for part in rc.parts)


def rc_to_json(rc: RiggedConfiguration) -> dict:
    return {
        "n": rc.n,
        "parts": [[{"len": row.length, "rig": row.rigging} for row in part]
                  for part in rc.parts],
    }


def rc_from_json(obj: dict) -> RiggedConfiguration:
    """Parse the rc schema; rows must be canonical and of positive length."""
    try:
        n = int(obj["n"])
        raw_parts = obj["parts"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad rigged configuration object: {exc}") from exc
    if not isinstance(raw_parts, list) or n < 1 or len(raw_parts) != n:
        raise MalformedInputError("rigged configuration needs exactly n parts")
    parts = []
    for idx, raw in enumerate(raw_parts, start=1):
        rows = []
        for cell in raw:
            try:
                rows.append(RiggedRow(int(cell["len"]), int(cell["rig"])))
            except (KeyError, TypeError, ValueError) as exc:
                raise MalformedInputError(f"bad row in part {idx}: {cell!r}") from exc
        for row in rows:
            if row.length <= 0:
                raise MalformedInputError(f"part {idx} has a row of length {row.length}")
        if tuple(rows) != _canonical(rows):
            raise MalformedInputError(f"part {idx} rows are not in canonical order")
        parts.append(rows)
    return RiggedConfiguration(n, parts)
