"""Marginally large tableaux and marginally large reverse tableaux.

Both models store only off-diagonal box counts; the explicit grids exist
transiently for the signature rule and for rendering.

Forward tableaux are English-notation semistandard: row r starts with a run
of r's one longer than row r+1, followed by c[r,y] boxes of each value
y > r.  Reverse tableaux are bottom-anchored: row lengths grow downward,
every column touches the bottom row, rows weakly decrease and columns
strictly increase.  A reverse tableau decomposes into blocks x = n..1, each
block holding the part-x columns (leftover entries x+r+1-n at grid row r,
padded on top by the basic prefix) followed by one basic x-column.
"""

from .errors import MalformedInputError
from .forward import ForwardExponents
from .reverse import ReverseExponents


class MarginallyLargeTableau:
    """counts[r-1][y-r-1] = number of y-boxes in row r, for y = r+1 .. n+1."""

    __slots__ = ("n", "counts")

    def __init__(self, n: int, counts):
        counts = tuple(tuple(int(v) for v in row) for row in counts)
        if len(counts) != n or any(len(counts[r - 1]) != n - r + 1 for r in range(1, n + 1)):
            raise ValueError("counts must be ragged rows of lengths n, n-1, ..., 1")
        if any(v < 0 for row in counts for v in row):
            raise ValueError("negative box count")
        self.n = n
        self.counts = counts

    def count(self, r: int, y: int) -> int:
        return self.counts[r - 1][y - r - 1]

    def __eq__(self, other):
        if not isinstance(other, MarginallyLargeTableau):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def __hash__(self):
        return hash(("mlt", self.n, self.counts))

    def __repr__(self):
        return f"MLT(n={self.n}, counts={self.counts})"


class MarginallyLargeReverseTableau:
    """counts[x-1][y-1] = number of (x-y+2)-boxes in the y-th row from the bottom of part x."""

    __slots__ = ("n", "counts")

    def __init__(self, n: int, counts):
        counts = tuple(tuple(int(v) for v in row) for row in counts)
        if len(counts) != n or any(len(counts[x - 1]) != x for x in range(1, n + 1)):
            raise ValueError("counts must be ragged rows of lengths 1, 2, ..., n")
        for x in range(1, n + 1):
            row = counts[x - 1]
            if any(v < 0 for v in row):
                raise ValueError("negative box count")
            for y in range(1, x):
                if row[y - 1] < row[y]:
                    raise ValueError(
                        f"part {x} counts must weakly decrease upward: {row}")
        self.n = n
        self.counts = counts

    def count(self, x: int, y: int) -> int:
        return self.counts[x - 1][y - 1]

    def __eq__(self, other):
        if not isinstance(other, MarginallyLargeReverseTableau):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def __hash__(self):
        return hash(("mlrt", self.n, self.counts))

    def __repr__(self):
        return f"MLRT(n={self.n}, counts={self.counts})"


# ---------------------------------------------------------------------------
# forward tableaux


def highest_mlt(n: int) -> MarginallyLargeTableau:
    """Just the n basic columns: row i holds i repeated n-i+1 times."""
    return MarginallyLargeTableau(n, [[0] * (n - r + 1) for r in range(1, n + 1)])


def mlt_from_forward(x: ForwardExponents) -> MarginallyLargeTableau:
    """c[r,y] = x[r, n-y+2] - x[r-1, n-y+2]; weak increase makes every count >= 0."""
    n = x.n
    counts = []
    for r in range(1, n + 1):
        row = []
        for y in range(r + 1, n + 2):
            j = n - y + 2
            above = x[r - 1, j] if r > 1 else 0
            row.append(x[r, j] - above)
        counts.append(row)
    return MarginallyLargeTableau(n, counts)


def forward_from_mlt(T: MarginallyLargeTableau) -> ForwardExponents:
    """x[i,j] = cumulative count of (n-j+2)-boxes in the top i rows."""
    n = T.n
    cols = []
    for j in range(1, n + 1):
        y = n - j + 2
        col, running = [], 0
        for i in range(1, n - j + 2):
            running += T.count(i, y)
            col.append(running)
        cols.append(col)
    return ForwardExponents(n, cols)


def mlt_grid(T: MarginallyLargeTableau):
    """Explicit rows, top row first; row r = r-run (marginality) then counted boxes."""
    n = T.n
    lengths = [0] * (n + 2)
    for r in range(n, 0, -1):
        lengths[r] = lengths[r + 1] + 1 + sum(T.counts[r - 1])
    rows = []
    for r in range(1, n + 1):
        row = [r] * (lengths[r + 1] + 1)
        for y in range(r + 1, n + 2):
            row.extend([y] * T.count(r, y))
        rows.append(row)
    return rows


def _mlt_reading(rows):
    """Far-eastern reading: columns right to left, top to bottom within each column."""
    width = len(rows[0]) if rows else 0
    order = []
    for c in range(width - 1, -1, -1):
        for r, row in enumerate(rows):
            if c < len(row):
                order.append((r, c))
    return order


def _signature_select(rows, order, i):
    """Bracket '+' (= i) against '-' (= i+1) along the reading; position of the leftmost surviving '+'."""
    stack = []
    for pos in order:
        v = rows[pos[0]][pos[1]]
        if v == i:
            stack.append(pos)
        elif v == i + 1 and stack:
            stack.pop()
    return stack[0] if stack else None


def apply_f_mlt(T: MarginallyLargeTableau, i: int) -> MarginallyLargeTableau:
    """Signature rule on the expanded grid, then count re-normalization."""
    if not 1 <= i <= T.n:
        raise ValueError(f"operator index {i} out of range 1..{T.n}")
    rows = mlt_grid(T)
    pos = _signature_select(rows, _mlt_reading(rows), i)
    if pos is None:
        raise RuntimeError(f"no unbracketed {i}-box: tableau is outside the model")
    rows[pos[0]][pos[1]] = i + 1
    counts = [[0] * (T.n - r + 1) for r in range(1, T.n + 1)]
    for r, row in enumerate(rows, start=1):
        for v in row:
            if v > r:
                counts[r - 1][v - r - 1] += 1
    return MarginallyLargeTableau(T.n, counts)


# ---------------------------------------------------------------------------
# reverse tableaux


def highest_mlrt(n: int) -> MarginallyLargeReverseTableau:
    """Just the n basic columns: row r reads r, r-1, ..., 1."""
    return MarginallyLargeReverseTableau(n, [[0] * x for x in range(1, n + 1)])


def mlrt_from_reverse(psi: ReverseExponents) -> MarginallyLargeReverseTableau:
    """d[x,y] = sum over j <= x-y+1 of psi[x,j] - psi[x+1,j] (psi[n+1,*] = 0)."""
    n = psi.n

    def entry(i, j):
        return psi[i, j] if i <= n else 0

    counts = []
    for x in range(1, n + 1):
        counts.append([sum(entry(x, j) - entry(x + 1, j) for j in range(1, x - y + 2))
                       for y in range(1, x + 1)])
    return MarginallyLargeReverseTableau(n, counts)


def reverse_from_mlrt(R: MarginallyLargeReverseTableau) -> ReverseExponents:
    """Telescope the count differences back into psi, from part n down."""
    n = R.n
    psi = {}
    for j in range(1, n + 1):
        below = 0
        for x in range(n, j - 1, -1):
            y = x - j + 1
            step = R.count(x, y) - (R.count(x, y + 1) if y + 1 <= x else 0)
            psi[x, j] = below + step
            below = psi[x, j]
    return ReverseExponents(n, [[psi[i, j] for i in range(j, n + 1)] for j in range(1, n + 1)])


def mlrt_grid(R: MarginallyLargeReverseTableau):
    """Explicit rows, top row first; lengths grow downward, columns bottom-anchored.

    Grid row r collects, per block x = n down to n-r+1, the leftover boxes
    (value x+r+1-n) whose mini-columns reach this height, then the basic
    prefix of the remaining block columns and of the basic x-column itself
    (both show value x+r-n at this row).
    """
    n = R.n
    rows = []
    for r in range(1, n + 1):
        row = []
        for x in range(n, n - r, -1):
            leftover = R.count(x, n - r + 1)
            row.extend([x + r + 1 - n] * leftover)
            row.extend([x + r - n] * (R.count(x, 1) - leftover + 1))
        rows.append(row)
    return rows


def _mlrt_reading(rows):
    """Mirror reading: columns left to right, top to bottom within each column."""
    width = len(rows[-1]) if rows else 0
    order = []
    for c in range(width):
        for r, row in enumerate(rows):
            if c < len(row):
                order.append((r, c))
    return order


def apply_f_mlrt(R: MarginallyLargeReverseTableau, i: int) -> MarginallyLargeReverseTableau:
    """Signature rule on the expanded grid, then leftover recount."""
    if not 1 <= i <= R.n:
        raise ValueError(f"operator index {i} out of range 1..{R.n}")
    n = R.n
    rows = mlrt_grid(R)
    pos = _signature_select(rows, _mlrt_reading(rows), i)
    if pos is None:
        raise RuntimeError(f"no unbracketed {i}-box: tableau is outside the model")
    rows[pos[0]][pos[1]] = i + 1

    heights = {}
    for row in rows:
        for c in range(len(row)):
            heights[c] = heights.get(c, 0) + 1
    counts = [[0] * x for x in range(1, n + 1)]
    for r, row in enumerate(rows, start=1):
        for c, v in enumerate(row):
            basic = r + heights[c] - n
            if v != basic:
                counts[v + n - r - 2][n - r] += 1
    return MarginallyLargeReverseTableau(n, counts)


# ---------------------------------------------------------------------------
# rendering and serialization


def ascii_art(obj) -> str:
    """Bracketed rows, English notation, top row first."""
    rows = mlt_grid(obj) if isinstance(obj, MarginallyLargeTableau) else mlrt_grid(obj)
    return "\n".join("".join(f"[{v}]" for v in row) for row in rows)


def tableau_to_json(obj) -> dict:
    """Counts keyed by grid coordinates (row, value), zero counts omitted."""
    items = []
    if isinstance(obj, MarginallyLargeTableau):
        model = "mlt"
        for r in range(1, obj.n + 1):
            for y in range(r + 1, obj.n + 2):
                if obj.count(r, y):
                    items.append({"row": r, "value": y, "count": obj.count(r, y)})
    elif isinstance(obj, MarginallyLargeReverseTableau):
        model = "mlrt"
        for x in range(1, obj.n + 1):
            for y in range(1, x + 1):
                if obj.count(x, y):
                    items.append({"row": obj.n - y + 1, "value": x - y + 2,
                                  "count": obj.count(x, y)})
    else:
        raise TypeError(f"not a tableau: {obj!r}")
    items.sort(key=lambda d: (d["row"], d["value"]))
    return {"n": obj.n, "model": model, "counts": items}


def tableau_from_json(obj):
    """Parse either tableau kind; the "model" field disambiguates the two schemas."""
    try:
        n = int(obj["n"])
        model = obj["model"]
        raw = obj["counts"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad tableau object: {exc}") from exc
    if n < 1 or model not in ("mlt", "mlrt") or not isinstance(raw, list):
        raise MalformedInputError("tableau needs n >= 1, model mlt|mlrt and a counts list")
    seen = set()
    cells = []
    for cell in raw:
        try:
            r, y, c = int(cell["row"]), int(cell["value"]), int(cell["count"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad count cell: {cell!r}") from exc
        if c < 0 or (r, y) in seen:
            raise MalformedInputError(f"bad or duplicate count cell: {cell!r}")
        seen.add((r, y))
        cells.append((r, y, c))
    if model == "mlt":
        counts = [[0] * (n - r + 1) for r in range(1, n + 1)]
        for r, y, c in cells:
            if not (1 <= r <= n and r + 1 <= y <= n + 1):
                raise MalformedInputError(f"cell ({r},{y}) outside the mlt range")
            counts[r - 1][y - r - 1] = c
        return MarginallyLargeTableau(n, counts)
    counts = [[0] * x for x in range(1, n + 1)]
    for r, v, c in cells:
        x, y = v + n - r - 1, n - r + 1
        if not (1 <= r <= n and 2 <= v <= r + 1):
            raise MalformedInputError(f"cell ({r},{v}) outside the mlrt range")
        counts[x - 1][y - 1] = c
    try:
        return MarginallyLargeReverseTableau(n, counts)
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from exc
