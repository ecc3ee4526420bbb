"""Finite highest weight crystals cut out of the infinity model.

A dominant weight is a tuple of n non-negative integers.  The triangles
surviving the weight inequalities parametrize the finite crystal; mapped
through the closed forms they give its two rigged-configuration
descriptions, which must coincide as sets.  An independent semistandard
tableau count serves as the dimension oracle.
"""

import itertools
from typing import NamedTuple

from .forward import ForwardExponents, rc_from_forward, validate_forward
from .rc import RiggedConfiguration
from .reverse import ReverseExponents, rc_from_reverse, validate_reverse


class LambdaElement(NamedTuple):
    """A member of the finite crystal: rigged configuration tensored with the formal tag."""
    rc: RiggedConfiguration
    tag: tuple


def validate_weight(values, n: int) -> tuple:
    lam = tuple(int(v) for v in values)
    if len(lam) != n:
        raise ValueError(f"weight needs {n} values, got {len(lam)}")
    if any(v < 0 for v in lam):
        raise ValueError(f"weight values must be non-negative: {lam}")
    return lam


def in_xlambda(x: ForwardExponents, lam) -> bool:
    """Weight inequalities on a forward triangle (x[0,*] read as zero)."""
    n = x.n
    lam = validate_weight(lam, n)

    def xv(i, t):
        return x[i, t] if i >= 1 else 0

    for i in range(1, n + 1):
        for j in range(i, n + 1):
            lhs = sum(xv(i, t) - xv(i - 1, t) for t in range(1, n - j + 2))
            rhs = lam[i - 1] + sum(xv(i + 1, t) - xv(i, t) for t in range(1, n - j + 1))
            if lhs > rhs:
                return False
    return True


def in_psilambda(psi: ReverseExponents, lam) -> bool:
    """Mirror inequalities on a reverse triangle (psi[n+1,*] read as zero)."""
    n = psi.n
    lam = validate_weight(lam, n)

    def pv(i, t):
        return psi[i, t] if i <= n else 0

    for i in range(1, n + 1):
        for j in range(1, i + 1):
            lhs = sum(pv(i, t) - pv(i + 1, t) for t in range(1, j + 1))
            rhs = lam[i - 1] + sum(pv(i - 1, t) - pv(i, t) for t in range(1, j))
            if lhs > rhs:
                return False
    return True


def enumerate_xlambda(lam, n: int):
    """All forward triangles satisfying the inequalities; entries live in 0..sum(lam)."""
    lam = validate_weight(lam, n)
    bound = sum(lam)
    column_choices = [
        [list(c) for c in itertools.combinations_with_replacement(range(bound + 1), n - j + 1)]
        for j in range(1, n + 1)
    ]
    out = []
    for combo in itertools.product(*column_choices):
        x = validate_forward(list(combo), n)
        if in_xlambda(x, lam):
            out.append(x)
    return out


def enumerate_psilambda(lam, n: int):
    """Mirror enumeration over weakly decreasing triangles."""
    lam = validate_weight(lam, n)
    bound = sum(lam)
    column_choices = [
        [list(reversed(c)) for c in itertools.combinations_with_replacement(range(bound + 1), n - j + 1)]
        for j in range(1, n + 1)
    ]
    out = []
    for combo in itertools.product(*column_choices):
        psi = validate_reverse(list(combo), n)
        if in_psilambda(psi, lam):
            out.append(psi)
    return out


def blambda_rc_set(lam, n: int, side: str):
    """The finite crystal as a set of tagged rigged configurations."""
    lam = validate_weight(lam, n)
    if side == "forward":
        return {LambdaElement(rc_from_forward(x), lam) for x in enumerate_xlambda(lam, n)}
    if side == "reverse":
        return {LambdaElement(rc_from_reverse(p), lam) for p in enumerate_psilambda(lam, n)}
    raise ValueError(f"side must be forward or reverse, got {side!r}")


def ssyt_count_oracle(lam, n: int) -> int:
    """Brute-force count of semistandard fillings of the shape with lam[i-1] columns of height i.

    Entries run over 1..n+1; rows weakly increase, columns strictly
    increase.  Independent of every crystal construction in this package.
    """
    lam = validate_weight(lam, n)
    shape = [sum(lam[r - 1:]) for r in range(1, n + 1)]
    shape = [length for length in shape if length > 0]
    if not shape:
        return 1
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    grid = [[0] * length for length in shape]
    max_entry = n + 1

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        total = 0
        for v in range(lo, max_entry + 1):
            grid[r][c] = v
            total += fill(idx + 1)
        grid[r][c] = 0
        return total

    return fill(0)
