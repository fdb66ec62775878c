"""Littlewood-Richardson coefficients by lattice-word tableau enumeration.

c^nu_{lam,mu} counts semistandard fillings of the skew shape nu/lam with
content mu whose reverse reading word (rows top to bottom, each row right
to left) is a lattice word.  The search runs cell by cell in reverse
reading order, so the lattice condition can be checked incrementally and
dead branches are cut early.

Single-row and single-column mu take the Pieri shortcut (horizontal or
vertical strip test) instead of the full search.

All arithmetic is on Python integers, so results are exact at any size.
"""

from functools import cache

from math import comb

from .partitions import Partition, contains, partitions_of, standard_tableau_count


def _is_horizontal_strip(inner: Partition, outer: Partition) -> bool:
    """True when outer/inner has at most one cell per column."""
    if not contains(outer, inner):
        return False
    for i in range(1, len(outer)):
        if outer[i] > (inner[i - 1] if i - 1 < len(inner) else 0):
            return False
    return True


def _is_vertical_strip(inner: Partition, outer: Partition) -> bool:
    """True when outer/inner has at most one cell per row."""
    if not contains(outer, inner):
        return False
    for i in range(len(outer)):
        if outer[i] - (inner[i] if i < len(inner) else 0) > 1:
            return False
    return True


def _count_lattice_fillings(lam: Partition, mu: Partition, nu: Partition) -> int:
    rows = len(nu)
    lam_ext = tuple(lam) + (0,) * (rows - len(lam))
    # Cells in reverse reading order: row by row, right to left.
    cells = []
    for r in range(rows):
        for c in range(nu[r] - 1, lam_ext[r] - 1, -1):
            cells.append((r, c))
    m = len(mu)
    counts = [0] * (m + 1)
    filling = {}
    total = 0

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = filling.get((r, c + 1))  # already placed (right neighbor)
        above = filling.get((r - 1, c)) if r > 0 and c >= lam_ext[r - 1] else None
        hi = right if right is not None else m
        lo = (above + 1) if above is not None else 1
        found = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            found += rec(idx + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return found

    total = rec(0)
    return total


@cache
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Littlewood-Richardson coefficient c^nu_{lam,mu}."""
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if not contains(nu, lam):
        return 0
    if not mu:
        return 1
    if not lam:
        return 1 if nu == mu else 0
    if len(mu) == 1:
        return 1 if _is_horizontal_strip(lam, nu) else 0
    if mu[0] == 1:
        return 1 if _is_vertical_strip(lam, nu) else 0
    # Put the smaller partition in the content slot; c is symmetric in lam, mu.
    if sum(mu) > sum(lam) and contains(nu, mu):
        lam, mu = mu, lam
    return _count_lattice_fillings(lam, mu, nu)


@cache
def lr_expand(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Full expansion of the induction product as {nu: c^nu_{lam,mu}}."""
    n = sum(lam) + sum(mu)
    out = {}
    for nu in partitions_of(n):
        if not contains(nu, lam):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def lr_mass_check(lam: Partition, mu: Partition) -> bool:
    """Degree identity: sum of c * deg(nu) over the expansion."""
    total = sum(c * standard_tableau_count(nu) for nu, c in lr_expand(lam, mu).items())
    expected = (
        comb(sum(lam) + sum(mu), sum(lam))
        * standard_tableau_count(lam)
        * standard_tableau_count(mu)
    )
    return total == expected
