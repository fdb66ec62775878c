"""Integer partitions, bipartitions, and the filtered label families.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the empty partition.  Bipartitions are pairs of partitions,
unordered bipartitions are pairs of *distinct* partitions stored in a
canonical order, and degenerate labels pair a partition of n/2 with a sign.

All enumeration functions return labels in a deterministic canonical order
(graded reverse-lexicographic for single partitions) so that serialized
output is stable across runs.
"""

from fractions import Fraction
from functools import cache
from itertools import chain, product
from math import comb, factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]
BiPartition = tuple[Partition, Partition]

EMPTY: Partition = ()


def is_partition(p) -> bool:
    """True when p is a tuple of weakly decreasing positive integers."""
    if not isinstance(p, tuple):
        return False
    return all(isinstance(x, int) and x > 0 for x in p) and all(
        p[i] >= p[i + 1] for i in range(len(p) - 1)
    )


def check_partition(p: Partition) -> Partition:
    if not is_partition(p):
        raise ValueError(f"not a partition: {p!r}")
    return p


def weight(p: Partition) -> int:
    return sum(p)


def sort_key(p: Partition) -> tuple:
    """Graded reverse-lexicographic key: by weight, then larger parts first."""
    return (sum(p), tuple(-x for x in p))


def transpose(p: Partition) -> Partition:
    """Conjugate partition (reflect the diagram across the main diagonal)."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def combine(p: Partition, q: Partition, mode: str) -> Partition:
    """Componentwise sum or sorted multiset union of two partitions."""
    if mode == "sum":
        k = max(len(p), len(q))
        return tuple(
            (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(k)
        )
    if mode == "union":
        return tuple(sorted(p + q, reverse=True))
    raise ValueError(f"unknown combine mode: {mode!r}")


def contains(big: Partition, small: Partition) -> bool:
    """Containment of Young diagrams: small fits inside big."""
    if len(small) > len(big):
        return False
    return all(small[i] <= big[i] for i in range(len(small)))


@cache
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n with parts bounded by max_part, grevlex order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def hook_product(p: Partition) -> int:
    pt = transpose(p)
    return prod(
        p[i] - j + pt[j] - i - 1 for i in range(len(p)) for j in range(p[i])
    )


def standard_tableau_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape p (hook length formula)."""
    n = sum(p)
    if n == 0:
        return 1
    num = factorial(n)
    den = hook_product(p)
    assert num % den == 0
    return num // den


def odd_part_count(p: Partition) -> int:
    return sum(1 for x in p if x % 2 == 1)


def halve(p: Partition) -> Partition:
    """Divide each part of an all-even partition by two."""
    if odd_part_count(p) != 0:
        raise ValueError(f"partition has odd parts: {p}")
    return tuple(x // 2 for x in p)


# --- bipartition helpers ---------------------------------------------------


def bipartitions_of(n: int) -> Iterator[BiPartition]:
    """Ordered pairs (lam, mu) with |lam| + |mu| = n, canonical order.

    Heavier first component comes first; this puts ((n), ()) at the front
    and ((), (1^n)) at the back, matching the usual character-table layout.
    """
    for k in range(n, -1, -1):
        for lam in partitions_of(k):
            for mu in partitions_of(n - k):
                yield (lam, mu)


def unordered_pair(lam: Partition, mu: Partition) -> BiPartition:
    """Canonical form of the unordered pair {lam, mu}; requires lam != mu."""
    if lam == mu:
        raise ValueError(f"unordered bipartition needs distinct parts: {lam}")
    return (lam, mu) if lam > mu else (mu, lam)


def unordered_bipartitions_of(n: int) -> Iterator[BiPartition]:
    seen = set()
    for lam, mu in bipartitions_of(n):
        if lam == mu:
            continue
        pair = unordered_pair(lam, mu)
        if pair not in seen:
            seen.add(pair)
            yield pair


# --- filtered families ------------------------------------------------------


def erows(n: int) -> tuple[Partition, ...]:
    """Partitions of n with all parts even."""
    return tuple(p for p in partitions_of(n) if odd_part_count(p) == 0)


def ecols(n: int) -> tuple[Partition, ...]:
    out = [transpose(p) for p in erows(n)]
    return tuple(sorted(out, key=sort_key))


def orows(n: int, q: int) -> tuple[Partition, ...]:
    """Partitions of n with exactly q odd parts."""
    if (n - q) % 2 != 0:
        raise ValueError(f"orows({n},{q}): parity mismatch")
    return tuple(p for p in partitions_of(n) if odd_part_count(p) == q)


def ocols(n: int, q: int) -> tuple[Partition, ...]:
    out = [transpose(p) for p in orows(n, q)]
    return tuple(sorted(out, key=sort_key))


def erows_b(n: int) -> tuple[BiPartition, ...]:
    """Bipartitions of n where both components have all even parts."""
    return tuple(
        (lam, mu)
        for lam, mu in bipartitions_of(n)
        if odd_part_count(lam) == 0 and odd_part_count(mu) == 0
    )


def ecols_b(n: int) -> tuple[BiPartition, ...]:
    out = [(transpose(lam), transpose(mu)) for lam, mu in erows_b(n)]
    order = {bp: i for i, bp in enumerate(bipartitions_of(n))}
    return tuple(sorted(out, key=order.__getitem__))


def orows_b(n: int, q: int) -> tuple[BiPartition, ...]:
    """Bipartitions of n whose multiset union has exactly q odd parts."""
    if (n - q) % 2 != 0:
        raise ValueError(f"orows_b({n},{q}): parity mismatch")
    return tuple(
        (lam, mu)
        for lam, mu in bipartitions_of(n)
        if odd_part_count(lam) + odd_part_count(mu) == q
    )


def ocols_b(n: int, q: int) -> tuple[BiPartition, ...]:
    out = [(transpose(lam), transpose(mu)) for lam, mu in orows_b(n, q)]
    order = {bp: i for i, bp in enumerate(bipartitions_of(n))}
    return tuple(sorted(out, key=order.__getitem__))


def erows_d(n: int) -> tuple[BiPartition, ...]:
    """Unordered bipartitions {lam, mu} of n, lam != mu, all parts even."""
    return tuple(
        pair
        for pair in unordered_bipartitions_of(n)
        if odd_part_count(pair[0]) == 0 and odd_part_count(pair[1]) == 0
    )


def ecols_d(n: int) -> tuple[BiPartition, ...]:
    out = {unordered_pair(transpose(a), transpose(b)) for a, b in erows_d(n)}
    return tuple(p for p in unordered_bipartitions_of(n) if p in out)


def orows_d(n: int, q: int) -> tuple[BiPartition, ...]:
    if (n - q) % 2 != 0:
        raise ValueError(f"orows_d({n},{q}): parity mismatch")
    return tuple(
        pair
        for pair in unordered_bipartitions_of(n)
        if odd_part_count(pair[0]) + odd_part_count(pair[1]) == q
    )


def ocols_d(n: int, q: int) -> tuple[BiPartition, ...]:
    out = {unordered_pair(transpose(a), transpose(b)) for a, b in orows_d(n, q)}
    return tuple(p for p in unordered_bipartitions_of(n) if p in out)


def degenerate_labels(n: int) -> tuple[tuple[Partition, str], ...]:
    """All (core, sign) labels for even ambient rank n."""
    if n % 2 != 0:
        raise ValueError(f"degenerate labels need even rank, got {n}")
    out = []
    for core in partitions_of(n // 2):
        out.append((core, "+"))
        out.append((core, "-"))
    return tuple(out)


_FAMILIES = {
    "all": lambda n: partitions_of(n),
    "erows": lambda n: erows(n),
    "ecols": lambda n: ecols(n),
    "erowsB": lambda n: erows_b(n),
    "ecolsB": lambda n: ecols_b(n),
    "erowsD": lambda n: erows_d(n),
    "ecolsD": lambda n: ecols_d(n),
    "bipartitions": lambda n: tuple(bipartitions_of(n)),
    "unordered": lambda n: tuple(unordered_bipartitions_of(n)),
    "degenerate": lambda n: degenerate_labels(n),
}

_Q_FAMILIES = {
    "orows": orows,
    "ocols": ocols,
    "orowsB": orows_b,
    "ocolsB": ocols_b,
    "orowsD": orows_d,
    "ocolsD": ocols_d,
}


def enumerate_family(n: int, family: str, q: int | None = None) -> Sequence:
    """Dispatch over every label family by name."""
    if n < 0:
        raise ValueError(f"negative rank: {n}")
    if family in _FAMILIES:
        if q is not None:
            raise ValueError(f"family {family!r} takes no q")
        return _FAMILIES[family](n)
    if family in _Q_FAMILIES:
        if q is None:
            raise ValueError(f"family {family!r} needs q")
        return _Q_FAMILIES[family](n, q)
    raise ValueError(f"unknown family: {family!r}")


# --- text forms --------------------------------------------------------------


def format_partition(p: Partition) -> str:
    if not p:
        return "()"
    return "(" + ",".join(str(x) for x in p) + ")"


def format_bipartition(bp: BiPartition) -> str:
    return "(" + format_partition(bp[0]) + "," + format_partition(bp[1]) + ")"


def format_unordered(bp: BiPartition) -> str:
    return "{" + format_partition(bp[0]) + "," + format_partition(bp[1]) + "}"


def format_degenerate(core: Partition, sign: str) -> str:
    return "[" + format_partition(core) + "," + sign + "]"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad partition literal: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return ()
    p = tuple(int(x) for x in inner.split(","))
    return check_partition(p)
