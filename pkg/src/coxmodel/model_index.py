"""Model indexes: validity, rewrites, equivalence, and their characters.

An index packages a model triple for one of the classical families as a
list of columns (alpha, beta, gamma): alpha is the block size, beta names
the twisted involution class inside the block, gamma the linear character.
Type A allows any number of columns (alpha = 0 only in the two-column
form); types B and D have exactly two columns, the first containing the
sign-change end of the diagram.  In type D the second alpha may be
negative, meaning the diagram-flipped copy of the symmetric block.

Beta symbols: "id", "idplus", "fpf", "fpfplus", "fpfdiamond",
("pq", p, q), ("tri", p, q, "cw"/"ccw").  Gamma symbols: "triv", "sgn",
and for the sign-change block "pm" (positive on the leftmost generator)
and "mp" (negative there).

Two indexes are strongly equivalent when related by value-preserving
rewrites, duality, or inner diagram symmetries; full equivalence also
allows the sign twist and the outer symmetries (the flip in even rank D,
the rank-4 triality, the rank-2 swap in type B).  canonical_form picks
the least member of the orbit.
"""

from __future__ import annotations

import json

from .char_ring import VirtualCharacter
from .induction import (
    EXACT,
    DegenSplitPolicy,
    bullet,
    column_char,
    ind_A_to_B,
    ind_A_to_D,
)

A_BETAS = ("id", "idplus", "fpf", "fpfplus")
D_BETAS = ("id", "idplus", "fpf", "fpfdiamond")
A_GAMMAS = ("triv", "sgn")
B_GAMMAS = ("triv", "sgn", "pm", "mp")

_BETA_ORDER = {"id": 0, "idplus": 1, "fpf": 2, "fpfplus": 3, "fpfdiamond": 4}
_GAMMA_ORDER = {"triv": 0, "sgn": 1, "pm": 2, "mp": 3}


def _beta_key(beta) -> tuple:
    if isinstance(beta, str):
        return (_BETA_ORDER[beta],)
    if beta[0] == "pq":
        return (5, beta[1], beta[2])
    return (6, beta[1], beta[2], 0 if beta[3] == "cw" else 1)


class ModelIndex:
    """Immutable index value; columns is a tuple of (alpha, beta, gamma)."""

    __slots__ = ("ctype", "columns")

    def __init__(self, ctype: str, columns):
        if ctype not in ("A", "B", "D"):
            raise ValueError(f"bad index type: {ctype!r}")
        cols = []
        for col in columns:
            alpha, beta, gamma = col
            if isinstance(beta, list):
                beta = tuple(beta)
            cols.append((int(alpha), beta, gamma))
        object.__setattr__(self, "ctype", ctype)
        object.__setattr__(self, "columns", tuple(cols))

    def __setattr__(self, name, value):
        raise AttributeError("ModelIndex is immutable")

    @property
    def rank(self) -> int:
        return sum(abs(a) for a, _, _ in self.columns)

    def key(self) -> tuple:
        return (
            self.ctype,
            len(self.columns),
            tuple(
                (a, _beta_key(b), _GAMMA_ORDER[g]) for a, b, g in self.columns
            ),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModelIndex)
            and self.ctype == other.ctype
            and self.columns == other.columns
        )

    def __hash__(self):
        return hash((self.ctype, self.columns))

    def __repr__(self):
        return f"ModelIndex({self.ctype!r}, {list(self.columns)!r})"

    def __str__(self):
        return format_index(self)

    def to_json(self) -> dict:
        return {
            "type": self.ctype,
            "alpha": [a for a, _, _ in self.columns],
            "beta": [list(b) if isinstance(b, tuple) else b for _, b, _ in self.columns],
            "gamma": [g for _, _, g in self.columns],
        }


def from_json(doc) -> ModelIndex:
    if isinstance(doc, str):
        doc = json.loads(doc)
    alphas, betas, gammas = doc["alpha"], doc["beta"], doc["gamma"]
    if not (len(alphas) == len(betas) == len(gammas)):
        raise ValueError("alpha/beta/gamma length mismatch")
    return ModelIndex(doc["type"], list(zip(alphas, betas, gammas)))


def _format_beta(beta) -> str:
    if isinstance(beta, str):
        return beta
    if beta[0] == "pq":
        return f"({beta[1]},{beta[2]})"
    return f"({beta[1]},{beta[2]},{beta[3]})"


def format_index(idx: ModelIndex) -> str:
    alphas = ",".join(str(a) for a, _, _ in idx.columns)
    betas = ",".join(_format_beta(b) for _, b, _ in idx.columns)
    gammas = ",".join(g for _, _, g in idx.columns)
    return f"{idx.ctype}[{alphas};{betas};{gammas}]"


# --- validity ----------------------------------------------------------------


def _fpfish(beta) -> bool:
    return beta in ("fpf", "fpfplus", "fpfdiamond")


def _validate_a_column(i, alpha, beta, gamma, two_col, problems):
    if alpha < 0 or (alpha == 0 and not two_col):
        problems.append(f"column {i}: bad block size {alpha}")
        return
    if beta not in A_BETAS:
        problems.append(f"column {i}: bad symmetric block class {beta!r}")
        return
    if gamma not in A_GAMMAS:
        problems.append(f"column {i}: bad symmetric block character {gamma!r}")
    if alpha % 2 == 1 and _fpfish(beta):
        problems.append(f"column {i}: fixed-point-free class needs even size")


def validate(idx: ModelIndex) -> list[str]:
    """Diagnostics for an index; empty list means valid."""
    problems: list[str] = []
    cols = idx.columns
    if idx.ctype == "A":
        if not cols:
            return ["no columns"]
        two_col = len(cols) == 2
        for i, (a, b, g) in enumerate(cols):
            _validate_a_column(i, a, b, g, two_col, problems)
        if idx.rank == 0:
            problems.append("index has rank 0")
        return problems
    if len(cols) != 2:
        return [f"type {idx.ctype} indexes need exactly two columns"]
    (a0, b0, g0), (a1, b1, g1) = cols
    n = a0 + abs(a1)
    if n == 0:
        return ["index has rank 0"]
    if idx.ctype == "B":
        if a0 < 0 or a1 < 0:
            problems.append("negative block size")
            return problems
        if isinstance(b0, tuple) and b0[0] == "pq":
            p, q = b0[1], b0[2]
            if p <= 0 or q <= 0 or p + q != a0:
                problems.append(f"column 0: bad split class {b0!r} at size {a0}")
        elif b0 not in ("id", "idplus", "fpf"):
            problems.append(f"column 0: bad sign-block class {b0!r}")
        elif b0 == "fpf" and a0 % 2 == 1:
            problems.append("column 0: fixed-point-free class needs even size")
        if g0 not in B_GAMMAS:
            problems.append(f"column 0: bad character {g0!r}")
        elif g0 in ("pm", "mp") and (a0 <= 1 or b0 == "fpf"):
            problems.append("column 0: mixed character needs size >= 2 and a non-fpf class")
        _validate_a_column(1, a1, b1, g1, True, problems)
        if _fpfish(b1) and a1 < 4:
            problems.append("column 1: fixed-point-free class needs size >= 4")
        return problems
    # type D
    if a0 < 0 or a0 == 1:
        problems.append(f"column 0: bad block size {a0}")
    if a1 < 0 and (abs(a1) != n or a0 != 0):
        problems.append("column 1: flipped block must be the whole diagram")
    if isinstance(b0, tuple) and b0[0] == "pq":
        p, q = b0[1], b0[2]
        if p <= 0 or q <= 0 or p + q != a0 or a0 <= 2:
            problems.append(f"column 0: bad split class {b0!r} at size {a0}")
    elif isinstance(b0, tuple) and b0[0] == "tri":
        p, q = b0[1], b0[2]
        if a0 != 4 or (p, q) not in ((3, 1), (1, 3)) or b0[3] not in ("cw", "ccw"):
            problems.append(f"column 0: bad triality class {b0!r}")
    elif b0 not in D_BETAS:
        problems.append(f"column 0: bad sign-block class {b0!r}")
    elif _fpfish(b0) and a0 % 2 == 1:
        problems.append("column 0: fixed-point-free class needs even size")
    if g0 not in B_GAMMAS:
        problems.append(f"column 0: bad character {g0!r}")
    elif g0 in ("pm", "mp") and a0 != 2:
        problems.append("column 0: mixed character exists only at size 2")
    _validate_a_column(1, abs(a1), b1, g1, True, problems)
    if _fpfish(b1) and abs(a1) < 4:
        problems.append("column 1: fixed-point-free class needs size >= 4")
    return problems


def check_valid(idx: ModelIndex) -> ModelIndex:
    problems = validate(idx)
    if problems:
        raise ValueError(f"invalid index {idx}: " + "; ".join(problems))
    return idx


# --- rewrites and transforms ---------------------------------------------------


def _normalize_a_column(col):
    """Value-preserving collapse of a symmetric-group column."""
    a, b, g = col
    if a == 0:
        return (0, "id", "triv")
    if b == "idplus":
        b = "id"
    if abs(a) <= 2:
        b = "id"
    if abs(a) == 1:
        g = "triv"
    return (a, b, g)


def normalize(idx: ModelIndex) -> ModelIndex:
    cols = idx.columns
    if idx.ctype == "A":
        # a zero-width column names no generators at all, so dropping it
        # leaves the same parabolic, class, and character
        kept = tuple(
            _normalize_a_column(c) for c in cols if c[0] != 0
        )
        if not kept:
            kept = ((0, "id", "triv"),)
        return ModelIndex("A", kept)
    (a0, b0, g0), col1 = cols
    col1 = _normalize_a_column(col1)
    if a0 == 0:
        col0 = (0, "id", "triv")
    else:
        if b0 == "idplus":
            b0 = "id"
        if idx.ctype == "D" and a0 == 2:
            # the rank-2 subgroup is abelian: every class symbol here names
            # a central singleton with full centralizer.
            b0 = "id"
        col0 = (a0, b0, g0)
    return ModelIndex(idx.ctype, (col0, col1))


def _dual_beta_a(beta):
    return {"id": "idplus", "idplus": "id", "fpf": "fpfplus", "fpfplus": "fpf"}[beta]


def _bar_gamma(gamma):
    return {"triv": "sgn", "sgn": "triv", "pm": "mp", "mp": "pm"}[gamma]


def _swap_pm(gamma):
    return {"pm": "mp", "mp": "pm"}.get(gamma, gamma)


def transform(idx: ModelIndex, kind: str) -> ModelIndex:
    """Apply one named transform: star, dual, bar, diamond, or normalize."""
    check_valid(idx)
    if kind == "normalize":
        return normalize(idx)
    if kind == "bar":
        return ModelIndex(
            idx.ctype, tuple((a, b, _bar_gamma(g)) for a, b, g in idx.columns)
        )
    if kind == "star":
        if idx.ctype != "A":
            raise ValueError("star applies to type A only")
        return ModelIndex("A", tuple(reversed(idx.columns)))
    if kind == "dual":
        return _dual(idx)
    if kind == "diamond":
        if idx.ctype != "D":
            raise ValueError("diamond applies to type D only")
        return _diamond(idx)
    raise ValueError(f"unknown transform: {kind!r}")


def _dual(idx: ModelIndex) -> ModelIndex:
    if idx.ctype == "A":
        cols = [(a, _dual_beta_a(b), g) for a, b, g in reversed(idx.columns)]
        return ModelIndex("A", cols)
    (a0, b0, g0), (a1, b1, g1) = idx.columns
    b1 = _dual_beta_a(b1)
    if idx.ctype == "B":
        if isinstance(b0, tuple):  # ("pq", p, q)
            b0 = ("pq", b0[2], b0[1])
        elif b0 != "fpf":
            b0 = {"id": "idplus", "idplus": "id"}[b0]
        return ModelIndex("B", ((a0, b0, g0), (a1, b1, g1)))
    n = idx.rank
    odd = n % 2 == 1
    if odd and abs(a1) == n:
        a1 = -a1
    if isinstance(b0, tuple) and b0[0] == "pq":
        b0 = ("pq", b0[2], b0[1])
    elif isinstance(b0, tuple) and b0[0] == "tri":
        d = b0[3] if not odd else ("ccw" if b0[3] == "cw" else "cw")
        b0 = ("tri", b0[2], b0[1], d)
    elif b0 in ("fpf", "fpfdiamond"):
        if (a0 // 2 + n) % 2 == 1:
            b0 = "fpfdiamond" if b0 == "fpf" else "fpf"
    else:
        b0 = {"id": "idplus", "idplus": "id"}[b0]
    if odd:
        g0 = _swap_pm(g0)
    return ModelIndex("D", ((a0, b0, g0), (a1, b1, g1)))


def _diamond(idx: ModelIndex) -> ModelIndex:
    (a0, b0, g0), (a1, b1, g1) = idx.columns
    if abs(a1) == idx.rank:
        a1 = -a1
    if isinstance(b0, tuple) and b0[0] == "tri":
        b0 = ("tri", b0[1], b0[2], "ccw" if b0[3] == "cw" else "cw")
    elif b0 in ("fpf", "fpfdiamond"):
        b0 = "fpfdiamond" if b0 == "fpf" else "fpf"
    g0 = _swap_pm(g0)
    return ModelIndex("D", ((a0, b0, g0), (a1, b1, g1)))


def _triality(idx: ModelIndex):
    """Rank-4 outer rotation; defined only when the sign block is everything."""
    if idx.ctype != "D" or idx.rank != 4:
        return None
    (a0, b0, g0), col1 = idx.columns
    if a0 != 4:
        return None
    cycle = {
        ("pq", 2, 2): "fpf",
        "fpf": "fpfdiamond",
        "fpfdiamond": ("pq", 2, 2),
        ("pq", 3, 1): ("tri", 3, 1, "cw"),
        ("tri", 3, 1, "cw"): ("tri", 3, 1, "ccw"),
        ("tri", 3, 1, "ccw"): ("pq", 3, 1),
        ("pq", 1, 3): ("tri", 1, 3, "cw"),
        ("tri", 1, 3, "cw"): ("tri", 1, 3, "ccw"),
        ("tri", 1, 3, "ccw"): ("pq", 1, 3),
    }
    b0 = cycle.get(b0, b0)
    return ModelIndex("D", ((a0, b0, g0), col1))


def _b2_swap(idx: ModelIndex):
    """Rank-2 outer swap of the two generators in type B."""
    if idx.ctype != "B" or idx.rank != 2:
        return None
    (a0, b0, g0), (a1, b1, g1) = normalize(idx).columns
    if (a0, a1) == (2, 0):
        if b0 == "fpf":
            b0 = ("pq", 1, 1)
        elif isinstance(b0, tuple):
            b0 = "fpf"
        g0 = _swap_pm(g0)
        if b0 == "fpf":
            # the centralizer misses the sign generator, so the mixed
            # characters restrict like triv/sgn.
            g0 = {"pm": "sgn", "mp": "triv"}.get(g0, g0)
        return ModelIndex("B", ((2, b0, g0), (0, "id", "triv")))
    if (a0, a1) == (1, 1):
        return ModelIndex("B", ((0, "id", "triv"), (2, "id", g0)))
    if (a0, a1) == (0, 2):
        return ModelIndex("B", ((1, "id", g1), (1, "id", "triv")))
    return None


# --- canonical forms -----------------------------------------------------------


_CANON_CACHE: dict = {}


def equivalence_orbit(idx: ModelIndex, relation: str = "strong") -> tuple:
    """All normalized indexes reachable under the relation's generators."""
    if relation not in ("strong", "full"):
        raise ValueError(f"bad relation: {relation!r}")
    check_valid(idx)
    start = normalize(idx)
    gens = [_dual]
    if idx.ctype == "A":
        gens.append(lambda i: transform(i, "star"))
    if idx.ctype == "D" and idx.rank % 2 == 1:
        gens.append(_diamond)
    if relation == "full":
        gens.append(lambda i: transform(i, "bar"))
        if idx.ctype == "D" and idx.rank % 2 == 0:
            gens.append(_diamond)
        if idx.ctype == "D" and idx.rank == 4:
            gens.append(_triality)
        if idx.ctype == "B" and idx.rank == 2:
            gens.append(_b2_swap)
    seen = {start}
    frontier = [start]
    while frontier:
        cur = frontier.pop()
        for gen in gens:
            img = gen(cur)
            if img is None:
                continue
            img = normalize(img)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return tuple(sorted(seen, key=ModelIndex.key))


def canonical_form(idx: ModelIndex, relation: str = "strong") -> ModelIndex:
    """Least member of the equivalence orbit; constant on the orbit."""
    cached = _CANON_CACHE.get((normalize(idx), relation))
    if cached is not None:
        return cached
    orbit = equivalence_orbit(idx, relation)
    least = orbit[0]
    for member in orbit:
        _CANON_CACHE[(member, relation)] = least
    return least


# --- characters ----------------------------------------------------------------


def character_of_index(
    idx: ModelIndex, policy: DegenSplitPolicy = EXACT
) -> VirtualCharacter:
    """The model character attached to an index."""
    check_valid(idx)
    if idx.ctype == "A":
        factors = [
            column_char("A", col) for col in idx.columns if col[0] != 0
        ]
        out = factors[0]
        for f in factors[1:]:
            out = bullet("A", out, f)
        return out
    (a0, b0, g0), (a1, b1, g1) = idx.columns
    if idx.ctype == "B":
        chi0 = column_char("B", (a0, b0, g0)) if a0 else None
        chi1 = ind_A_to_B(column_char("A", (a1, b1, g1))) if a1 else None
        if chi0 is None:
            return chi1
        if chi1 is None:
            return chi0
        return bullet("B", chi0, chi1)
    chi0 = column_char("D", (a0, b0, g0)) if a0 else None
    if a1:
        side = "minus" if a1 < 0 else "plus"
        inner = column_char("A", (abs(a1), b1, g1))
        chi1 = ind_A_to_D(inner, side, policy)
    else:
        chi1 = None
    if chi0 is None:
        return chi1
    if chi1 is None:
        return chi0
    return bullet("D", chi0, chi1)


# --- index-level projections ----------------------------------------------------


def _strip_zero_columns(ctype, cols):
    kept = [c for c in cols if c[0] != 0]
    if not kept:
        raise ValueError("projection produced an empty index")
    return normalize(ModelIndex(ctype, kept))


def project_index(kind: str, idx: ModelIndex):
    """Index image under the symmetric-group projections; None means zero."""
    check_valid(idx)
    if kind in ("piL", "piR"):
        if idx.ctype != "B":
            raise ValueError(f"{kind} applies to type B indexes")
        (a0, b0, g0), col1 = idx.columns
        if a0 == 0:
            return _strip_zero_columns("A", [col1])
        if b0 == "fpf":
            return _strip_zero_columns("A", [(a0, "fpf", g0), col1])
        left = kind == "piL"
        if isinstance(b0, tuple):  # split class: two identity columns
            survives = g0 in (("triv", "pm") if left else ("mp", "sgn"))
            if not survives:
                return None
            g = "triv" if g0 in ("triv", "mp") else "sgn"
            cols = [(b0[1], "id", g), (b0[2], "id", g), col1]
            return _strip_zero_columns("A", cols)
        if a0 == 1:
            survives = g0 == "triv" if left else g0 == "sgn"
            gmap = {"triv": "triv", "sgn": "sgn"}
        else:
            survives = g0 in (("triv", "pm") if left else ("mp", "sgn"))
            gmap = {"triv": "triv", "pm": "sgn", "mp": "triv", "sgn": "sgn"}
        if not survives:
            return None
        return _strip_zero_columns("A", [(a0, "id", gmap[g0]), col1])
    if kind == "piD":
        if idx.ctype != "D":
            raise ValueError("piD applies to type D indexes")
        (a0, b0, g0), (a1, b1, g1) = idx.columns
        if a0 == 0:
            return _strip_zero_columns("A", [(abs(a1), b1, g1)])
        if g0 not in ("triv", "sgn"):
            return None
        col1 = (abs(a1), b1, g1)
        if isinstance(b0, tuple) and b0[0] == "pq":
            cols = [(b0[1], "id", g0), (b0[2], "id", g0), col1]
        elif b0 in ("fpf", "fpfdiamond"):
            cols = [(a0, "fpf", g0), col1]
        else:
            cols = [(a0, "id", g0), col1]
        return _strip_zero_columns("A", cols)
    raise ValueError(f"unknown projection: {kind!r}")


# --- enumeration -----------------------------------------------------------------


def _a_column_options(a: int):
    if a == 0:
        return [(0, "id", "triv")]
    if a == 1:
        return [(1, "id", "triv")]
    if a == 2:
        return [(2, "id", g) for g in A_GAMMAS]
    out = [(a, "id", g) for g in A_GAMMAS]
    if a % 2 == 0:
        out += [(a, b, g) for b in ("fpf", "fpfplus") for g in A_GAMMAS]
    return out


def _b_column0_options(a0: int):
    if a0 == 0:
        return [(0, "id", "triv")]
    if a0 == 1:
        return [(1, "id", g) for g in A_GAMMAS]
    out = [(a0, "id", g) for g in B_GAMMAS]
    if a0 % 2 == 0:
        out += [(a0, "fpf", g) for g in A_GAMMAS]
    for p in range(1, a0):
        out += [(a0, ("pq", p, a0 - p), g) for g in B_GAMMAS]
    return out


def _ab_column1_options(a1: int):
    """Symmetric-block column with the fpf size floor raised to four."""
    if abs(a1) <= 3:
        return [
            (a1, b, g)
            for (_, b, g) in _a_column_options(abs(a1))
            if not _fpfish(b)
        ]
    return [(a1, b, g) for (_, b, g) in _a_column_options(abs(a1))]


def _d_column0_options(a0: int):
    if a0 == 0:
        return [(0, "id", "triv")]
    if a0 == 2:
        return [(2, "id", g) for g in B_GAMMAS]
    out = [(a0, "id", g) for g in A_GAMMAS]
    if a0 % 2 == 0:
        out += [(a0, b, g) for b in ("fpf", "fpfdiamond") for g in A_GAMMAS]
    for p in range(1, a0):
        out += [(a0, ("pq", p, a0 - p), g) for g in A_GAMMAS]
    if a0 == 4:
        out += [
            (4, ("tri", p, q, d), g)
            for (p, q) in ((3, 1), (1, 3))
            for d in ("cw", "ccw")
            for g in A_GAMMAS
        ]
    return out


def _compositions(n: int, parts: int | None = None):
    """Compositions of n into positive parts (any length when parts is None)."""
    if parts is None:
        if n == 0:
            return
        for k in range(1, n + 1):
            yield from _compositions(n, k)
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def _raw_indices(ctype: str, n: int):
    if ctype == "A":
        for comp in _compositions(n):
            pools = [_a_column_options(a) for a in comp]
            yield from _product_indices("A", pools)
        # two-column extended forms with an empty side
        empty = (0, "id", "triv")
        for opt in _a_column_options(n):
            yield ModelIndex("A", [empty, opt])
            yield ModelIndex("A", [opt, empty])
        return
    if ctype == "B":
        for a0 in range(n + 1):
            pools = [_b_column0_options(a0), _ab_column1_options(n - a0)]
            yield from _product_indices("B", pools)
        return
    if ctype == "D":
        alpha1s = [n, -n] + [a for a in range(0, n - 1)]
        for a1 in alpha1s:
            a0 = n - abs(a1)
            if a0 == 1:
                continue
            pools = [_d_column0_options(a0), _ab_column1_options(a1)]
            yield from _product_indices("D", pools)
        return
    raise ValueError(f"bad index type: {ctype!r}")


def _product_indices(ctype, pools):
    def rec(i, acc):
        if i == len(pools):
            yield ModelIndex(ctype, list(acc))
            return
        for col in pools[i]:
            acc.append(col)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def _lemma_excludes_mf(idx: ModelIndex) -> bool:
    """Known sufficient conditions for a repeated constituent."""
    if idx.ctype == "A":
        return False
    (a0, b0, g0), (a1, b1, g1) = idx.columns
    a1 = abs(a1)
    if a1 >= 4 and _fpfish(b1):
        return True
    if isinstance(b0, tuple) and b0[0] == "pq" and a1 > 0:
        return True
    if idx.ctype == "B":
        if a0 >= 2 and b0 == "fpf" and a1 >= 2 and g0 == g1:
            return True
    else:
        if a0 >= 4 and b0 in ("fpf", "fpfdiamond") and a1 >= 2 and g0 == g1:
            return True
    return False


def enumerate_indices(ctype: str, n: int, mf_only: bool = False):
    """One representative per strong class of valid rank-n indexes."""
    from .char_ring import is_multiplicity_free

    reps: dict[ModelIndex, None] = {}
    for idx in _raw_indices(ctype, n):
        if validate(idx):
            continue
        if mf_only and _lemma_excludes_mf(idx):
            continue
        reps[canonical_form(idx, "strong")] = None
    out = sorted(reps, key=ModelIndex.key)
    if not mf_only:
        return tuple(out)
    kept = []
    for idx in out:
        verdict = is_multiplicity_free(character_of_index(idx))
        if verdict is not False:
            kept.append(idx)
    return tuple(kept)
