"""Brute-force finite group oracle for the reflection groups in scope.

Groups are enumerated element by element (signed permutations for the
classical series, rotation/flip pairs for the dihedral groups, a signed
permutation realization for the rank three icosahedral group).  Everything
downstream is exact integer or Fraction arithmetic: conjugacy classes,
twisted involution classes, induced characters, square-root counts.

The oracle validates itself as it goes: BFS lengths are checked against
the exchange condition, induced character values must come out integral,
and the square-root-count class function must have norm equal to the
number of conjugacy classes (every irreducible here is orthogonal).
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import cache
from itertools import permutations

from . import partitions as pt
from .partitions import Partition


class CapExceeded(RuntimeError):
    """Raised when a group would exceed the enumeration cap."""


def oracle_cap() -> int:
    return int(os.environ.get("COXMODEL_ORACLE_CAP", "1000000"))


# --- element arithmetic -------------------------------------------------------


def _sp_apply(w, i):
    return w[i - 1] if i > 0 else -w[-i - 1]


def _sp_mult(x, y):
    return tuple(_sp_apply(x, y[i]) for i in range(len(y)))


def _sp_inv(w):
    out = [0] * len(w)
    for i, v in enumerate(w):
        if v > 0:
            out[v - 1] = i + 1
        else:
            out[-v - 1] = -(i + 1)
    return tuple(out)


def _dih_mult_factory(m):
    def mult(x, y):
        k1, f1 = x
        k2, f2 = y
        return ((k1 + (k2 if f1 == 0 else -k2)) % m, f1 ^ f2)

    return mult


def _dih_inv_factory(m):
    def inv(x):
        k, f = x
        return ((-k) % m, 0) if f == 0 else x

    return inv


def _sp_identity(n):
    return tuple(range(1, n + 1))


def _transposition(n, i, j):
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = j, i
    return tuple(w)


def _neg_transposition(n):
    """The generator 1 -> -2, 2 -> -1 used at the forked end of type D."""
    w = list(range(1, n + 1))
    w[0], w[1] = -2, -1
    return tuple(w)


# --- the group container ------------------------------------------------------


class Group:
    """Fully enumerated group with lengths, words, and conjugacy classes."""

    def __init__(self, kind, gens, gen_names, mult, inv, identity, cap=None):
        self.kind = kind
        self.gens = tuple(gens)
        self.gen_names = tuple(gen_names)
        self.mult = mult
        self.inv = inv
        self.identity = identity
        cap = oracle_cap() if cap is None else cap
        self._enumerate(cap)
        self._classes = None
        self._auto_cache = {}

    def _enumerate(self, cap):
        index = {self.identity: 0}
        elements = [self.identity]
        words = [()]
        lengths = [0]
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                base = index[w]
                for gi, g in enumerate(self.gens):
                    v = self.mult(w, g)
                    if v not in index:
                        if len(elements) >= cap:
                            raise CapExceeded(
                                f"group {self.kind} exceeds cap {cap}"
                            )
                        index[v] = len(elements)
                        elements.append(v)
                        words.append(words[base] + (gi,))
                        lengths.append(lengths[base] + 1)
                        nxt.append(v)
            frontier = nxt
        self.elements = tuple(elements)
        self.index = index
        self.words = tuple(words)
        self.lengths = tuple(lengths)
        self.order = len(elements)
        # exchange-condition sanity: multiplying by a generator moves the
        # length by exactly one.
        for w in elements:
            lw = lengths[index[w]]
            for g in self.gens:
                lv = lengths[index[self.mult(w, g)]]
                assert abs(lv - lw) == 1, "length function is not Coxeter-like"

    def coxeter_length(self, w) -> int:
        return self.lengths[self.index[w]]

    def word(self, w):
        return self.words[self.index[w]]

    @cache
    def element_order(self, w) -> int:
        k, v = 1, w
        while v != self.identity:
            v = self.mult(v, w)
            k += 1
        return k

    def conjugacy_classes(self):
        """(class_of: dict elem -> class id, reps, sizes)."""
        if self._classes is None:
            class_of = {}
            reps = []
            sizes = []
            for w in self.elements:
                if w in class_of:
                    continue
                cid = len(reps)
                orbit = {w}
                stack = [w]
                while stack:
                    x = stack.pop()
                    for g in self.gens:
                        y = self.mult(self.mult(g, x), self.inv(g))
                        if y not in orbit:
                            orbit.add(y)
                            stack.append(y)
                for x in orbit:
                    class_of[x] = cid
                reps.append(min(orbit, key=lambda e: self.index[e]))
                sizes.append(len(orbit))
            self._classes = (class_of, tuple(reps), tuple(sizes))
        return self._classes

    def reflections(self):
        out = set()
        for g in self.gens:
            for x in self.elements:
                out.add(self.mult(self.mult(x, g), self.inv(x)))
        return out

    # diagram automorphisms ----------------------------------------------

    def coxeter_matrix(self):
        k = len(self.gens)
        return tuple(
            tuple(
                self.element_order(self.mult(self.gens[i], self.gens[j]))
                for j in range(k)
            )
            for i in range(k)
        )

    def diagram_automorphisms(self):
        """All generator permutations preserving the Coxeter matrix."""
        m = self.coxeter_matrix()
        k = len(self.gens)
        out = []
        for pi in permutations(range(k)):
            if all(
                m[pi[i]][pi[j]] == m[i][j] for i in range(k) for j in range(k)
            ):
                out.append(pi)
        return tuple(out)

    def apply_auto(self, pi, w):
        key = (pi, w)
        got = self._auto_cache.get(key)
        if got is None:
            got = self.identity
            for gi in self.word(w):
                got = self.mult(got, self.gens[pi[gi]])
            self._auto_cache[key] = got
        return got

    def subgroup(self, gen_ids):
        """Parabolic subgroup on a subset of the generators."""
        return Group(
            f"{self.kind}|{gen_ids}",
            [self.gens[i] for i in gen_ids],
            [self.gen_names[i] for i in gen_ids],
            self.mult,
            self.inv,
            self.identity,
        )


def build_group(kind: str, n: int = 0) -> Group:
    if kind == "symA":
        # the symmetric group on n letters
        gens = [_transposition(n, i, i + 1) for i in range(1, n)]
        names = [f"s{i}" for i in range(1, n)]
        return Group("symA", gens, names, _sp_mult, _sp_inv, _sp_identity(n))
    if kind == "symB":
        s0 = tuple([-1] + list(range(2, n + 1)))
        gens = [s0] + [_transposition(n, i, i + 1) for i in range(1, n)]
        names = ["s0"] + [f"s{i}" for i in range(1, n)]
        return Group("symB", gens, names, _sp_mult, _sp_inv, _sp_identity(n))
    if kind == "symD":
        gens = [_neg_transposition(n)] + [
            _transposition(n, i, i + 1) for i in range(1, n)
        ]
        names = ["s-1"] + [f"s{i}" for i in range(1, n)]
        return Group("symD", gens, names, _sp_mult, _sp_inv, _sp_identity(n))
    if kind == "dihedral":
        m = n
        s = (0, 1)
        t = (1, 1)
        return Group(
            f"dihedral{m}", [s, t], ["s", "t"], _dih_mult_factory(m),
            _dih_inv_factory(m), (0, 0),
        )
    if kind == "h3":
        size = 6
        s = [_neg_transposition(size)] + [
            _transposition(size, i, i + 1) for i in range(1, size)
        ]
        h1 = _sp_mult(s[1], s[3])
        h2 = _sp_mult(s[2], s[4])
        h3 = _sp_mult(s[0], s[5])
        return Group(
            "h3", [h1, h2, h3], ["h1", "h2", "h3"], _sp_mult, _sp_inv,
            _sp_identity(size),
        )
    raise ValueError(f"unknown group kind: {kind!r}")


_GROUP_CACHE: dict = {}


def get_group(kind: str, n: int = 0) -> Group:
    key = (kind, n)
    if key not in _GROUP_CACHE:
        _GROUP_CACHE[key] = build_group(kind, n)
    return _GROUP_CACHE[key]


# --- square roots and inner products ------------------------------------------


def sqrt_count(group: Group):
    """Class function counting square roots; equals the sum of all irreducibles."""
    class_of, reps, sizes = group.conjugacy_classes()
    counts = [0] * len(reps)
    per_elem = {}
    for h in group.elements:
        sq = group.mult(h, h)
        per_elem[sq] = per_elem.get(sq, 0) + 1
    for cid, rep in enumerate(reps):
        counts[cid] = per_elem.get(rep, 0)
    vec = tuple(counts)
    # every irreducible of these groups is orthogonal, so the norm of the
    # square-root count must equal the number of classes.
    assert inner_product(group, vec, vec) == len(reps), "square-root sanity failed"
    return vec


def inner_product(group: Group, f, g) -> Fraction:
    _, _, sizes = group.conjugacy_classes()
    total = sum(Fraction(sizes[i] * f[i] * g[i]) for i in range(len(sizes)))
    return total / group.order


def class_values(group: Group, func):
    _, reps, _ = group.conjugacy_classes()
    return tuple(func(r) for r in reps)


# --- linear characters ---------------------------------------------------------


def linear_characters(group: Group):
    """All homomorphisms to {+1, -1} as sign tuples over the generators."""
    k = len(group.gens)
    m = group.coxeter_matrix()
    # generators joined by an odd bond must share a sign
    parent = list(range(k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(k):
        for j in range(i + 1, k):
            if m[i][j] % 2 == 1:
                parent[find(i)] = find(j)
    comps = sorted({find(i) for i in range(k)})
    out = []
    for bits in range(1 << len(comps)):
        signs = tuple(
            -1 if (bits >> comps.index(find(i))) & 1 else 1 for i in range(k)
        )
        out.append(signs)
    return tuple(out)


def linear_value(group: Group, signs, w) -> int:
    v = 1
    for gi in group.word(w):
        v *= signs[gi]
    return v


# --- twisted involutions and perfect classes -----------------------------------


def _involutive_autos(group: Group):
    autos = group.diagram_automorphisms()
    ident = tuple(range(len(group.gens)))
    out = []
    for pi in autos:
        sq = tuple(pi[pi[i]] for i in range(len(pi)))
        if sq == ident:
            out.append(pi)
    return tuple(out)


def perfect_classes(group: Group):
    """Twisted conjugacy classes of perfect involutions with a unique minimum.

    Returns a list of dicts with keys theta (generator permutation),
    elements (frozenset of group elements paired with that theta), and
    min (the unique minimal-length element).
    """
    refl = sorted(group.reflections(), key=lambda e: group.index[e])
    out = []
    seen = set()
    for pi in _involutive_autos(group):
        theta = {w: group.apply_auto(pi, w) for w in group.elements}
        for w in group.elements:
            if (w, pi) in seen:
                continue
            if group.mult(w, theta[w]) != group.identity:
                continue
            # orbit under twisted conjugation first; perfection is a class
            # property so test it on the starting point only.
            if not _is_perfect(group, w, theta, refl):
                # still mark the whole orbit as visited
                for x in _twisted_orbit(group, w, theta):
                    seen.add((x, pi))
                continue
            orbit = _twisted_orbit(group, w, theta)
            for x in orbit:
                seen.add((x, pi))
            min_len = min(group.coxeter_length(x) for x in orbit)
            mins = [x for x in orbit if group.coxeter_length(x) == min_len]
            if len(mins) != 1:
                continue
            out.append(
                {"theta": pi, "elements": frozenset(orbit), "min": mins[0]}
            )
    return out


def _is_perfect(group: Group, w, theta, refl) -> bool:
    for t in refl:
        q = group.mult(
            group.mult(group.mult(w, theta[t]), theta[w]), t
        )
        if group.mult(q, q) != group.identity:
            return False
    return True


def _twisted_orbit(group: Group, w, theta):
    orbit = {w}
    stack = [w]
    while stack:
        x = stack.pop()
        for g in group.gens:
            y = group.mult(group.mult(g, x), theta[group.inv(g)])
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


# --- triples and induced characters --------------------------------------------


def twisted_centralizer(group: Group, sub: Group, w, theta):
    """Elements g of the subgroup with g . w . theta(g)^-1 == w."""
    out = []
    for g in sub.elements:
        if group.mult(group.mult(g, w), group.inv(theta[g])) == w:
            out.append(g)
    return out


def induced_character(group: Group, subgroup_elems, values: dict):
    """Induce a character given by values on a subgroup; exact and integral."""
    class_of, reps, sizes = group.conjugacy_classes()
    sums = [Fraction(0)] * len(reps)
    for y in subgroup_elems:
        sums[class_of[y]] += values[y]
    out = []
    h = len(subgroup_elems)
    for cid in range(len(reps)):
        v = Fraction(group.order, sizes[cid]) * sums[cid] / h
        assert v.denominator == 1, "induced character value not integral"
        out.append(int(v))
    return tuple(out)


def all_triples(group: Group):
    """Every (J, perfect class, linear character) over all generator subsets."""
    k = len(group.gens)
    out = []
    for mask in range(1 << k):
        gen_ids = tuple(i for i in range(k) if (mask >> i) & 1)
        sub = group.subgroup(gen_ids) if gen_ids else None
        if sub is None:
            # empty J: the only class is the identity, inducing the regular
            # character; never multiplicity-free for nontrivial groups, but
            # keep it for completeness.
            out.append({"J": (), "min": group.identity, "theta": (), "sigma": ()})
            continue
        for cls in perfect_classes(sub):
            for sigma in linear_characters(sub):
                out.append(
                    {
                        "J": gen_ids,
                        "min": cls["min"],
                        "theta": cls["theta"],
                        "sigma": sigma,
                        "_sub": sub,
                    }
                )
    return out


def triple_character(group: Group, triple):
    """The induced model character of one triple, as a class-value tuple."""
    if not triple["J"]:
        cent = [group.identity]
        values = {group.identity: 1}
        return induced_character(group, cent, values)
    sub = triple.get("_sub")
    if sub is None:
        sub = group.subgroup(triple["J"])
    theta = {w: sub.apply_auto(triple["theta"], w) for w in sub.elements}
    cent = twisted_centralizer(group, sub, triple["min"], theta)
    values = {g: linear_value(sub, triple["sigma"], g) for g in cent}
    return induced_character(group, cent, values)


def oracle_is_mf(group: Group, chi) -> bool:
    r2 = sqrt_count(group)
    return inner_product(group, chi, chi) == inner_product(group, chi, r2)


def oracle_is_perfect(group: Group, chars) -> bool:
    """Do the class functions sum to the square-root count pointwise?"""
    r2 = sqrt_count(group)
    total = [0] * len(r2)
    for chi in chars:
        for i, v in enumerate(chi):
            total[i] += v
    return tuple(total) == r2


def oracle_search(group: Group):
    """All perfect models over the full triple universe, via exact cover.

    Candidate characters are deduplicated; a model is a pairwise-orthogonal
    set of multiplicity-free candidates whose multiplicities exhaust every
    irreducible, which for orthogonal groups is equivalent to the norms
    summing to the class count.  Each returned cover lists, per chosen
    character, every triple that induces it.
    """
    r2 = sqrt_count(group)
    n_classes = len(r2)
    rows: dict[tuple, list] = {}
    for triple in all_triples(group):
        chi = triple_character(group, triple)
        desc = (triple["J"], triple["min"], triple["theta"], triple["sigma"])
        rows.setdefault(chi, []).append(desc)
    items = []
    for chi, descs in rows.items():
        norm = inner_product(group, chi, chi)
        mult = inner_product(group, chi, r2)
        if norm != mult:
            continue  # repeated constituent
        items.append((chi, int(norm), descs))
    items.sort(key=lambda it: (-it[1], it[0]))
    gram = [
        [
            inner_product(group, items[i][0], items[j][0])
            for j in range(len(items))
        ]
        for i in range(len(items))
    ]
    covers = []
    chosen: list[int] = []

    def rec(start, remaining):
        if remaining == 0:
            chars = [items[i][0] for i in chosen]
            assert oracle_is_perfect(group, chars)
            covers.append(tuple(chosen))
            return
        for i in range(start, len(items)):
            norm = items[i][1]
            if norm > remaining:
                continue
            if any(gram[i][j] != 0 for j in chosen):
                continue
            chosen.append(i)
            rec(i + 1, remaining - norm)
            chosen.pop()

    rec(0, n_classes)
    return [
        tuple((items[i][0], tuple(items[i][2])) for i in cover)
        for cover in covers
    ]


# --- labeled irreducible values (Murnaghan-Nakayama) ---------------------------


def _beta_set(lam: Partition, r: int):
    return tuple(lam[i] + (r - 1 - i) if i < len(lam) else (r - 1 - i) for i in range(r))


def _from_beta(beta):
    r = len(beta)
    lam = tuple(
        b - (r - 1 - i) for i, b in enumerate(sorted(beta, reverse=True))
    )
    return tuple(x for x in lam if x > 0)


@cache
def _strip_removals(lam: Partition, length: int):
    """(smaller partition, height sign) pairs after removing a border strip."""
    r = len(lam) + length  # enough beta numbers
    beta = set(_beta_set(lam, r))
    out = []
    for b in sorted(beta, reverse=True):
        nb = b - length
        if nb < 0 or nb in beta:
            continue
        crossed = sum(1 for x in beta if nb < x < b)
        newset = set(beta)
        newset.remove(b)
        newset.add(nb)
        out.append((_from_beta(tuple(newset)), (-1) ** crossed))
    return tuple(out)


@cache
def mn_value_a(lam: Partition, cycles: tuple) -> int:
    """Symmetric group character value at the given cycle type."""
    if not cycles:
        return 1 if not lam else 0
    head, rest = cycles[0], cycles[1:]
    return sum(s * mn_value_a(mu, rest) for mu, s in _strip_removals(lam, head))


@cache
def mn_value_b(lam: Partition, mu: Partition, cycles: tuple) -> int:
    """Hyperoctahedral character value; cycles are (length, sign) pairs.

    A border strip for a cycle comes off either component; taking it off
    the second component of the label flips the sign for negative cycles.
    """
    if not cycles:
        return 1 if (not lam and not mu) else 0
    (length, sign), rest = cycles[0], cycles[1:]
    total = 0
    for nl, s in _strip_removals(lam, length):
        total += s * mn_value_b(nl, mu, rest)
    for nm, s in _strip_removals(mu, length):
        total += sign * s * mn_value_b(lam, nm, rest)
    return total


def cycle_type_a(w) -> tuple:
    n = len(w)
    seen = [False] * n
    cycles = []
    for i in range(1, n + 1):
        if seen[i - 1]:
            continue
        j, length = i, 0
        while not seen[j - 1]:
            seen[j - 1] = True
            j = abs(w[j - 1])
            length += 1
        cycles.append(length)
    return tuple(sorted(cycles, reverse=True))


def signed_cycle_type(w) -> tuple:
    """Cycles of |w| with the product of the signs met along each cycle."""
    n = len(w)
    seen = [False] * n
    cycles = []
    for i in range(1, n + 1):
        if seen[i - 1]:
            continue
        j, length, sign = i, 0, 1
        while not seen[j - 1]:
            seen[j - 1] = True
            v = w[j - 1]
            sign *= 1 if v > 0 else -1
            j = abs(v)
            length += 1
        cycles.append((length, sign))
    cycles.sort(key=lambda c: (-c[0], -c[1]))
    return tuple(cycles)


def irr_value(ctype: str, label, w) -> int:
    """Value of the labeled irreducible at a signed permutation element.

    Type D degenerate labels are not handled here; see d4_degenerate_table.
    """
    if ctype == "A":
        return mn_value_a(label, cycle_type_a(w))
    if ctype == "B":
        return mn_value_b(label[0], label[1], signed_cycle_type(w))
    if ctype == "D":
        if label[0] == "set":
            return mn_value_b(label[1], label[2], signed_cycle_type(w))
        raise ValueError("degenerate D labels need the rank-4 table")
    raise ValueError(f"bad character type: {ctype!r}")


@cache
def _irr_table_checked(ctype: str, n: int) -> bool:
    """Orthonormality audit of the labeled nondegenerate values."""
    kind = {"A": "symA", "B": "symB", "D": "symD"}[ctype]
    group = get_group(kind, n)
    from .char_ring import degree, irr_universe

    labels = [
        lab
        for lab in irr_universe(ctype, n)
        if ctype != "D" or lab[0] == "set"
    ]
    vecs = {lab: class_values(group, lambda r, lab=lab: irr_value(ctype, lab, r)) for lab in labels}
    for lab in labels:
        assert vecs[lab][_identity_class(group)] == degree(ctype, lab), lab
    for i, l1 in enumerate(labels):
        for l2 in labels[i:]:
            ip = inner_product(group, vecs[l1], vecs[l2])
            assert ip == (1 if l1 == l2 else 0), (l1, l2, ip)
    return True


def _identity_class(group: Group) -> int:
    class_of, _, _ = group.conjugacy_classes()
    return class_of[group.identity]


@cache
def d4_degenerate_table():
    """Class-value vectors of the four degenerate rank-4 characters.

    Extracted by inducing from the two fixed-point-free classes and
    subtracting the known nondegenerate constituents; the sign convention
    is then audited at the standard fixed-point-free involution.
    """
    group = get_group("symD", 4)
    _irr_table_checked("D", 4)
    out = {}
    for beta, sign in (("fpf", "+"), ("fpfdiamond", "-")):
        zmin = (
            _sp_mult(group.gens[1], group.gens[3])
            if beta == "fpf"
            else _sp_mult(group.gens[0], group.gens[3])
        )
        for gamma, core in (("triv", (2,)), ("sgn", (1, 1))):
            triple = {
                "J": (0, 1, 2, 3),
                "min": zmin,
                "theta": (0, 1, 2, 3),
                "sigma": tuple(1 if gamma == "triv" else -1 for _ in range(4)),
                "_sub": group,
            }
            chi = triple_character(group, triple)
            fam = pt.erows_d(4) if gamma == "triv" else pt.ecols_d(4)
            rest = list(chi)
            for pair in fam:
                vals = class_values(
                    group, lambda r, pair=pair: irr_value("D", ("set",) + pair, r)
                )
                rest = [a - b for a, b in zip(rest, vals)]
            vec = tuple(rest)
            assert inner_product(group, vec, vec) == 1, (beta, gamma)
            out[("deg", core, sign)] = vec
    # the "+" member takes the larger value at s1 s3
    class_of, _, _ = group.conjugacy_classes()
    wf = _sp_mult(group.gens[1], group.gens[3])
    cid = class_of[wf]
    for core in ((2,), (1, 1)):
        plus = out[("deg", core, "+")][cid]
        minus = out[("deg", core, "-")][cid]
        assert plus - minus == 4 * pt.standard_tableau_count(core), core
    return out


def virtual_char_values(group: Group, chi):
    """Class-value vector of a symbolic VirtualCharacter on an oracle group."""
    _, reps, _ = group.conjugacy_classes()
    deg4 = None
    totals = [0] * len(reps)
    for lab, c in chi.coeffs.items():
        if chi.ctype == "D" and lab[0] == "deg":
            if chi.rank != 4:
                raise ValueError("degenerate values available at rank 4 only")
            if deg4 is None:
                deg4 = d4_degenerate_table()
            vec = deg4[lab]
            for i in range(len(reps)):
                totals[i] += c * vec[i]
            continue
        for i, r in enumerate(reps):
            totals[i] += c * irr_value(chi.ctype, lab, r)
    if chi.unresolved:
        raise ValueError("cannot evaluate unresolved degenerate mass")
    return tuple(totals)


def decompose(group: Group, ctype: str, n: int, values):
    """Write a class-value vector in the labeled irreducible basis."""
    from .char_ring import VirtualCharacter, irr_universe

    _irr_table_checked(ctype, n)
    out = VirtualCharacter(ctype, n)
    residual = list(values)
    for lab in irr_universe(ctype, n):
        if ctype == "D" and lab[0] == "deg":
            if n != 4:
                continue
            vec = d4_degenerate_table()[lab]
        else:
            vec = class_values(group, lambda r, lab=lab: irr_value(ctype, lab, r))
        c = inner_product(group, tuple(residual), vec)
        assert c.denominator == 1, (lab, c)
        c = int(c)
        if c:
            out.add(lab, c)
            for i in range(len(residual)):
                residual[i] -= c * vec[i]
    assert all(v == 0 for v in residual), "decomposition left a residue"
    return out


# --- bridge from symbolic indexes to concrete triples --------------------------


def _block_a(n, offset, a, beta, gamma, gid0=None):
    """One symmetric block: (element, theta map on its gen ids, sigma signs).

    Positions offset+1 .. offset+a; gid0 is the parent generator index of
    the first transposition in the block (offset in type A, offset+1 in the
    signed groups, whose generator 0 is the sign generator).
    """
    if gid0 is None:
        gid0 = offset
    ids = list(range(gid0, gid0 + a - 1))
    elem = _sp_identity(n)
    theta = {i: i for i in ids}
    if beta in ("idplus", "fpfplus"):
        for i in ids:
            theta[i] = ids[0] + ids[-1] - i if ids else i
    if beta == "idplus":
        w = list(range(1, n + 1))
        for k in range(a):
            w[offset + k] = offset + a - k
        elem = tuple(w)
    elif beta == "fpf":
        w = list(range(1, n + 1))
        for k in range(0, a - 1, 2):
            w[offset + k], w[offset + k + 1] = offset + k + 2, offset + k + 1
        elem = tuple(w)
    sigma = {i: (1 if gamma == "triv" else -1) for i in ids}
    return ids, elem, theta, sigma


def _bridge_sign_block(kind, n, a0, beta, gamma):
    """Column-0 block of a signed group; generator ids 0 .. a0-1."""
    ids = list(range(a0))
    theta = {i: i for i in ids}
    w = list(range(1, n + 1))
    swap01 = False
    if beta == "idplus":
        if kind == "symB" or a0 % 2 == 0:
            for k in range(a0):
                w[k] = -(k + 1)
        else:
            for k in range(1, a0):
                w[k] = -(k + 1)
            swap01 = True
    elif beta == "fpf":
        for k in range(0, a0 - 1, 2):
            w[k], w[k + 1] = k + 2, k + 1
    elif beta == "fpfdiamond":
        w[0], w[1] = -2, -1
        for k in range(2, a0 - 1, 2):
            w[k], w[k + 1] = k + 2, k + 1
    elif isinstance(beta, tuple) and beta[0] == "pq":
        q = beta[2]
        if kind == "symB" or q % 2 == 0:
            for k in range(q):
                w[k] = -(k + 1)
        else:
            for k in range(1, q):
                w[k] = -(k + 1)
            swap01 = True
    elif isinstance(beta, tuple) and beta[0] == "tri":
        p, q, d = beta[1], beta[2], beta[3]
        if (p, q) == (3, 1):
            w = list(range(1, n + 1))
        elif d == "cw":
            w = [4, 3, 2, 1]
        else:
            w = [-4, 3, 2, -1]
        if d == "cw":
            theta[1], theta[3] = 3, 1
        else:
            theta[0], theta[3] = 3, 0
    if swap01:
        theta[0], theta[1] = 1, 0
    if gamma == "triv":
        sigma = {i: 1 for i in ids}
    elif gamma == "sgn":
        sigma = {i: -1 for i in ids}
    elif gamma == "pm":
        sigma = {0: 1, **{i: -1 for i in ids[1:]}}
    else:  # mp
        sigma = {0: -1, **{i: 1 for i in ids[1:]}}
    return ids, tuple(w), theta, sigma


def index_to_triple(group: Group, idx):
    """Concrete (J, minimal element, theta, sigma) for a model index."""
    n = idx.rank
    ids: list[int] = []
    elem = group.identity
    theta: dict[int, int] = {}
    sigma: dict[int, int] = {}
    if idx.ctype == "A":
        offset = 0
        for a, b, g in idx.columns:
            if a == 0:
                continue
            bi, be, bt, bs = _block_a(n, offset, a, b, g)
            ids += bi
            elem = _sp_mult(elem, be)
            theta.update(bt)
            sigma.update(bs)
            offset += a
    else:
        (a0, b0, g0), (a1, b1, g1) = idx.columns
        if a0:
            bi, be, bt, bs = _bridge_sign_block(group.kind, n, a0, b0, g0)
            ids += bi
            elem = _sp_mult(elem, be)
            theta.update(bt)
            sigma.update(bs)
        if a1:
            bi, be, bt, bs = _block_a(n, a0, abs(a1), b1, g1, gid0=a0 + 1)
            ids += bi
            elem = _sp_mult(elem, be)
            theta.update(bt)
            sigma.update(bs)
            if a1 < 0:
                # flip the whole picture through the outer symmetry
                s0 = tuple([-1] + list(range(2, n + 1)))
                elem = _sp_mult(_sp_mult(s0, elem), s0)
                remap = {1: 0}
                for i in range(2, n):
                    remap[i] = i
                ids = sorted(remap[i] for i in ids)
                theta = {remap[i]: remap[j] for i, j in theta.items()}
                sigma = {remap[i]: v for i, v in sigma.items()}
    ids_sorted = tuple(sorted(set(ids)))
    pos = {gid: p for p, gid in enumerate(ids_sorted)}
    theta_pos = tuple(pos[theta[gid]] for gid in ids_sorted)
    sigma_pos = tuple(sigma[gid] for gid in ids_sorted)
    return {"J": ids_sorted, "min": elem, "theta": theta_pos, "sigma": sigma_pos}


def oracle_char_of_index(group: Group, idx):
    """Induced character of an index computed entirely inside the oracle."""
    return triple_character(group, index_to_triple(group, idx))


def check_index_against_oracle(idx) -> bool:
    """Symbolic and group-theoretic characters of one index must agree.

    When the symbolic side carries unresolved degenerate mass, the oracle
    decomposition must match it in total over the two signs and dominate
    the resolved part signwise; otherwise the class functions must be
    identical.
    """
    from .model_index import character_of_index

    kind = {"A": "symA", "B": "symB", "D": "symD"}[idx.ctype]
    group = get_group(kind, idx.rank)
    sym = character_of_index(idx)
    orc = oracle_char_of_index(group, idx)
    if not sym.unresolved:
        return virtual_char_values(group, sym) == orc
    dec = decompose(group, idx.ctype, idx.rank, orc)
    for lab, c in dec.coeffs.items():
        if lab[0] == "set":
            if sym.coeffs.get(lab, 0) != c:
                return False
    for lab, c in sym.coeffs.items():
        if lab[0] == "set" and dec.coeffs.get(lab, 0) != c:
            return False
    from .partitions import partitions_of

    for core in partitions_of(idx.rank // 2):
        plus = dec.coeffs.get(("deg", core, "+"), 0)
        minus = dec.coeffs.get(("deg", core, "-"), 0)
        rp = sym.coeffs.get(("deg", core, "+"), 0)
        rm = sym.coeffs.get(("deg", core, "-"), 0)
        m = sym.unresolved.get(core, 0)
        if plus + minus != rp + rm + m or plus < rp or minus < rm:
            return False
    return True
