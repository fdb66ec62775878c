"""Perfect model search, known families, and classification.

A perfect model is a set of multiplicity-free model characters whose sum
hits every irreducible exactly once; equivalently the sum equals the
square-root-count class function.  The symbolic search enumerates the
multiplicity-free index candidates, groups them by character, and runs an
exact cover over the irreducible labels.  Covers are then expanded back to
index-level models and counted up to strong or full equivalence, where two
models are equivalent when their members match up elementwise.

The even-rank type D nonexistence argument is packaged as a replayable
certificate built from the degenerate labels: a perfect model needs both
signs of every core from rows with disjoint constituents, and the
certificate exhibits a core (or a global selection conflict) ruling that
out.
"""

from __future__ import annotations

from itertools import product

from . import partitions as pt
from .char_ring import VirtualCharacter, irr_universe
from .induction import EXACT, DegenSplitPolicy
from .model_index import (
    ModelIndex,
    canonical_form,
    character_of_index,
    enumerate_indices,
    normalize,
)

SEARCH_CAPS = {"A": 10, "B": 8, "D": 8}


# --- the known families -------------------------------------------------------


def known_model(family: str, n: int) -> tuple[ModelIndex, ...]:
    """Index lists for the named perfect model families."""
    if family == "PA":
        if n < 1:
            raise ValueError("PA needs rank >= 1")
        return tuple(
            normalize(ModelIndex("A", [(2 * k, "fpf", "triv"), (n - 2 * k, "id", "sgn")]))
            for k in range(n // 2 + 1)
        )
    if family in ("PB", "PD"):
        ctype = "B" if family == "PB" else "D"
        if n < 2 or (ctype == "D" and n % 2 == 0):
            raise ValueError(f"{family} needs rank >= 2" + (" and odd" if ctype == "D" else ""))
        return tuple(
            normalize(ModelIndex(ctype, [(2 * k, "fpf", "triv"), (n - 2 * k, "id", "sgn")]))
            for k in range(n // 2 + 1)
        )
    if family == "PBhat":
        if n < 2:
            raise ValueError("PBhat needs rank >= 2")
        out = []
        for k in range(n // 2 + 1):
            if k == 1:
                out.append(normalize(ModelIndex("B", [(2, "id", "triv"), (n - 2, "id", "sgn")])))
                out.append(normalize(ModelIndex("B", [(2, "id", "mp"), (n - 2, "id", "sgn")])))
            else:
                out.append(
                    normalize(ModelIndex("B", [(2 * k, "fpf", "triv"), (n - 2 * k, "id", "sgn")]))
                )
        return tuple(out)
    if family == "Aextra4":
        if n != 4:
            raise ValueError("Aextra4 exists at rank 4 only")
        return (
            normalize(ModelIndex("A", [(1, "id", "triv"), (3, "id", "sgn")])),
            normalize(ModelIndex("A", [(2, "id", "triv"), (2, "id", "triv")])),
        )
    if family in ("B3extra1", "B3extra2"):
        if n != 3:
            raise ValueError(f"{family} exists at rank 3 only")
        if family == "B3extra1":
            cols = [
                [(1, "id", "triv"), (2, "id", "triv")],
                [(2, "id", "sgn"), (1, "id", "triv")],
                [(3, "id", "pm"), (0, "id", "triv")],
                [(3, "id", "mp"), (0, "id", "triv")],
            ]
        else:
            # at block size one the two mixed characters coincide with
            # sgn and triv respectively.
            cols = [
                [(1, "id", "sgn"), (2, "id", "triv")],
                [(2, "id", "pm"), (1, "id", "triv")],
                [(3, "id", "triv"), (0, "id", "triv")],
                [(3, "id", "sgn"), (0, "id", "triv")],
            ]
        return tuple(normalize(ModelIndex("B", c)) for c in cols)
    raise ValueError(f"unknown family: {family!r}")


KNOWN_FAMILIES = ("PA", "PB", "PBhat", "PD", "Aextra4", "B3extra1", "B3extra2")


# --- perfection test -----------------------------------------------------------


def is_perfect_symbolic(indices, policy: DegenSplitPolicy = EXACT) -> dict:
    """Verdict on a candidate model given as a list of indexes.

    Returns {"status": "perfect" | "not_perfect" | "needs_oracle", ...}
    with a witness label or the undecided degenerate cores attached.
    """
    indices = [idx if isinstance(idx, ModelIndex) else ModelIndex(**idx) for idx in indices]
    if not indices:
        raise ValueError("empty model")
    ctype, n = indices[0].ctype, indices[0].rank
    total = VirtualCharacter(ctype, n)
    for idx in indices:
        if idx.ctype != ctype or idx.rank != n:
            raise ValueError("mixed types or ranks in model")
        total.add_char(character_of_index(idx, policy))
    universe = irr_universe(ctype, n)
    cores_unknown = []
    for lab in universe:
        if ctype == "D" and lab[0] == "deg":
            continue
        if total.coeffs.get(lab, 0) != 1:
            return {
                "status": "not_perfect",
                "witness": lab,
                "multiplicity": total.coeffs.get(lab, 0),
            }
    if ctype == "D" and n % 2 == 0:
        for core in pt.partitions_of(n // 2):
            a = total.coeffs.get(("deg", core, "+"), 0)
            b = total.coeffs.get(("deg", core, "-"), 0)
            m = total.unresolved.get(core, 0)
            if a > 1 or b > 1 or a + b + m != 2:
                return {
                    "status": "not_perfect",
                    "witness": ("deg", core, "+"),
                    "multiplicity": a + b + m,
                }
            if m:
                cores_unknown.append(core)
    if cores_unknown:
        return {"status": "needs_oracle", "cores": cores_unknown}
    return {"status": "perfect"}


# --- exact cover search ---------------------------------------------------------


def _candidate_rows(ctype: str, n: int):
    """Multiplicity-free candidates grouped by character."""
    rows: dict = {}
    for idx in enumerate_indices(ctype, n, mf_only=True):
        chi = character_of_index(idx)
        if chi.has_unresolved():
            raise ValueError(f"unexpected unresolved candidate {idx}")
        key = tuple(sorted(chi.coeffs.items(), key=lambda kv: str(kv)))
        rows.setdefault(key, (chi, []))[1].append(idx)
    return [(chi, tuple(ids)) for chi, ids in rows.values()]


def search_perfect_models(ctype: str, n: int):
    """Every perfect model at this rank, as covers of character rows."""
    if n > SEARCH_CAPS.get(ctype, 0):
        raise ValueError(f"search capped at rank {SEARCH_CAPS[ctype]} for type {ctype}")
    universe = irr_universe(ctype, n)
    pos = {lab: i for i, lab in enumerate(universe)}
    rows = _candidate_rows(ctype, n)
    masks = []
    for chi, ids in rows:
        mask = 0
        for lab in chi.coeffs:
            mask |= 1 << pos[lab]
        masks.append(mask)
    full = (1 << len(universe)) - 1
    by_label = [
        [r for r in range(len(rows)) if masks[r] >> i & 1]
        for i in range(len(universe))
    ]
    covers = []
    chosen: list[int] = []

    def rec(covered):
        if covered == full:
            covers.append(tuple(chosen))
            return
        # branch on the uncovered label with the fewest usable rows
        best, best_rows = None, None
        for i in range(len(universe)):
            if covered >> i & 1:
                continue
            usable = [r for r in by_label[i] if masks[r] & covered == 0]
            if best_rows is None or len(usable) < len(best_rows):
                best, best_rows = i, usable
                if not usable:
                    break
        for r in best_rows:
            chosen.append(r)
            rec(covered | masks[r])
            chosen.pop()

    rec(0)
    return [tuple(rows[r] for r in cover) for cover in covers]


def classify(ctype: str, n: int, relation: str = "strong") -> dict:
    """Count and list the perfect models up to the chosen equivalence."""
    covers = search_perfect_models(ctype, n)
    classes: dict = {}
    for cover in covers:
        pools = [ids for _, ids in cover]
        for combo in product(*pools):
            key = frozenset(canonical_form(idx, relation) for idx in combo)
            if key not in classes:
                classes[key] = tuple(sorted(combo, key=ModelIndex.key))
    models = sorted(classes.values(), key=lambda c: [i.key() for i in c])
    return {
        "type": ctype,
        "rank": n,
        "relation": relation,
        "count": len(classes),
        "models": models,
    }


# --- even rank type D nonexistence ---------------------------------------------


def d_even_nonexistence(n: int) -> dict:
    """Replayable certificate that even rank >= 6 admits no perfect model.

    Every perfect model must hit both signs of each degenerate core
    exactly once, using candidate characters that are pairwise disjoint in
    every constituent.  The certificate records, per core, which candidates
    carry it, and shows that no disjoint selection covers all cores.
    """
    if n < 6 or n % 2 != 0:
        raise ValueError("certificate applies to even rank >= 6")
    rows = _candidate_rows("D", n)
    cores = pt.partitions_of(n // 2)
    info = []
    for chi, ids in rows:
        degens = {
            (lab[1], lab[2]) for lab in chi.coeffs if lab[0] == "deg"
        }
        info.append(
            {
                "indices": ids,
                "labels": frozenset(chi.coeffs),
                "degens": degens,
            }
        )
    relevant = [i for i, r in enumerate(info) if r["degens"]]

    def disjoint(i, j):
        return not (info[i]["labels"] & info[j]["labels"])

    # try to select pairwise-disjoint rows covering (core, +) and (core, -)
    # for every core; exhaustive over the relevant rows.
    need = [(core, s) for core in cores for s in "+-"]
    trace = {"per_core": {}}
    for core, s in need:
        carriers = [i for i in relevant if (core, s) in info[i]["degens"]]
        trace["per_core"].setdefault(pt.format_partition(core), {})[s] = [
            [idx.to_json() for idx in info[i]["indices"]] for i in carriers
        ]
    chosen: list[int] = []
    found: list[tuple] = []

    def rec(k):
        if found:
            return
        if k == len(need):
            found.append(tuple(chosen))
            return
        core, s = need[k]
        if any((core, s) in info[i]["degens"] for i in chosen):
            rec(k + 1)
            return
        for i in relevant:
            if (core, s) not in info[i]["degens"]:
                continue
            if any(not disjoint(i, j) for j in chosen):
                continue
            chosen.append(i)
            rec(k + 1)
            chosen.pop()

    rec(0)
    if not found:
        cert = {
            "rank": n,
            "stage": "degenerate-selection",
            "cores": [pt.format_partition(c) for c in cores],
            "trace": trace,
            "conclusion": "no disjoint candidate selection covers every "
            "degenerate core with both signs",
        }
        return cert
    # a selection exists on the degenerate side; fall back to the full
    # exact cover, which must come up empty.
    covers = search_perfect_models("D", n)
    if covers:
        raise AssertionError(f"perfect model found at even rank {n}")
    return {
        "rank": n,
        "stage": "exhaustive",
        "cores": [pt.format_partition(c) for c in cores],
        "trace": trace,
        "conclusion": "exact cover over all multiplicity-free candidates is empty",
    }


def replay_certificate(cert: dict) -> bool:
    """Re-derive a nonexistence certificate from scratch and compare."""
    fresh = d_even_nonexistence(cert["rank"])
    return (
        fresh["stage"] == cert["stage"]
        and fresh["cores"] == cert["cores"]
        and fresh["trace"] == cert["trace"]
    )


# --- dihedral groups ------------------------------------------------------------


def dihedral_labels(m: int):
    """Irreducible labels of the order 2m dihedral group, m >= 3."""
    out = ["triv", "sgn"]
    if m % 2 == 0:
        out += ["pm", "mp"]
    out += [("rho", h) for h in range(1, (m - 1) // 2 + 1 if m % 2 else m // 2)]
    return tuple(out)


def dihedral_triples(m: int):
    """All model triples with their character label multisets.

    Triples are (J, sigma) with J one of "st", "s", "t"; the perfect class
    is forced (the identity and the longest twisted involution induce the
    same character, so classes are folded into the character).
    """
    rhos = [lab for lab in dihedral_labels(m) if isinstance(lab, tuple)]
    out = []
    for sigma in ("triv", "sgn") + (("pm", "mp") if m % 2 == 0 else ()):
        out.append((("st", sigma), {sigma: 1}))
    for J in ("s", "t"):
        for sigma in ("triv", "sgn"):
            char = {lab: 1 for lab in rhos}
            if m % 2 == 1:
                char[sigma] = 1
            else:
                mixed = {
                    ("s", "triv"): "pm",
                    ("s", "sgn"): "mp",
                    ("t", "triv"): "mp",
                    ("t", "sgn"): "pm",
                }[(J, sigma)]
                char[sigma] = 1
                char[mixed] = 1
            out.append(((J, sigma), char))
    return out


def _dihedral_triple_canonical(m: int, triple, relation: str):
    """Orbit-least name of a dihedral triple under the chosen relation."""
    J, sigma = triple
    orbit = {(J, sigma)}
    frontier = [(J, sigma)]
    bar = {"triv": "sgn", "sgn": "triv", "pm": "mp", "mp": "pm"}
    while frontier:
        j, s = frontier.pop()
        images = []
        if m % 2 == 1 and j in ("s", "t"):
            # the two reflection classes are conjugate
            images.append(("t" if j == "s" else "s", s))
        if relation == "full":
            images.append((j, bar[s]))
            if m % 2 == 0:
                # outer swap of the two generators
                jj = {"s": "t", "t": "s", "st": "st"}[j]
                ss = {"pm": "mp", "mp": "pm"}.get(s, s)
                images.append((jj, ss))
        for img in images:
            if img not in orbit:
                orbit.add(img)
                frontier.append(img)
    return min(orbit, key=lambda t: (t[0], str(t[1])))


def classify_dihedral(m: int, relation: str = "strong") -> dict:
    """Closed-form perfect model classification for the dihedral groups."""
    if m < 5:
        raise ValueError("dihedral classification needs m >= 5")
    labels = dihedral_labels(m)
    triples = dihedral_triples(m)
    # dedupe triples by character (distinct reflection classes with equal
    # characters collapse here, matching strong equivalence)
    rows: dict = {}
    for name, char in triples:
        key = tuple(sorted((str(k), v) for k, v in char.items()))
        rows.setdefault(key, (char, []))[1].append(name)
    rows = list(rows.values())
    pos = {lab: i for i, lab in enumerate(labels)}
    masks = []
    for char, _ in rows:
        mask = 0
        for lab in char:
            mask |= 1 << pos[lab]
        masks.append(mask)
    full = (1 << len(labels)) - 1
    covers = []

    def rec(start, covered, chosen):
        if covered == full:
            covers.append(tuple(chosen))
            return
        for r in range(start, len(rows)):
            if masks[r] & covered:
                continue
            rec(r + 1, covered | masks[r], chosen + [r])

    rec(0, 0, [])
    # each cover actually covering every label exactly once is a model
    classes: dict = {}
    for cover in covers:
        pools = [rows[r][1] for r in cover]
        for combo in product(*pools):
            key = frozenset(
                _dihedral_triple_canonical(m, t, relation) for t in combo
            )
            if key not in classes:
                classes[key] = tuple(sorted(combo, key=str))
    models = sorted(classes.values(), key=str)
    return {
        "type": "I2",
        "rank": m,
        "relation": relation,
        "count": len(classes),
        "models": models,
    }


def dihedral_known_models(m: int):
    """The catalog of perfect models predicted by the closed form."""
    if m % 2 == 1:
        return (
            (("st", "triv"), ("s", "sgn")),
            (("st", "sgn"), ("s", "triv")),
        )
    return (
        (("st", "triv"), ("st", "pm"), ("s", "sgn")),
        (("st", "triv"), ("st", "mp"), ("t", "sgn")),
        (("st", "sgn"), ("st", "mp"), ("s", "triv")),
        (("st", "sgn"), ("st", "pm"), ("t", "triv")),
    )


# --- the icosahedral rank three group -------------------------------------------


def h3_known_models():
    """Model triples (J as generator subset, sigma signs per generator)."""
    return (
        (((0, 1, 2), (1, 1, 1)), ((0, 1, 2), (-1, -1, -1)), ((0, 2), (1, -1))),
        (((0, 1, 2), (1, 1, 1)), ((0, 1, 2), (-1, -1, -1)), ((0, 2), (-1, 1))),
        (((0, 1), (1, 1)), ((1, 2), (-1, -1))),
        (((0, 1), (-1, -1)), ((1, 2), (1, 1))),
    )


def verify_h3_model(model) -> bool:
    """Check one known model against the oracle, pointwise.

    Each member is (J, signs): the parabolic generator subset and the
    character signs on its generators.  The perfect class is the identity
    class in every case, so the inducing subgroup is the parabolic itself.
    """
    from . import oracle as oc

    group = oc.get_group("h3")
    chars = []
    for J, signs in model:
        sub = group.subgroup(tuple(J))
        triple = {
            "J": tuple(J),
            "min": group.identity,
            "theta": tuple(range(len(J))),
            "sigma": tuple(signs),
            "_sub": sub,
        }
        chars.append(oc.triple_character(group, triple))
    return oc.oracle_is_perfect(group, chars)


def _h3_triple_key(group, desc):
    """Canonical strong-equivalence key of an oracle triple.

    Triples with the same generator subset, the same twisted centralizer,
    and the same restricted character are elementarily equivalent.  The
    longest element here is central and the diagram is asymmetric, so
    duals and inner automorphisms add nothing beyond that.
    """
    from . import oracle as oc

    J, zmin, theta_perm, sigma = desc
    sub = group.subgroup(J)
    theta = {w: sub.apply_auto(theta_perm, w) for w in sub.elements}
    cent = oc.twisted_centralizer(group, sub, zmin, theta)
    values = tuple(
        sorted((group.index[g], oc.linear_value(sub, sigma, g)) for g in cent)
    )
    return (J, values)


def classify_h3() -> dict:
    """Exhaustive oracle classification for the rank three icosahedral group."""
    from . import oracle as oc

    group = oc.get_group("h3")
    covers = oc.oracle_search(group)
    classes: dict = {}
    for cover in covers:
        pools = []
        for _, descs in cover:
            pools.append(sorted({_h3_triple_key(group, d) for d in descs}))
        for combo in product(*pools):
            key = frozenset(combo)
            classes.setdefault(key, combo)
    models = sorted(classes.values(), key=str)
    return {
        "type": "H3",
        "rank": 3,
        "relation": "strong",
        "count": len(classes),
        "models": models,
    }
