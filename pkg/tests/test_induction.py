"""Induction products, type-changing inductions, and closed-form columns."""

import pytest

from coxmodel import partitions as pt
from coxmodel.char_ring import (
    VirtualCharacter,
    char_of,
    d_deg,
    d_set,
    degree,
    irr_universe,
    twist,
)
from coxmodel.induction import (
    EXACT,
    UNRESOLVED,
    bullet,
    column_char,
    ind_A_to_B,
    ind_A_to_D,
    induce_D_to_B,
    project,
    restrict_B_to_D,
)


def test_bullet_a_is_lr_expansion():
    f = bullet("A", char_of("A", (2, 1)), char_of("A", (1,)))
    assert f == (
        char_of("A", (3, 1)).add((2, 2)).add((2, 1, 1))
    )


def test_bullet_degrees_multiply_with_binomial():
    from math import comb

    for ctype in ("A", "B"):
        f = char_of(ctype, irr_universe(ctype, 2)[1])
        g = char_of(ctype, irr_universe(ctype, 3)[2])
        prod = bullet(ctype, f, g)
        scale = comb(5, 2)
        assert prod.degree() == scale * f.degree() * g.degree()


def test_bullet_commutes():
    f = char_of("B", ((1,), (1,)))
    g = char_of("B", ((2,), ()))
    assert bullet("B", f, g) == bullet("B", g, f)


def test_ind_a_to_b_hook_expansion():
    # the six constituents of the rank-3 staircase, all multiplicity one
    got = ind_A_to_B(char_of("A", (2, 1)))
    want = VirtualCharacter("B", 3)
    for lab in [((2, 1), ()), ((2,), (1,)), ((1, 1), (1,)), ((1,), (2,)), ((1,), (1, 1)), ((), (2, 1))]:
        want.add(lab)
    assert got == want


def test_ind_a_to_d_staircase():
    got = ind_A_to_D(char_of("A", (2, 1)))
    want = VirtualCharacter("D", 3)
    want.add(d_set((2, 1), ())).add(d_set((2,), (1,))).add(d_set((1, 1), (1,)))
    assert got == want


def test_ind_a_to_d_extreme_cores_are_resolved():
    # trivial: the split follows the inducing side
    plus = ind_A_to_D(char_of("A", (4,)), side="plus")
    minus = ind_A_to_D(char_of("A", (4,)), side="minus")
    assert plus.coeffs[d_deg((2,), "+")] == 1
    assert minus.coeffs[d_deg((2,), "-")] == 1
    assert not plus.unresolved and not minus.unresolved
    # sign character: flips when the half-rank is odd
    sp = ind_A_to_D(char_of("A", (1, 1)), side="plus")
    assert sp.coeffs[d_deg((1,), "-")] == 1


def test_ind_a_to_d_middle_core_tracks_mass():
    # c^{(3,1)}_{(2),(2)} = 1 and c^{(3,1)}_{(1,1),(1,1)} = 0, so only the
    # core (2) carries unresolved degenerate mass
    got = ind_A_to_D(char_of("A", (3, 1)))
    assert got.unresolved == {(2,): 1}
    fully = ind_A_to_D(char_of("A", (3, 1)), policy=UNRESOLVED)
    assert fully.unresolved == {(2,): 1}


def test_restrict_b_to_d():
    got = restrict_B_to_D(char_of("B", ((2,), (1,))))
    assert got == char_of("D", d_set((2,), (1,)))
    split = restrict_B_to_D(char_of("B", ((2,), (2,))))
    assert split.coeffs[d_deg((2,), "+")] == 1
    assert split.coeffs[d_deg((2,), "-")] == 1


def test_induce_d_to_b():
    got = induce_D_to_B(char_of("D", d_set((2,), (1,))))
    assert got == char_of("B", ((2,), (1,))).add(((1,), (2,)))
    deg = induce_D_to_B(char_of("D", d_deg((2,), "+")))
    assert deg == char_of("B", ((2,), (2,)))


def test_b_lift_of_d_product():
    # induce to B, multiply there, restrict: the result is the D product
    # plus its diamond twist
    f = char_of("D", d_set((2,), ()))
    g = char_of("D", d_set((1,), ()))
    prod = bullet("D", f, g)
    assert prod == (
        char_of("D", d_set((3,), ()))
        .add(d_set((2, 1), ()))
        .add(d_set((2,), (1,)))
    )
    lifted = restrict_B_to_D(bullet("B", induce_D_to_B(f), induce_D_to_B(g)))
    doubled = VirtualCharacter("D", 3)
    for lab, c in prod.coeffs.items():
        doubled.add(lab, c)
    for lab, c in twist(prod, "diamond").coeffs.items():
        doubled.add(lab, c)
    assert lifted == doubled


def test_degenerate_product_resolved_by_case_table():
    fp = char_of("D", d_deg((1,), "+"))
    fm = char_of("D", d_deg((1,), "-"))
    pm = bullet("D", fp, fm)
    assert pm == (
        char_of("D", d_set((2,), (1, 1)))
        .add(d_deg((2,), "-"))
        .add(d_deg((1, 1), "-"))
    )
    # the diamond twist acts on the left factor, so twisting the product
    # matches swapping one sign
    pp = bullet("D", fp, fp)
    assert twist(pp, "diamond") == pm
    assert bullet("D", fm, fm) == pp
    # independent check through type B: restriction of the lifted product
    # is the D product plus its diamond twist
    lifted = restrict_B_to_D(bullet("B", induce_D_to_B(fp), induce_D_to_B(fm)))
    doubled = VirtualCharacter("D", 4)
    for src in (pm, twist(pm, "diamond")):
        for lab, c in src.coeffs.items():
            doubled.add(lab, c)
    assert lifted == doubled


def test_bullet_rejects_unresolved_inputs():
    f = ind_A_to_D(char_of("A", (3, 1)))
    with pytest.raises(ValueError):
        bullet("D", f, char_of("D", d_set((1,), ())))


def test_projections():
    f = char_of("B", ((2, 1), ())).add(((2,), (1,))).add(((), (2, 1)))
    assert project("piL", f) == char_of("A", (2, 1))
    assert project("piR", f) == char_of("A", (2, 1))
    g = char_of("D", d_set((4,), ())).add(d_set((3,), (1,))).add(d_deg((2,), "+"))
    assert project("piD", g) == char_of("A", (4,))


def test_column_char_a():
    assert column_char("A", (3, "id", "triv")) == char_of("A", (3,))
    assert column_char("A", (3, "id", "sgn")) == char_of("A", (1, 1, 1))
    fpf = column_char("A", (4, "fpf", "triv"))
    assert fpf == char_of("A", (4,)).add((2, 2))
    cols = column_char("A", (4, "fpf", "sgn"))
    assert set(cols.coeffs) == {pt.transpose(p) for p in fpf.coeffs}


def test_column_char_b_identity_class():
    assert column_char("B", (3, "id", "triv")) == char_of("B", ((3,), ()))
    assert column_char("B", (3, "id", "sgn")) == char_of("B", ((), (1, 1, 1)))
    assert column_char("B", (3, "id", "pm")) == char_of("B", ((1, 1, 1), ()))
    assert column_char("B", (3, "id", "mp")) == char_of("B", ((), (3,)))


def test_column_char_b_fpf_collapses_mixed_characters():
    assert column_char("B", (4, "fpf", "mp")) == column_char("B", (4, "fpf", "triv"))
    assert column_char("B", (4, "fpf", "pm")) == column_char("B", (4, "fpf", "sgn"))
    f = column_char("B", (4, "fpf", "triv"))
    assert set(f.coeffs) == {((lam), (mu)) for lam, mu in pt.erows_b(4)}


def test_column_char_b_split_class_shapes():
    # one-row staircase shapes: lambda has max+r, min-r rows pattern
    f = column_char("B", (3, ("pq", 2, 1), "triv"))
    assert all(mu == () for _, mu in f.coeffs)
    g = column_char("B", (3, ("pq", 2, 1), "mp"))
    assert all(lam == () for lam, _ in g.coeffs)
    assert {mu for _, mu in g.coeffs} == {lam for lam, _ in f.coeffs}
    h = column_char("B", (3, ("pq", 2, 1), "sgn"))
    assert {mu for _, mu in h.coeffs} == {pt.transpose(lam) for lam, _ in f.coeffs}


def test_column_char_d_triality():
    f = column_char("D", (4, ("tri", 3, 1, "cw"), "triv"))
    assert f.coeffs == {d_set((4,), ()): 1, d_deg((2,), "+"): 1}
    g = column_char("D", (4, ("tri", 3, 1, "ccw"), "triv"))
    assert g.coeffs == {d_set((4,), ()): 1, d_deg((2,), "-"): 1}


def test_column_char_d_fpf_pair():
    f = column_char("D", (4, "fpf", "triv"))
    g = column_char("D", (4, "fpfdiamond", "triv"))
    # diamond twins: same nondegenerate part, opposite signs
    assert {k: v for k, v in f.coeffs.items() if k[0] == "set"} == {
        k: v for k, v in g.coeffs.items() if k[0] == "set"
    }
    fd = {k[1:] for k in f.coeffs if k[0] == "deg"}
    gd = {k[1:] for k in g.coeffs if k[0] == "deg"}
    assert {c for c, _ in fd} == {c for c, _ in gd}
    assert fd != gd
