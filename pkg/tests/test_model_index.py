"""Index validity, rewrites, equivalence orbits, and index-level projections."""

import pytest

from coxmodel.char_ring import twist
from coxmodel.induction import project
from coxmodel.model_index import (
    ModelIndex,
    canonical_form,
    character_of_index,
    check_valid,
    enumerate_indices,
    equivalence_orbit,
    format_index,
    from_json,
    normalize,
    project_index,
    transform,
    validate,
)


def mi(ctype, *cols):
    return ModelIndex(ctype, cols)


def test_validate_accepts_good_indexes():
    assert validate(mi("A", (4, "fpf", "triv"))) == []
    assert validate(mi("B", (2, ("pq", 1, 1), "pm"), (1, "id", "sgn"))) == []
    assert validate(mi("D", (4, ("tri", 3, 1, "cw"), "triv"), (0, "id", "triv"))) == []
    assert validate(mi("D", (0, "id", "triv"), (-5, "idplus", "sgn"))) == []


@pytest.mark.parametrize(
    "idx",
    [
        mi("A", (3, "fpf", "triv")),  # odd fpf block
        mi("A", (0, "id", "triv")),  # rank zero
        mi("B", (2, "fpf", "pm"), (0, "id", "triv")),  # mixed char on fpf
        mi("B", (3, ("pq", 1, 1), "triv"), (0, "id", "triv")),  # p+q != size
        mi("B", (1, "id", "triv"), (3, "fpf", "triv")),  # col-1 fpf floor is 4
        mi("D", (1, "id", "triv"), (3, "id", "triv")),  # size-1 sign block
        mi("D", (3, "id", "pm"), (0, "id", "triv")),  # mixed char off size 2
        mi("D", (4, ("tri", 2, 2, "cw"), "triv"), (0, "id", "triv")),
        mi("D", (2, "id", "triv"), (-2, "id", "triv")),  # partial flip
    ],
)
def test_validate_rejects_bad_indexes(idx):
    assert validate(idx)
    with pytest.raises(ValueError):
        check_valid(idx)


def test_normalize_drops_zero_columns_in_type_a():
    idx = mi("A", (0, "id", "triv"), (5, "idplus", "sgn"))
    assert normalize(idx) == mi("A", (5, "id", "sgn"))
    # idempotent
    assert normalize(normalize(idx)) == normalize(idx)


def test_normalize_collapses_small_blocks():
    idx = mi("B", (1, "id", "triv"), (2, "idplus", "sgn"))
    assert normalize(idx) == mi("B", (1, "id", "triv"), (2, "id", "sgn"))
    # rank-2 type D sign block is abelian, class symbol collapses
    idx2 = mi("D", (2, "fpf", "pm"), (2, "id", "triv"))
    assert normalize(idx2).columns[0] == (2, "id", "pm")


def test_json_roundtrip_and_format():
    idx = mi("B", (3, ("pq", 2, 1), "mp"), (2, "id", "sgn"))
    assert from_json(idx.to_json()) == idx
    assert format_index(idx) == "B[3,2;(2,1),id;mp,sgn]"


def test_dual_is_an_involution():
    samples = [
        mi("A", (3, "id", "triv"), (2, "id", "sgn")),
        mi("B", (3, ("pq", 2, 1), "pm"), (4, "fpf", "triv")),
        mi("B", (2, "fpf", "triv"), (3, "id", "sgn")),
        mi("D", (4, "fpf", "triv"), (1, "id", "triv")),
        mi("D", (4, ("tri", 3, 1, "cw"), "sgn"), (0, "id", "triv")),
        mi("D", (2, "id", "pm"), (3, "id", "triv")),
    ]
    for idx in samples:
        back = normalize(transform(transform(idx, "dual"), "dual"))
        assert back == normalize(idx)


def test_star_reverses_type_a_columns():
    idx = mi("A", (3, "id", "triv"), (2, "id", "sgn"))
    assert transform(idx, "star") == mi("A", (2, "id", "sgn"), (3, "id", "triv"))


def test_dual_preserves_the_character():
    samples = [
        mi("A", (4, "fpf", "triv")),
        mi("A", (3, "id", "sgn"), (2, "id", "triv")),
        mi("B", (2, "id", "pm"), (2, "id", "sgn")),
        mi("B", (4, "fpf", "triv"), (0, "id", "triv")),
        mi("D", (4, "fpf", "triv"), (0, "id", "triv")),
        mi("D", (0, "id", "triv"), (5, "id", "sgn")),
    ]
    for idx in samples:
        assert character_of_index(transform(idx, "dual")) == character_of_index(idx)


def test_bar_twists_the_character_by_sgn():
    samples = [
        mi("A", (3, "id", "triv"), (2, "id", "sgn")),
        mi("B", (2, "id", "pm"), (2, "id", "sgn")),
        mi("D", (4, "fpf", "triv"), (0, "id", "triv")),
    ]
    for idx in samples:
        got = character_of_index(transform(idx, "bar"))
        assert got == twist(character_of_index(idx), "sgn")


def test_diamond_twists_the_character():
    idx = mi("D", (4, "fpf", "triv"), (0, "id", "triv"))
    got = character_of_index(transform(idx, "diamond"))
    assert got == twist(character_of_index(idx), "diamond")
    tri = mi("D", (4, ("tri", 3, 1, "cw"), "triv"), (0, "id", "triv"))
    assert character_of_index(transform(tri, "diamond")) == twist(
        character_of_index(tri), "diamond"
    )


def test_canonical_form_is_constant_on_orbits():
    for idx in [
        mi("B", (3, "id", "pm"), (2, "id", "sgn")),
        mi("D", (4, "fpf", "triv"), (1, "id", "triv")),
        mi("A", (3, "id", "triv"), (2, "id", "sgn")),
    ]:
        for relation in ("strong", "full"):
            orbit = equivalence_orbit(idx, relation)
            canon = canonical_form(idx, relation)
            assert canon in orbit
            for member in orbit:
                assert canonical_form(member, relation) == canon


def test_full_orbit_contains_strong_orbit():
    idx = mi("B", (2, "id", "pm"), (1, "id", "triv"))
    strong = set(equivalence_orbit(idx, "strong"))
    full = set(equivalence_orbit(idx, "full"))
    assert strong <= full
    assert normalize(transform(idx, "bar")) in full


def test_frozen_character_example():
    got = character_of_index(mi("B", (0, "id", "triv"), (3, "id", "sgn")))
    labs = {((1, 1, 1), ()), ((1, 1), (1,)), ((1,), (1, 1)), ((), (1, 1, 1))}
    assert dict(got.coeffs) == {lab: 1 for lab in labs}


def _check_projection(kind, idx):
    chi = character_of_index(idx)
    img = project(kind, chi)
    pidx = project_index(kind, idx)
    if pidx is None:
        assert not img.coeffs
    else:
        assert character_of_index(pidx) == img


def test_index_projections_commute_b():
    for idx in enumerate_indices("B", 3):
        _check_projection("piL", idx)
        _check_projection("piR", idx)


def test_index_projections_commute_d():
    for idx in enumerate_indices("D", 4):
        _check_projection("piD", idx)


def test_enumerate_mf_filter_is_a_subset():
    full = set(enumerate_indices("B", 3))
    mf = enumerate_indices("B", 3, mf_only=True)
    assert set(mf) <= full
    from coxmodel.char_ring import is_multiplicity_free

    for idx in mf:
        assert is_multiplicity_free(character_of_index(idx)) is not False


def test_enumerate_returns_canonical_representatives():
    for idx in enumerate_indices("D", 4):
        assert canonical_form(idx, "strong") == idx
