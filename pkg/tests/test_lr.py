"""Littlewood-Richardson coefficients against an independent enumeration.

The reference implementation below counts LR skew tableaux directly from
the definition (semistandard fillings of nu/lam with content mu whose
reverse reading word is a lattice word), sharing no code with the library.
"""

from itertools import zip_longest

import pytest
from hypothesis import given, settings, strategies as st

from coxmodel import partitions as pt
from coxmodel.lr import lr_coefficient, lr_expand, lr_mass_check


def _reference_lr(lam, mu, nu):
    if sum(lam) + sum(mu) != sum(nu) or not pt.contains(nu, lam):
        return 0
    rows = len(nu)
    lam = lam + (0,) * (rows - len(lam))
    cells = [(r, c) for r in range(rows) for c in range(lam[r], nu[r])]
    count = 0
    filling = {}

    def lattice_ok():
        word = []
        for r in range(rows):
            for c in range(nu[r] - 1, lam[r] - 1, -1):
                word.append(filling[(r, c)])
        seen = [0] * (len(mu) + 1)
        for v in word:
            seen[v - 1] += 1
            if v > 1 and seen[v - 1] > seen[v - 2]:
                return False
        return True

    def fill(k, content):
        nonlocal count
        if k == len(cells):
            if tuple(content) == mu and lattice_ok():
                count += 1
            return
        r, c = cells[k]
        for v in range(1, len(mu) + 1):
            if content[v - 1] == mu[v - 1]:
                continue
            left = filling.get((r, c - 1))
            if left is not None and left > v:
                continue
            above = filling.get((r - 1, c))
            if above is not None and above >= v:
                continue
            filling[(r, c)] = v
            content[v - 1] += 1
            fill(k + 1, content)
            content[v - 1] -= 1
            del filling[(r, c)]

    fill(0, [0] * len(mu))
    return count


@pytest.mark.parametrize(
    "lam,mu,nu,want",
    [
        ((2, 1), (2, 1), (3, 2, 1), 2),
        ((2, 1), (2, 1), (4, 2), 1),
        ((2, 1), (2, 1), (2, 2, 1, 1), 1),
        ((3, 1), (2, 1), (4, 2, 1), 2),
        ((2,), (1, 1), (3, 1), 1),
        ((2,), (1, 1), (2, 2), 0),
        ((1,), (1,), (2,), 1),
    ],
)
def test_known_coefficients(lam, mu, nu, want):
    assert lr_coefficient(lam, mu, nu) == want
    assert _reference_lr(lam, mu, nu) == want


def test_pieri_row():
    # multiplying by a single row adds a horizontal strip
    got = lr_expand((2, 1), (2,))
    assert got == {(4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1}


def test_pieri_column():
    got = lr_expand((2, 1), (1, 1))
    assert got == {(3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1, (2, 1, 1, 1): 1}


def test_expand_against_reference():
    for wl in range(1, 5):
        for wm in range(1, 5):
            for lam in pt.partitions_of(wl):
                for mu in pt.partitions_of(wm):
                    exp = lr_expand(lam, mu)
                    for nu in pt.partitions_of(wl + wm):
                        assert exp.get(nu, 0) == _reference_lr(lam, mu, nu)


small = st.integers(0, 5).flatmap(
    lambda n: st.sampled_from(pt.partitions_of(n)) if n else st.just(())
)


@settings(max_examples=120, deadline=None)
@given(small, small)
def test_symmetry(lam, mu):
    assert lr_expand(lam, mu) == lr_expand(mu, lam)


@settings(max_examples=120, deadline=None)
@given(small, small)
def test_transpose_symmetry(lam, mu):
    exp = lr_expand(lam, mu)
    expt = lr_expand(pt.transpose(lam), pt.transpose(mu))
    assert {pt.transpose(nu): c for nu, c in exp.items()} == expt


@settings(max_examples=120, deadline=None)
@given(small, small)
def test_degree_mass(lam, mu):
    # dimensions add up: sum over nu of c * f(nu) * binomials equals the
    # induced-degree identity packaged by lr_mass_check
    assert lr_mass_check(lam, mu)


def test_extreme_shapes_have_coefficient_one():
    for lam, mu in [((3, 1), (2, 2)), ((2, 2, 1), (3,)), ((1, 1), (1, 1))]:
        s = tuple(a + b for a, b in zip_longest(lam, mu, fillvalue=0))
        u = tuple(sorted(lam + mu, reverse=True))
        assert lr_coefficient(lam, mu, s) == 1
        assert lr_coefficient(lam, mu, u) == 1
