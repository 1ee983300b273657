import random

import pytest
from hypothesis import given, strategies as st

from gradedrings.rings import IntegerModRing, IntegerRing
from gradedrings.special_algebras import (LeavittRing, WeylRing,
                                          leavitt_iso_check,
                                          leavitt_matrix_units,
                                          leavitt_rank_certificate,
                                          weyl_component_basis,
                                          weyl_coordinates, weyl_phi0,
                                          weyl_phi0_multiplicative)


# Leavitt ----------------------------------------------------------------------


def test_leavitt_defining_relations():
    L = LeavittRing(2)
    for i in (1, 2):
        for j in (1, 2):
            want = L.one() if i == j else L.zero()
            assert L.eq(L.mul(L.gen_star(i), L.gen(j)), want)
    acc = L.zero()
    for i in (1, 2):
        acc = L.add(acc, L.mul(L.gen(i), L.gen_star(i)))
    assert L.eq(acc, L.one())


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_leavitt_certificate(n):
    cert = leavitt_rank_certificate(n)
    assert (cert.n, cert.m) == (1, n)
    assert leavitt_iso_check(n)


def test_leavitt_normal_form_idempotent():
    L = LeavittRing(2)
    # e2 e2' = 1 - e1 e1' after rewriting
    x = L.monomial((2,), (2,))
    y = L.add(L.one(), L.neg(L.monomial((1,), (1,))))
    assert L.eq(x, y)


def test_leavitt_over_z5():
    L = LeavittRing(2, IntegerModRing(5))
    assert leavitt_iso_check(2, IntegerModRing(5))
    assert L.eq(L.from_int(7), L.from_int(2))


word = st.lists(st.sampled_from([1, 2]), max_size=3).map(tuple)


@given(word, word, word, word)
def test_leavitt_degree_additive(a1, b1, a2, b2):
    L = LeavittRing(2)
    x = L.monomial(a1, b1)
    y = L.monomial(a2, b2)
    d = (len(a1) - len(b1)) + (len(a2) - len(b2))
    assert L.is_homogeneous(L.mul(x, y), d)


def test_leavitt_parser_round_trip():
    L = LeavittRing(2)
    for s in ["e1", "e2'", "e1 e2'", "2 e1 e1' + -3", "0"]:
        x = L.element_from_str(s)
        assert L.eq(L.element_from_str(L.element_to_str(x)), x)


@pytest.mark.parametrize("n, l", [(2, 1), (2, 2), (3, 1)])
def test_matrix_units(n, l):
    eps, rep = leavitt_matrix_units(n, l)
    assert rep.ok, rep.lines()
    assert len(eps) == n ** l


def test_matrix_units_bad_sigma_rejected():
    with pytest.raises(ValueError):
        leavitt_matrix_units(2, 1, sigma=[(1,), (1,)])


# generalized Weyl -------------------------------------------------------------


def test_weyl_defining_relation():
    """y x_i = a_i x_i y + b_i."""
    W = WeylRing([1, 1], [1, 0])
    for i, b in [(1, 1), (2, 0)]:
        lhs = W.mul(W.y(), W.x(i))
        rhs = W.add(W.mul(W.x(i), W.y()), W.from_int(b))
        assert W.eq(lhs, rhs)


def test_weyl_associativity_sampled():
    W = WeylRing([1], [1])
    rng = random.Random(7)
    gens = [W.x(1), W.y(), W.from_int(2), W.one()]
    for _ in range(100):
        u, v, w = (_word(W, gens, rng) for _ in range(3))
        assert W.eq(W.mul(W.mul(u, v), w), W.mul(u, W.mul(v, w)))


def _word(W, gens, rng):
    out = W.one()
    for _ in range(rng.randint(0, 6)):
        out = W.mul(out, rng.choice(gens))
    return out


def test_weyl_nontrivial_unit_needs_inverse():
    with pytest.raises(ValueError):
        WeylRing([2], [1])
    W = WeylRing([-1], [1])        # -1 is self-inverse, no a_inv needed
    assert W.eq(W.mul(W.y(), W.x(1)),
                W.add(W.neg(W.mul(W.x(1), W.y())), W.one()))


def test_weyl_phi0():
    W = WeylRing([1], [1])
    r = W.add(W.from_int(3), W.mul(W.x(1), W.y()))
    assert weyl_phi0(W, r) == 3
    with pytest.raises(ValueError):
        weyl_phi0(W, W.x(1))
    pairs = [(r, r), (W.one(), r), (W.mul(W.x(1), W.y()), W.mul(W.x(1), W.y()))]
    assert weyl_phi0_multiplicative(W, pairs)


def test_weyl_component_basis():
    W = WeylRing([1, 1], [1, 0])
    assert weyl_component_basis(W, 2).monomials == [
        ((1, 1), 0), ((1, 2), 0), ((2, 1), 0), ((2, 2), 0)]
    assert weyl_component_basis(W, -3).monomials == [((), 3)]
    assert weyl_component_basis(W, 0).monomials is None


def test_weyl_coordinates_reconstruct():
    """The coordinate splits carry their own reconstruction asserts; exercise
    them on positive, negative, and zero degrees."""
    W = WeylRing([1], [1])
    x, y = W.x(1), W.y()
    elem = W.add(W.mul(W.mul(x, x), W.mul(x, y)), W.mul(W.from_int(2), W.mul(x, x)))
    coords = weyl_coordinates(W, elem, 2)
    assert len(coords) == 1
    y2 = W.mul(y, y)
    coords = weyl_coordinates(W, W.mul(W.from_int(3), y2), -2)
    assert len(coords) == 1
    assert W.eq(W.mul(y2, coords[0]), W.mul(W.from_int(3), y2))
    [c0] = weyl_coordinates(W, W.mul(x, y), 0)
    assert W.eq(c0, W.mul(x, y))


def test_weyl_parser():
    W = WeylRing([1], [1])
    assert W.eq(W.element_from_str("x y"), W.mul(W.x(1), W.y()))
    assert W.eq(W.element_from_str("y x"),
                W.add(W.mul(W.x(1), W.y()), W.one()))
