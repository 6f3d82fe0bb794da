from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from quandlering.catalog import catalog_entries
from quandlering.coeffs import INTEGERS, MOD2, RATIONALS, Polynomial
from quandlering.quandle import QuandleMap, dihedral_quandle, trivial_quandle
from quandlering.ring import (
    ParseError,
    RingElement,
    basis,
    evaluate_product,
    format_element,
    induced_map,
    parse_element,
    parse_linear_form,
)

ENTRIES = catalog_entries()
R3 = dihedral_quandle(3)
small = st.integers(-5, 5)
fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def element_pairs(draw, values=small, ring=INTEGERS):
    q = draw(st.sampled_from(ENTRIES)).quandle
    make = lambda: RingElement(q, ring, tuple(draw(values) for _ in range(q.order)))
    return make(), make(), make()


def tensor_product(u, v):
    """Product through the structure tensor T[x, y, x*y] = 1."""
    n = u.quandle.order
    T = np.zeros((n, n, n), dtype=object)
    for x in range(n):
        for y in range(n):
            T[x, y, u.quandle.table[x][y]] = 1
    a, b = np.array(u.coeffs, dtype=object), np.array(v.coeffs, dtype=object)
    return tuple(np.einsum("i,j,ijk->k", a, b, T))


def test_basis_product_follows_table():
    e = [basis(R3, x) for x in range(3)]
    assert e[0] * e[1] == e[2]
    assert e[1] * e[1] == e[1]


def test_ring_is_not_associative():
    e1, e2, e3 = (basis(R3, x) for x in range(3))
    assert (e1 * e2) * e3 != e1 * (e2 * e3)


def test_trivial_quandle_ring_is_associative_on_basis():
    t = trivial_quandle(3)
    e = [basis(t, x) for x in range(3)]
    assert all((a * b) * c == a * (b * c) for a in e for b in e for c in e)


@given(element_pairs())
def test_product_matches_structure_tensor(uvw):
    u, v, _ = uvw
    assert (u * v).coeffs == tensor_product(u, v)


@given(element_pairs())
def test_bilinear(uvw):
    u, v, w = uvw
    assert (u + v) * w == u * w + v * w
    assert u * (v + w) == u * v + u * w
    assert (3 * u) * v == (u * v).scale(3)


@given(element_pairs(values=fractions, ring=RATIONALS))
def test_augmentation_is_multiplicative(uvw):
    u, v, _ = uvw
    assert (u * v).augmentation() == u.augmentation() * v.augmentation()


def test_mod2_reduction():
    u = RingElement(R3, INTEGERS, (3, -2, 1))
    m = u.to_ring(MOD2)
    assert m.coeffs == (1, 0, 1)
    assert m.to_mask() == 0b101
    assert RingElement.from_mask(R3, 0b101) == m
    with pytest.raises(ValueError):
        u.to_mask()


def test_mixed_rings_rejected():
    with pytest.raises(ValueError):
        basis(R3, 0) + basis(R3, 0, MOD2)
    with pytest.raises(ValueError):
        basis(R3, 0) + basis(dihedral_quandle(5), 0)


def test_induced_map_is_multiplicative():
    r6 = dihedral_quandle(6)
    f = QuandleMap(r6, R3, [x % 3 for x in range(6)])
    u = RingElement(r6, INTEGERS, (1, -2, 0, 3, 1, 1))
    v = RingElement(r6, INTEGERS, (0, 1, 1, -1, 2, 0))
    assert induced_map(f, u * v) == induced_map(f, u) * induced_map(f, v)
    assert induced_map(f, u).augmentation() == u.augmentation()
    bad = QuandleMap(R3, R3, [0, 0, 1])
    with pytest.raises(ValueError):
        induced_map(bad, basis(R3, 0))


def test_evaluate_product_tree():
    e1, e2, e3 = (basis(R3, x) for x in range(3))
    assert evaluate_product(((e1, e2), e3)) == (e1 * e2) * e3


def test_parse_and_format():
    u = parse_element("2*e1 - e_2 + e3/3", R3)
    assert u.coeffs == (2, -1, Fraction(1, 3))
    assert str(u) == "2*e1-e2+(1/3)*e3"
    assert format_element((Fraction(-1, 3), 0, 1)) == "(-1/3)*e1+e3"
    assert str(RingElement.zero(R3)) == "0"
    assert parse_element("2(e1+e2) - e2", R3, INTEGERS).coeffs == (2, 1, 0)


@given(element_pairs(values=fractions, ring=RATIONALS))
def test_parse_inverts_format(uvw):
    u = uvw[0]
    assert parse_element(str(u), u.quandle) == u


def test_parameters_become_polynomials():
    form = parse_linear_form("a*e1 + (1-a)*e2", 3)
    a = Polynomial.var("a")
    assert form[0] == a and form[1] == 1 - a and form[2] == 0


@pytest.mark.parametrize("text", ["e4", "e1 +", "e1*e2", "2/(a)*e1", "e0", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_element(text, R3)
