import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from quandlering.catalog import catalog_entries, get_entry
from quandlering.coeffs import RATIONALS
from quandlering.idempotents import search_bounded
from quandlering.peirce import (
    ExactMatrix,
    UPoly,
    algebra_spectrum,
    annihilator_check,
    char_poly,
    det,
    rational_roots,
    rational_spectrum,
    right_mult_matrix,
    squarefree_decomposition,
    trace_check,
)
from quandlering.quandle import dihedral_quandle
from quandlering.ring import RingElement, basis, parse_element

ENTRIES = catalog_entries()
R3 = dihedral_quandle(3)

int_matrices = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n))


def as_float(M):
    return np.array([[float(v) for v in row] for row in M.tolist()])


def test_upoly_arithmetic():
    x = UPoly.x()
    p = (x - 1) ** 2 * (x + 1)
    assert str(p) == "x^3 - x^2 - x + 1"
    q, r = p.divmod(x - 1)
    assert r == UPoly() and q == (x - 1) * (x + 1)
    assert p.derivative() == 3 * x * x - 2 * x - 1
    assert p.gcd(p.derivative()) == (x - 1).monic()
    assert p(Fraction(1, 2)) == Fraction(3, 8)


def test_squarefree_decomposition_reconstructs():
    x = UPoly.x()
    p = (x - 2) ** 3 * (x * x + 1) ** 2 * x
    parts = squarefree_decomposition(p)
    prod = UPoly.const(1)
    for f, m in parts:
        prod = prod * f ** m
    assert prod == p.monic()
    assert [m for _, m in parts] == [1, 2, 3]


def test_rational_roots():
    x = UPoly.x()
    p = (3 * x - 2) * (x + 4) * (x * x - 2) * x
    assert rational_roots(p) == [-4, 0, Fraction(2, 3)]
    assert rational_roots(x * x + 1) == []


@given(int_matrices)
def test_det_matches_float(rows):
    M = ExactMatrix(rows)
    assert abs(float(det(M)) - np.linalg.det(as_float(M))) < 1e-6 * max(1, abs(np.linalg.det(as_float(M))))


@given(int_matrices)
def test_laplace_and_bareiss_agree(rows):
    M = ExactMatrix(rows)
    a, b = char_poly(M, "laplace"), char_poly(M, "bareiss")
    assert a == b
    # p(0) = det(-M)
    assert a(0) == det(M.scale(-1))
    assert a.degree == len(rows)


@given(int_matrices)
def test_char_poly_matches_float(rows):
    M = ExactMatrix(rows)
    ours = [float(c) for c in reversed(char_poly(M).c)]
    ref = np.poly(as_float(M))
    assert np.allclose(ours, ref, rtol=1e-6, atol=1e-6)


def test_rational_matrix_determinant():
    M = ExactMatrix([[Fraction(1, 2), 1], [Fraction(1, 3), Fraction(2, 3)]])
    assert det(M) == 0
    assert det(ExactMatrix([[Fraction(1, 2), 0], [0, Fraction(1, 3)]])) == Fraction(1, 6)


def test_right_mult_matrix_acts_by_right_product():
    q = get_entry("Q4.2").quandle
    u = RingElement(q, RATIONALS, (1, -2, Fraction(1, 2), 3))
    M = right_mult_matrix(u)
    for x in range(q.order):
        col = [M[k, x] for k in range(q.order)]
        assert tuple(col) == (basis(q, x, RATIONALS) * u).coeffs


def test_spectrum_of_basis_element():
    s = rational_spectrum(right_mult_matrix(basis(R3, 0, RATIONALS)))
    assert s.values() == {1, -1}
    assert s.splits() and s.dimension == 3


@given(st.sampled_from(ENTRIES), st.lists(st.fractions(-3, 3, max_denominator=4), min_size=5, max_size=5))
def test_trace_identity(entry, vals):
    q = entry.quandle
    u = RingElement(q, RATIONALS, tuple(vals[:q.order]))
    tr, fixed, _ = trace_check(q, u)
    assert tr == fixed
    s = rational_spectrum(right_mult_matrix(u))
    assert s.trace() == tr


def test_algebra_spectrum_r3():
    found = search_bounded(R3, RATIONALS, 3, 3)
    spec = algebra_spectrum(R3, list(found))
    assert spec.eigenvalues == {0, 1, -1} and not spec.residual


def test_algebra_spectrum_rejects_non_idempotent():
    with pytest.raises(ValueError):
        algebra_spectrum(R3, [parse_element("e1+e2", R3)])


@pytest.mark.parametrize("a", [Fraction(0), Fraction(1, 3), Fraction(-2), Fraction(5, 2)])
def test_nonlatin_eigenvalue(a):
    q = get_entry("Q3.2").quandle
    u = RingElement(q, RATIONALS, (a, a, 1 - 2 * a))
    assert u * u == u
    assert 4 * a - 1 in rational_spectrum(right_mult_matrix(u)).values()


@pytest.mark.parametrize("n", [5, 7])
def test_annihilator_on_dihedral(n):
    q = dihedral_quandle(n)
    found = search_bounded(q, RATIONALS, 1, n)
    assert all(annihilator_check(u) for u in found)


def test_annihilator_fails_off_idempotents():
    assert not annihilator_check(parse_element("2*e1", R3))
