from fractions import Fraction

from hypothesis import given, strategies as st

from quandlering.coeffs import INTEGERS, MOD2, RATIONALS, Polynomial, PolynomialRing, as_exact

ints = st.integers(-20, 20)


def poly(draw_terms):
    a, b, c = draw_terms
    x, y = Polynomial.var("a"), Polynomial.var("b")
    return a * x * x + b * x * y + c


polys = st.tuples(ints, ints, ints).map(poly)


def test_ring_normalization():
    assert INTEGERS.normalize(4) == 4
    assert MOD2.normalize(5) == 1 and MOD2.normalize(-2) == 0
    assert RATIONALS.normalize(Fraction(4, 2)) == 2
    assert as_exact(Fraction(6, 3)) == 2


def test_floats_are_not_exact():
    try:
        as_exact(0.5)
    except TypeError:
        pass
    else:
        raise AssertionError("float accepted")


def test_integer_ring_rejects_fraction():
    try:
        INTEGERS.normalize(Fraction(1, 2))
    except (TypeError, ValueError):
        pass
    else:
        raise AssertionError("1/2 accepted as an integer")


def test_polynomial_basics():
    a, b = Polynomial.var("a"), Polynomial.var("b")
    p = (a + b) ** 2
    assert p == a * a + 2 * a * b + b * b
    assert p.degree() == 2
    assert set(p.used_variables()) == {"a", "b"}
    assert (p - p).is_constant() and (p - p).constant_value() == 0
    assert p.subs({"a": 1, "b": 2}) == 9
    lin = (3 * a - b + 1).linear_part()
    assert lin["a"] == 3 and lin["b"] == -1


def test_partial_substitution_keeps_variables():
    a, b = Polynomial.var("a"), Polynomial.var("b")
    q = (a * b + a).subs({"a": 2})
    assert isinstance(q, Polynomial)
    assert q == 2 * b + 2


def test_polynomial_ring_coerces():
    R = PolynomialRing(("a",))
    assert R.normalize(3) == Polynomial.constant(3)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p - p == Polynomial.constant(0)


@given(polys, polys, ints, ints)
def test_evaluation_is_a_homomorphism(p, q, x, y):
    at = {"a": x, "b": y}
    assert (p * q).subs(at) == p.subs(at) * q.subs(at)
    assert (p + q).subs(at) == p.subs(at) + q.subs(at)


def test_hash_agrees_with_equality():
    a = Polynomial.var("a")
    assert hash(a + 1) == hash(1 + a)
    assert len({a + 1, 1 + a, a}) == 2
