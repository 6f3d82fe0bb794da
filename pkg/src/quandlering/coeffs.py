"""Exact coefficient rings: integers, integers mod 2, rationals and
multivariate polynomials.

Rationals are :class:`fractions.Fraction`; integers are plain ``int``.
Polynomials are implemented here since symbolic parameters of idempotent
families have to be multiplied out and compared exactly.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

__all__ = [
    "Polynomial",
    "CoefficientRing",
    "INTEGERS",
    "MOD2",
    "RATIONALS",
    "PolynomialRing",
    "as_exact",
]


def as_exact(value):
    """Normalize an exact number: Fractions with denominator 1 become ints."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return as_exact(Fraction(value.numerator, value.denominator))
    raise TypeError(f"not an exact number: {value!r}")


class Polynomial:
    """Multivariate polynomial with exact coefficients.

    Exponent vectors are dense over ``variables``; zero coefficients are
    never stored.  Binary operations take the union of the variable lists.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError("exponent vector length does not match variables")
            c = as_exact(c)
            if c != 0:
                clean[exps] = c
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, c, variables: Iterable[str] = ()) -> "Polynomial":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls((name,), {(1,): 1})

    @classmethod
    def coerce(cls, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        return cls.constant(as_exact(value))

    def extend(self, variables: Iterable[str]) -> "Polynomial":
        """Re-express over ``variables`` (must contain all current ones)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        try:
            idx = [variables.index(v) for v in self.variables]
        except ValueError:
            raise ValueError(f"{variables} does not contain {self.variables}") from None
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for i, e in zip(idx, exps):
                new[i] = e
            terms[tuple(new)] = c
        return Polynomial(variables, terms)

    def _aligned(self, other):
        other = Polynomial.coerce(other)
        if other.variables == self.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.extend(merged), other.extend(merged)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exps, c in b.terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return Polynomial(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other):
        return Polynomial.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        a, b = self._aligned(other)
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            # hash must agree across variable orderings and padding
            items = []
            for exps, c in self.terms.items():
                mono = tuple(sorted((v, e) for v, e in zip(self.variables, exps) if e))
                items.append((mono, c))
            self._hash = hash(frozenset(items))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        """Value of the constant term (0 if absent)."""
        return self.terms.get((0,) * len(self.variables), 0)

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.variables)
                     if any(e[i] for e in self.terms))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def linear_part(self) -> dict[str, object]:
        """Coefficients of the degree-one monomials, keyed by variable."""
        out = {}
        for exps, c in self.terms.items():
            if sum(exps) == 1:
                out[self.variables[exps.index(1)]] = c
        return out

    def subs(self, assignment: Mapping[str, object]):
        """Substitute exact numbers for some or all variables.

        Returns an exact number when no variable remains, else a Polynomial
        over the remaining variables.
        """
        keep = [i for i, v in enumerate(self.variables) if v not in assignment]
        terms: dict = {}
        for exps, c in self.terms.items():
            coeff = Fraction(c)
            for i, e in enumerate(exps):
                if e and i not in keep:
                    coeff *= Fraction(assignment[self.variables[i]]) ** e
            key = tuple(exps[i] for i in keep)
            terms[key] = terms.get(key, 0) + coeff
        result = Polynomial(tuple(self.variables[i] for i in keep), terms)
        if not keep:
            return as_exact(result.constant_value())
        return result

    # rendering
    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, key=lambda e: (sum(e) == 0 and -1 or 0, [-x for x in e])):
            c = self.terms[exps]
            mono = "*".join(v if e == 1 else f"{v}^{e}"
                            for v, e in zip(self.variables, exps) if e)
            if not mono:
                body, sign = str(abs(c)), "-" if c < 0 else "+"
            else:
                mag = abs(c)
                body = mono if mag == 1 else f"{mag}*{mono}"
                sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f"{sign}{body}"
        return out


class CoefficientRing:
    """Tag plus exact arithmetic for one coefficient ring.

    Elements are plain Python values (``int``, ``Fraction`` or
    :class:`Polynomial`); ``normalize`` maps any exact input into the
    ring's canonical representation.
    """

    tag = "abstract"

    def normalize(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self.normalize(0)

    @property
    def one(self):
        return self.normalize(1)

    def add(self, a, b):
        return self.normalize(a + b)

    def negate(self, a):
        return self.normalize(-a)

    def multiply(self, a, b):
        return self.normalize(a * b)

    def equal(self, a, b) -> bool:
        return self.normalize(a) == self.normalize(b)

    def __repr__(self):
        return self.tag

    def __eq__(self, other):
        return isinstance(other, CoefficientRing) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return (self.tag,)


class _Integers(CoefficientRing):
    tag = "Z"

    def normalize(self, value):
        value = as_exact(value)
        if not isinstance(value, int):
            raise ValueError(f"{value} is not an integer")
        return value


class _Mod2(CoefficientRing):
    tag = "Z2"

    def normalize(self, value):
        value = as_exact(value)
        if not isinstance(value, int):
            raise ValueError(f"{value} is not an integer")
        return value & 1


class _Rationals(CoefficientRing):
    tag = "Q"

    def normalize(self, value):
        return as_exact(value)


class PolynomialRing(CoefficientRing):
    """Polynomials in named parameters.

    ``variables`` is informational; polynomials over different parameter
    lists combine freely because Polynomial arithmetic merges variables.
    """

    tag = "Poly"

    def __init__(self, variables: Iterable[str] = ()):
        self.variables = tuple(variables)

    def normalize(self, value):
        return Polynomial.coerce(value)

    def __repr__(self):
        return f"Poly[{','.join(self.variables)}]"


INTEGERS = _Integers()
MOD2 = _Mod2()
RATIONALS = _Rationals()
