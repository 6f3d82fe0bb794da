"""The quandle ring k[X].

An element is a dense coefficient vector indexed by the quandle; the product
is the bilinear extension of e_x e_y = e_{x*y}.  The product is neither
associative nor commutative in general, so nested products must be spelled
out (see :func:`evaluate_product`).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .coeffs import INTEGERS, MOD2, RATIONALS, CoefficientRing, Polynomial, PolynomialRing, as_exact
from .quandle import Quandle, QuandleMap, is_homomorphism

__all__ = [
    "RingElement",
    "basis",
    "ring_add",
    "ring_mul",
    "ring_scale",
    "augmentation",
    "induced_map",
    "evaluate_product",
    "parse_linear_form",
    "parse_element",
    "format_element",
    "ParseError",
]


@dataclass(frozen=True)
class RingElement:
    quandle: Quandle
    ring: CoefficientRing
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.quandle.order:
            raise ValueError(f"expected {self.quandle.order} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(self.ring.normalize(c) for c in self.coeffs))

    @classmethod
    def zero(cls, quandle: Quandle, ring: CoefficientRing = INTEGERS) -> "RingElement":
        return cls(quandle, ring, (0,) * quandle.order)

    @classmethod
    def from_mask(cls, quandle: Quandle, mask: int) -> "RingElement":
        return cls(quandle, MOD2, tuple((mask >> x) & 1 for x in range(quandle.order)))

    def to_mask(self) -> int:
        if self.ring != MOD2:
            raise ValueError("bitmask form only exists for mod-2 elements")
        return sum(1 << x for x, c in enumerate(self.coeffs) if c)

    def to_ring(self, ring: CoefficientRing) -> "RingElement":
        return RingElement(self.quandle, ring, self.coeffs)

    def support(self) -> tuple[int, ...]:
        return tuple(x for x, c in enumerate(self.coeffs) if c)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "RingElement"):
        if not isinstance(other, RingElement):
            raise TypeError(f"cannot combine RingElement with {type(other).__name__}")
        if other.quandle != self.quandle:
            raise ValueError("elements live over different quandles")
        if other.ring != self.ring:
            raise ValueError(f"elements have different coefficient rings ({self.ring} vs {other.ring})")

    def __add__(self, other):
        self._check(other)
        return RingElement(self.quandle, self.ring,
                           tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return RingElement(self.quandle, self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RingElement):
            self._check(other)
            t = self.quandle.table
            n = self.quandle.order
            out = [0] * n
            b = other.coeffs
            nz = [(y, by) for y, by in enumerate(b) if by]
            for x, ax in enumerate(self.coeffs):
                if not ax:
                    continue
                row = t[x]
                for y, by in nz:
                    out[row[y]] = out[row[y]] + ax * by
            return RingElement(self.quandle, self.ring, tuple(out))
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, c) -> "RingElement":
        return RingElement(self.quandle, self.ring, tuple(c * a for a in self.coeffs))

    def augmentation(self):
        total = 0
        for c in self.coeffs:
            total = total + c
        return self.ring.normalize(total)

    def subs(self, assignment: Mapping[str, object], ring: CoefficientRing = RATIONALS) -> "RingElement":
        """Substitute parameter values into polynomial coefficients."""
        vals = [c.subs(assignment) if isinstance(c, Polynomial) else c for c in self.coeffs]
        return RingElement(self.quandle, ring, tuple(vals))

    def __str__(self):
        return format_element(self.coeffs)


def basis(quandle: Quandle, x: int, ring: CoefficientRing = INTEGERS) -> RingElement:
    return RingElement(quandle, ring, tuple(1 if y == x else 0 for y in range(quandle.order)))


def ring_add(u: RingElement, v: RingElement) -> RingElement:
    return u + v


def ring_mul(u: RingElement, v: RingElement) -> RingElement:
    return u * v


def ring_scale(c, u: RingElement) -> RingElement:
    return u.scale(c)


def augmentation(u: RingElement):
    return u.augmentation()


def induced_map(f: QuandleMap, u: RingElement) -> RingElement:
    """Push u forward along the quandle homomorphism f."""
    if u.quandle != f.source:
        raise ValueError("element does not live over the source of the map")
    if not is_homomorphism(f):
        raise ValueError("map is not a quandle homomorphism")
    out = [0] * f.target.order
    for x, c in enumerate(u.coeffs):
        out[f.values[x]] = out[f.values[x]] + c
    return RingElement(f.target, u.ring, tuple(out))


def evaluate_product(tree):
    """Evaluate a fully parenthesized product.

    ``tree`` is a RingElement or a pair ``(left, right)`` of trees.
    """
    if isinstance(tree, RingElement):
        return tree
    left, right = tree
    return evaluate_product(left) * evaluate_product(right)


# parsing

class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|(e_?\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern matches any character
            raise ParseError(f"cannot tokenize {text[pos:]!r}")
        num, basis_name, ident, sym = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif basis_name is not None:
            tokens.append(("basis", int(basis_name.lstrip("e_"))))
        elif ident is not None:
            tokens.append(("var", ident))
        elif sym.strip():
            if sym not in "+-*/()":
                raise ParseError(f"unexpected character {sym!r}")
            tokens.append(("op", sym))
        pos = m.end()
    return tokens


class _LinearForm:
    """Scalar part plus basis coefficients, all Polynomials."""

    def __init__(self, scalar=None, vec=None):
        self.scalar = Polynomial.coerce(scalar if scalar is not None else 0)
        self.vec = dict(vec or {})

    def is_scalar(self):
        return not any(self.vec.values())

    def __add__(self, other):
        vec = dict(self.vec)
        for k, c in other.vec.items():
            vec[k] = vec.get(k, 0) + c
        return _LinearForm(self.scalar + other.scalar, vec)

    def __neg__(self):
        return _LinearForm(-self.scalar, {k: -c for k, c in self.vec.items()})

    def times_scalar(self, s):
        return _LinearForm(self.scalar * s, {k: c * s for k, c in self.vec.items()})


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, sym):
        tok = self.take()
        if tok != ("op", sym):
            raise ParseError(f"expected {sym!r} in {self.text!r}")

    def parse(self):
        form = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return form

    def expr(self):
        form = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = self.take()[1]
            rhs = self.term()
            form = form + (rhs if sign == "+" else -rhs)
        return form

    def term(self):
        form = self.unary()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                form = self._mul(form, self.unary())
            elif tok == ("op", "/"):
                self.take()
                rhs = self.unary()
                if not rhs.is_scalar() or not rhs.scalar.is_constant() or rhs.scalar.constant_value() == 0:
                    raise ParseError(f"can only divide by a nonzero number in {self.text!r}")
                form = form.times_scalar(Fraction(1) / Fraction(rhs.scalar.constant_value()))
            elif tok[0] in ("num", "basis", "var") or tok == ("op", "("):
                # implicit multiplication, e.g. "2e1" or "a(e1+e2)"
                form = self._mul(form, self.unary())
            else:
                return form

    def _mul(self, a, b):
        if a.is_scalar():
            return b.times_scalar(a.scalar)
        if b.is_scalar():
            return a.times_scalar(b.scalar)
        raise ParseError(f"product of two basis combinations in {self.text!r}; "
                         "only scalar multiples are linear")

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.atom()

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return _LinearForm(val)
        if kind == "basis":
            return _LinearForm(0, {val: Polynomial.coerce(1)})
        if kind == "var":
            return _LinearForm(Polynomial.var(val))
        if (kind, val) == ("op", "("):
            form = self.expr()
            self.expect(")")
            return form
        raise ParseError(f"unexpected {val!r} in {self.text!r}")


def parse_linear_form(text: str, n: int) -> tuple[Polynomial, ...]:
    """Parse ``"2*e1 - e2 + (1/3)*e3"`` into n polynomial coefficients.

    Basis names are 1-based (``e1`` .. ``en``, ``e_1`` also accepted); any
    other identifier is a parameter.
    """
    form = _Parser(text).parse()
    if form.scalar:
        raise ParseError(f"{text!r} has a term without a basis element")
    out = [Polynomial.coerce(0)] * n
    for k, c in form.vec.items():
        if not 1 <= k <= n:
            raise ParseError(f"basis element e{k} out of range 1..{n}")
        out[k - 1] = out[k - 1] + c
    return tuple(out)


def parse_element(text: str, quandle: Quandle, ring: CoefficientRing = RATIONALS) -> RingElement:
    """Parse a concrete element; parameters are only allowed for polynomial rings."""
    coeffs = parse_linear_form(text, quandle.order)
    if isinstance(ring, PolynomialRing):
        return RingElement(quandle, ring, coeffs)
    values = []
    for c in coeffs:
        if not c.is_constant():
            raise ParseError(f"{text!r} contains parameters {c.used_variables()}")
        values.append(c.constant_value())
    if ring in (INTEGERS, MOD2) and any(isinstance(v, Fraction) for v in values):
        raise ParseError(f"{text!r} has non-integer coefficients")
    return RingElement(quandle, ring, tuple(values))


def _coeff_str(c) -> str:
    if isinstance(c, Polynomial):
        if c.is_constant():
            return _coeff_str(c.constant_value())
        s = str(c)
        return s if len(c.terms) == 1 and "-" not in s[1:] and "+" not in s else f"({s})"
    c = as_exact(c)
    if isinstance(c, Fraction):
        return f"({c})"
    return str(c)


def format_element(coeffs: Sequence) -> str:
    """Render as e.g. ``2*e1-e2+(1/3)*e3`` with 1-based basis names."""
    parts = []
    for x, c in enumerate(coeffs):
        if not c:
            continue
        name = f"e{x + 1}"
        s = _coeff_str(c)
        if s == "1":
            term = name
        elif s == "-1":
            term = "-" + name
        else:
            term = f"{s}*{name}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts) if parts else "0"
