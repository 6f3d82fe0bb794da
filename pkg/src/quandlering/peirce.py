"""Right-multiplication operators of rational quandle algebras and their spectra.

Everything is exact: matrices hold Fractions, characteristic polynomials are
computed without approximations and eigenvalues are extracted with the
rational root test after squarefree splitting.  Non-rational eigenvalues are
reported through the leftover (residual) factors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

from .coeffs import as_exact
from .idempotents import is_idempotent
from .quandle import Quandle
from .ring import RingElement

__all__ = [
    "ExactMatrix",
    "UPoly",
    "right_mult_matrix",
    "det",
    "char_poly",
    "squarefree_decomposition",
    "rational_roots",
    "Spectrum",
    "rational_spectrum",
    "trace_check",
    "AlgebraSpectrum",
    "algebra_spectrum",
    "annihilator_check",
]


class ExactMatrix:
    """Dense square-or-rectangular matrix of Fractions."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "ExactMatrix":
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        cols = list(zip(*other.rows))
        return ExactMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                            for r in self.rows])

    def scale(self, c) -> "ExactMatrix":
        c = Fraction(c)
        return ExactMatrix([[c * a for a in r] for r in self.rows])

    def trace(self):
        return as_exact(sum((self.rows[i][i] for i in range(len(self.rows))), Fraction(0)))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def tolist(self) -> list[list]:
        return [[as_exact(v) for v in r] for r in self.rows]

    def __repr__(self):
        return f"ExactMatrix({self.tolist()})"


class UPoly:
    """Univariate polynomial over the rationals, coefficients low degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def x(cls) -> "UPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, v) -> "UPoly":
        return cls([v])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def lead(self) -> Fraction:
        return self.c[-1] if self.c else Fraction(0)

    def __bool__(self):
        return bool(self.c)

    def _co(self, other):
        return other if isinstance(other, UPoly) else UPoly([other])

    def __add__(self, other):
        other = self._co(other)
        n = max(len(self.c), len(other.c))
        a = self.c + (Fraction(0),) * (n - len(self.c))
        b = other.c + (Fraction(0),) * (n - len(other.c))
        return UPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-v for v in self.c)

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return self._co(other) - self

    def __mul__(self, other):
        other = self._co(other)
        if not self.c or not other.c:
            return UPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "UPoly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        quot = [Fraction(0)] * max(len(rem) - len(other.c) + 1, 0)
        lead = other.c[-1]
        for k in range(len(quot) - 1, -1, -1):
            coef = rem[k + len(other.c) - 1] / lead
            quot[k] = coef
            if coef:
                for j, b in enumerate(other.c):
                    rem[k + j] -= coef * b
        return UPoly(quot), UPoly(rem)

    def __floordiv__(self, other):
        return self.divmod(self._co(other))[0]

    def __mod__(self, other):
        return self.divmod(self._co(other))[1]

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def derivative(self) -> "UPoly":
        return UPoly(i * v for i, v in enumerate(self.c) if i)

    def monic(self) -> "UPoly":
        return UPoly(v / self.lead() for v in self.c) if self.c else self

    def gcd(self, other: "UPoly") -> "UPoly":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def __call__(self, x):
        acc = Fraction(0)
        for v in reversed(self.c):
            acc = acc * x + v
        return as_exact(acc)

    def integer_coeffs(self) -> list[int]:
        """Primitive integer multiple (positive leading coefficient)."""
        if not self.c:
            return []
        den = reduce(math.lcm, (v.denominator for v in self.c), 1)
        ints = [int(v * den) for v in self.c]
        g = reduce(math.gcd, ints)
        sign = 1 if ints[-1] > 0 else -1
        return [sign * v // g for v in ints]

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly([other])
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            v = self.c[k]
            if not v:
                continue
            mag = abs(v)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and mag == 1:
                body = mono
            else:
                num = str(mag) if mag.denominator == 1 else f"({mag})"
                body = num + ("*" + mono if mono else "")
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return out + "".join(f" {s} {b}" for s, b in parts[1:])

    def __repr__(self):
        return f"UPoly({self})"


def right_mult_matrix(u: RingElement) -> ExactMatrix:
    """Matrix of w -> w u in the basis e_x; column x is the vector of e_x u."""
    q = u.quandle
    n = q.order
    M = [[Fraction(0)] * n for _ in range(n)]
    for x in range(n):
        row = q.table[x]
        for y, c in enumerate(u.coeffs):
            if c:
                M[row[y]][x] += Fraction(c)
    return ExactMatrix(M)


def det(M: ExactMatrix):
    """Determinant by fraction-free (Bareiss) elimination on an integer rescaling."""
    n, m = M.shape
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    scale = Fraction(1)
    A = []
    for r in M.rows:
        den = reduce(math.lcm, (v.denominator for v in r), 1)
        scale /= den
        A.append([int(v * den) for v in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return as_exact(sign * A[n - 1][n - 1] * scale)


def _laplace(entries: list[list[UPoly]]) -> UPoly:
    n = len(entries)
    memo: dict = {}

    def minor(row: int, cols: tuple) -> UPoly:
        # determinant of rows row..n-1 restricted to the columns ``cols``
        if row == n:
            return UPoly([1])
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = UPoly()
        for idx, c in enumerate(cols):
            e = entries[row][c]
            if not e:
                continue
            sub = minor(row + 1, cols[:idx] + cols[idx + 1:])
            term = e * sub
            total = total + (term if idx % 2 == 0 else -term)
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def _bareiss_poly(entries: list[list[UPoly]]) -> UPoly:
    # leading principal minors of xI - M are monic, so no pivoting is needed
    n = len(entries)
    A = [row[:] for row in entries]
    prev = UPoly([1])
    for k in range(n - 1):
        piv = A[k][k]
        if not piv:
            raise ArithmeticError("zero pivot in polynomial elimination")
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * piv - A[i][k] * A[k][j]).exact_div(prev)
        prev = piv
    return A[n - 1][n - 1]


def char_poly(M: ExactMatrix, method: str = "auto") -> UPoly:
    """det(xI - M), monic of degree n."""
    n, m = M.shape
    if n != m:
        raise ValueError("characteristic polynomial of a non-square matrix")
    if n == 0:
        return UPoly([1])
    entries = [[(UPoly.x() if i == j else UPoly()) - M[i, j] for j in range(n)] for i in range(n)]
    if method == "auto":
        method = "laplace" if n <= 6 else "bareiss"
    if method == "laplace":
        return _laplace(entries)
    if method == "bareiss":
        return _bareiss_poly(entries)
    raise ValueError(f"unknown method {method!r}")


def squarefree_decomposition(p: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm: monic squarefree f_i with p = lead * prod f_i^i."""
    if p.degree < 1:
        return []
    p = p.monic()
    out = []
    dp = p.derivative()
    a = p.gcd(dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = b.gcd(d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def rational_roots(p: UPoly) -> list:
    """Distinct rational roots, in increasing order."""
    if p.degree < 1:
        return []
    coeffs = p.integer_coeffs()
    roots = set()
    low = 0
    while coeffs[low] == 0:
        low += 1
    if low:
        roots.add(0)
    coeffs = coeffs[low:]
    if len(coeffs) > 1:
        for num in _divisors(coeffs[0]):
            for den in _divisors(coeffs[-1]):
                for s in (1, -1):
                    r = Fraction(s * num, den)
                    if r not in roots and UPoly(coeffs)(r) == 0:
                        roots.add(r)
    return sorted(as_exact(r) for r in roots)


@dataclass
class Spectrum:
    """Rational eigenvalues with algebraic multiplicities, plus leftover factors."""

    eigenvalues: list = field(default_factory=list)
    residual: list = field(default_factory=list)
    char_poly: UPoly | None = None

    def values(self) -> set:
        return {v for v, _ in self.eigenvalues}

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.eigenvalues) + sum(f.degree * m for f, m in self.residual)

    def trace(self):
        total = sum((Fraction(v) * m for v, m in self.eigenvalues), Fraction(0))
        for f, m in self.residual:
            total += -f.c[-2] / f.c[-1] * m
        return as_exact(total)

    def splits(self) -> bool:
        return not self.residual

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [[str(v), m] for v, m in self.eigenvalues],
            "residual": [[str(f), m] for f, m in self.residual],
            "char_poly": str(self.char_poly) if self.char_poly is not None else None,
        }


def rational_spectrum(M: ExactMatrix) -> Spectrum:
    p = char_poly(M)
    eig: dict = {}
    residual = []
    for f, mult in squarefree_decomposition(p):
        rest = f
        for r in rational_roots(f):
            eig[r] = eig.get(r, 0) + mult
            rest = rest.exact_div(UPoly([-Fraction(r), 1]))
        if rest.degree > 0:
            residual.append((rest, mult))
    return Spectrum(sorted(eig.items()), residual, p)


def trace_check(q: Quandle, u: RingElement) -> tuple:
    """(trace of S_u, sum_i a_i |Fixed(S_{e_i})|, augmentation of u)."""
    if u.quandle != q:
        raise ValueError("element does not live over this quandle")
    tr = right_mult_matrix(u).trace()
    fixed = as_exact(sum((Fraction(c) * q.fixed_points(i) for i, c in enumerate(u.coeffs)), Fraction(0)))
    return tr, fixed, u.augmentation()


@dataclass
class AlgebraSpectrum:
    eigenvalues: set
    residual: list
    spectra: list

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [str(v) for v in sorted(self.eigenvalues)],
            "residual": [str(f) for f in self.residual],
            "elements": [{"element": str(u), **s.to_dict()} for u, s in self.spectra],
        }


def algebra_spectrum(q: Quandle, idempotents: Sequence[RingElement]) -> AlgebraSpectrum:
    """Union of the spectra of S_u over the given idempotents."""
    values: set = set()
    residual = []
    spectra = []
    for u in idempotents:
        if u.quandle != q:
            raise ValueError("element does not live over this quandle")
        if not is_idempotent(u):
            raise ValueError(f"{u} is not an idempotent")
        s = rational_spectrum(right_mult_matrix(u))
        values |= s.values()
        residual.extend(f for f, _ in s.residual if f not in residual)
        spectra.append((u, s))
    return AlgebraSpectrum(values, residual, spectra)


def annihilator_check(u: RingElement) -> bool:
    """S_u (S_u - I)(S_u + I) = 0, i.e. S_u is diagonalizable with spectrum in {0, 1, -1}."""
    M = right_mult_matrix(u)
    eye = ExactMatrix.identity(M.shape[0])
    return (M @ (M - eye) @ (M + eye)).is_zero()
