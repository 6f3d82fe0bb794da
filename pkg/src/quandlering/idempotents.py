"""Idempotents of quandle rings.

Finite searches (mod 2, bounded integral or rational coefficients), an exact
description for odd dihedral quandles over the rationals, symbolic checks of
parametric families and tests of whether a set of idempotents is itself a
quandle under the ring product.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

import numpy as np

from .coeffs import INTEGERS, MOD2, RATIONALS, CoefficientRing, Polynomial, PolynomialRing, as_exact
from .quandle import Quandle, dihedral_quandle, is_isomorphic, validate_table, AxiomViolation
from .ring import RingElement, format_element, parse_linear_form

__all__ = [
    "SearchTooLarge",
    "is_idempotent",
    "square_mask",
    "mask_product",
    "mask_key",
    "enumerate_mod2",
    "search_bounded",
    "search_space_size",
    "dihedral_rational_idempotents",
    "ParametricElement",
    "parse_family",
    "verify_family",
    "covering_family_r2n",
    "family_parameters",
    "in_families",
    "IdempotentSet",
    "product_table",
    "is_quandle_under_mul",
    "idempotent_quandle",
    "parametric_is_quandle",
    "ParametricQuandleReport",
    "check_augmentation_conjecture",
    "AugmentationReport",
]


class SearchTooLarge(RuntimeError):
    """Raised when an exhaustive search would exceed its candidate budget."""

    def __init__(self, estimate: int, limit: int, what: str = "search"):
        super().__init__(f"{what} needs about {estimate:,} candidates, limit is {limit:,}")
        self.estimate = estimate
        self.limit = limit


def is_idempotent(u: RingElement) -> bool:
    if u.is_zero():
        raise ValueError("the zero element is not considered an idempotent")
    return u * u == u


# mod 2

def square_mask(q: Quandle, mask: int) -> int:
    return mask_product(q, mask, mask)


def mask_product(q: Quandle, a: int, b: int) -> int:
    t = q.table
    sa = [x for x in range(q.order) if a >> x & 1]
    sb = [y for y in range(q.order) if b >> y & 1]
    out = 0
    for x in sa:
        row = t[x]
        for y in sb:
            out ^= 1 << row[y]
    return out


def mask_key(mask: int) -> tuple:
    """Canonical order: support size, then the sorted support tuple."""
    support = tuple(x for x in range(mask.bit_length()) if mask >> x & 1)
    return (len(support), support)


def enumerate_mod2(q: Quandle, max_order: int = 25) -> "IdempotentSet":
    n = q.order
    if n > max_order:
        raise SearchTooLarge(2 ** n - 1, 2 ** max_order - 1, "mod-2 scan")
    # square(u) = sum over ordered pairs in the support; the diagonal gives
    # u itself, so u is idempotent iff the off-diagonal pairs cancel mod 2
    t = q.table
    pair_bits = [[1 << t[x][y] if x != y else 0 for y in range(n)] for x in range(n)]
    found = []
    for mask in range(1, 1 << n):
        support = [x for x in range(n) if mask >> x & 1]
        acc = 0
        for x in support:
            row = pair_bits[x]
            for y in support:
                acc ^= row[y]
        if acc == 0:
            found.append(mask)
    found.sort(key=mask_key)
    elements = tuple(RingElement.from_mask(q, m) for m in found)
    return IdempotentSet(q, MOD2, elements, note="all nonzero elements (exhaustive)")


# bounded search

def _candidate_values(bound: int, denom: int) -> tuple[int, list[int]]:
    lcm = reduce(math.lcm, range(1, denom + 1), 1)
    vals = {lcm * p // q for q in range(1, denom + 1) for p in range(-bound * denom, bound * denom + 1)
            if (lcm * p) % q == 0}
    return lcm, sorted(vals, key=lambda v: (abs(v), v))


def search_space_size(q: Quandle, bound: int, denom: int = 1) -> int:
    _, vals = _candidate_values(bound, denom)
    return 2 * len(vals) ** (q.order - 1)


def _dihedral_labelling(q: Quandle):
    n = q.order
    if n < 3 or n % 2 == 0:
        return None
    r = dihedral_quandle(n)
    if q.table == r.table:
        return tuple(range(n))
    return is_isomorphic(q, r)


def search_bounded(q: Quandle, ring: CoefficientRing = INTEGERS, bound: int = 3, denom: int = 1,
                   method: str = "auto", limit: int = 20_000_000) -> "IdempotentSet":
    """All idempotents whose coefficients are p/d with |p| <= bound*denom, 1 <= d <= denom.

    Over the integers ``denom`` is forced to 1.  ``method`` is ``"exhaustive"``,
    ``"dihedral"`` (exact description, odd dihedral quandles only) or
    ``"auto"``, which enumerates when the candidate count is within ``limit``
    and otherwise falls back to the dihedral description when it applies.
    """
    if bound < 1 or denom < 1:
        raise ValueError("bound and denominator bound must be positive")
    if ring == INTEGERS:
        denom = 1
    elif ring != RATIONALS:
        raise ValueError(f"bounded search works over Z or Q, not {ring}")
    if method not in ("auto", "exhaustive", "dihedral"):
        raise ValueError(f"unknown method {method!r}")
    estimate = search_space_size(q, bound, denom)
    if method == "auto":
        if estimate <= limit:
            method = "exhaustive"
        elif _dihedral_labelling(q) is not None:
            method = "dihedral"
        else:
            raise SearchTooLarge(estimate, limit)
    if method == "exhaustive":
        if estimate > limit:
            raise SearchTooLarge(estimate, limit)
        coeff_vectors = _exhaustive(q, bound, denom)
        note = f"complete within |numerator| <= {bound * denom}, denominator <= {denom}"
    else:
        labels = _dihedral_labelling(q)
        if labels is None:
            raise ValueError("the dihedral method needs a quandle isomorphic to R_n with n odd")
        coeff_vectors = []
        for vec in dihedral_rational_idempotents(q.order):
            vec = tuple(vec[labels[x]] for x in range(q.order))
            if all(Fraction(c).denominator <= denom and abs(Fraction(c) * Fraction(c).denominator)
                   <= bound * denom for c in vec):
                coeff_vectors.append(vec)
        note = (f"all rational idempotents (exact cyclotomic description), "
                f"filtered to |numerator| <= {bound * denom}, denominator <= {denom}")
    if ring == INTEGERS:
        coeff_vectors = [v for v in coeff_vectors if all(Fraction(c).denominator == 1 for c in v)]
    coeff_vectors = sorted(set(coeff_vectors), key=lambda v: (sum(abs(Fraction(c)) for c in v), tuple(-Fraction(c) for c in v)))
    elements = tuple(RingElement(q, ring, v) for v in coeff_vectors)
    return IdempotentSet(q, ring, elements, note=note, bound=bound, denom=denom)


def _exhaustive(q: Quandle, bound: int, denom: int) -> list[tuple]:
    n = q.order
    lcm, vals = _candidate_values(bound, denom)
    big = max(abs(v) for v in vals)
    if n * n * big * big >= 2 ** 62:
        raise SearchTooLarge(n * n * big * big, 2 ** 62, "int64 range of the search")
    V = np.array(vals, dtype=np.int64)
    t = q.table
    # group pairs (x, y) by the product x*y so squares become column sums
    by_target = [[(x, y) for x in range(n) for y in range(n) if t[x][y] == k] for k in range(n)]
    out = []
    if n == 1:
        return [(1,)]
    free = n - 1
    # vectorize over the trailing coordinates, loop over a short prefix
    inner = free
    while inner > 1 and len(vals) ** inner > 2_000_000:
        inner -= 1
    grids = np.meshgrid(*([V] * inner), indexing="ij")
    tail = np.stack([g.ravel() for g in grids], axis=1) if inner else np.zeros((1, 0), dtype=np.int64)
    for prefix in itertools.product(vals, repeat=free - inner):
        pre = np.broadcast_to(np.array(prefix, dtype=np.int64), (tail.shape[0], len(prefix)))
        partial = np.concatenate([pre, tail], axis=1)
        s = partial.sum(axis=1)
        for eps in (0, lcm):
            last = eps - s
            ok = np.isin(last, V)
            if not ok.any():
                continue
            cand = np.concatenate([partial[ok], last[ok, None]], axis=1)
            good = np.ones(cand.shape[0], dtype=bool)
            for k in range(n):
                sq = np.zeros(cand.shape[0], dtype=np.int64)
                for x, y in by_target[k]:
                    sq += cand[:, x] * cand[:, y]
                good &= sq == lcm * cand[:, k]
                if not good.any():
                    break
            for row in cand[good]:
                if row.any():
                    out.append(tuple(as_exact(Fraction(int(v), lcm)) for v in row))
    return out


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _mobius(n: int) -> int:
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def _ramanujan_sum(d: int, j: int) -> int:
    """Sum of zeta_d^(s*j) over units s mod d."""
    g = math.gcd(d, j % d) if j % d else d
    return _mobius(d // g) * _totient(d) // _totient(d // g)


def dihedral_rational_idempotents(n: int) -> list[tuple]:
    """Every idempotent of Q[R_n] for odd n, as coefficient tuples.

    With x_t = sum_i a_i w^(it) (w a primitive n-th root of unity) the
    product becomes x_t(uv) = x_{-t}(u) x_{2t}(v), so u^2 = u reads
    x_t = conj(x_t) x_{2t}.  For rational u, x_t for t of order d lies in
    Q(zeta_d) and is fixed by one value x_d.  Taking absolute values in
    every embedding shows a nonzero x_d has all conjugates on the unit
    circle, hence sigma_2(x_d) = x_d^2, so x_d is a root of unity and then
    x_d = zeta_d^m.  Inverting the transform gives
    a_i = (eps + sum_d c_d(m_d - i)) / n with c_d a Ramanujan sum.
    There are prod_{d | n} (d + 1) - 1 of them.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3")
    divs = [d for d in _divisors(n) if d > 1]
    choices = [[None] + list(range(d)) for d in divs]
    out = []
    for eps in (0, 1):
        for pick in itertools.product(*choices):
            if eps == 0 and all(m is None for m in pick):
                continue
            vec = []
            for i in range(n):
                total = eps
                for d, m in zip(divs, pick):
                    if m is not None:
                        total += _ramanujan_sum(d, m - i)
                vec.append(as_exact(Fraction(total, n)))
            out.append(tuple(vec))
    return out


# parametric families

def _substitute(p: Polynomial, mapping: Mapping[str, Polynomial]) -> Polynomial:
    """Substitute polynomials for variables."""
    result = Polynomial.coerce(0)
    for exps, c in p.terms.items():
        term = Polynomial.coerce(c)
        for v, e in zip(p.variables, exps):
            if e:
                term = term * (mapping[v] if v in mapping else Polynomial.var(v)) ** e
        result = result + term
    return result


@dataclass(frozen=True)
class ParametricElement:
    """Element of k[X] whose coefficients are polynomials in parameters.

    ``constraints`` are polynomials required to vanish; only constraints that
    are linear in some variable with a constant coefficient are supported,
    and they are eliminated before any symbolic check.
    """

    quandle: Quandle
    coeffs: tuple
    constraints: tuple = ()
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Polynomial.coerce(c) for c in self.coeffs))
        object.__setattr__(self, "constraints", tuple(Polynomial.coerce(c) for c in self.constraints))
        if len(self.coeffs) != self.quandle.order:
            raise ValueError("coefficient count does not match the quandle order")

    @property
    def parameters(self) -> tuple[str, ...]:
        seen = []
        for c in self.coeffs + self.constraints:
            for v in c.used_variables():
                if v not in seen:
                    seen.append(v)
        return tuple(sorted(seen))

    def element(self) -> RingElement:
        return RingElement(self.quandle, PolynomialRing(self.parameters), self.coeffs)

    def subs(self, assignment: Mapping[str, object], ring: CoefficientRing = RATIONALS) -> RingElement:
        missing = [p for p in self.parameters if p not in assignment]
        if missing:
            raise ValueError(f"no value for parameters {missing}")
        return RingElement(self.quandle, ring, tuple(c.subs(assignment) if c.used_variables()
                                                    else c.constant_value() for c in self.coeffs))

    def renamed(self, suffix: str) -> "ParametricElement":
        mapping = {p: Polynomial.var(p + suffix) for p in self.parameters}
        return ParametricElement(self.quandle, tuple(_substitute(c, mapping) for c in self.coeffs),
                                 tuple(_substitute(c, mapping) for c in self.constraints), self.label)

    def eliminated(self) -> "ParametricElement":
        """Solve away the constraints, returning an unconstrained family."""
        coeffs, pending = list(self.coeffs), list(self.constraints)
        while pending:
            con = pending.pop(0)
            if not con:
                continue
            var = None
            for v in con.used_variables():
                lin = con.linear_part().get(v)
                rest = con - Polynomial.var(v) * lin if lin is not None else None
                if lin is not None and v not in rest.used_variables():
                    var = v
                    break
            if var is None:
                raise ValueError(f"cannot eliminate constraint {con} = 0")
            value = rest * Fraction(-1) * (Fraction(1) / Fraction(lin))
            coeffs = [_substitute(c, {var: value}) for c in coeffs]
            pending = [_substitute(c, {var: value}) for c in pending]
        return ParametricElement(self.quandle, tuple(coeffs), (), self.label)

    def augmentation(self) -> Polynomial:
        total = Polynomial.coerce(0)
        for c in self.eliminated().coeffs:
            total = total + c
        return total

    def is_affine(self) -> bool:
        return all(c.degree() <= 1 for c in self.coeffs)

    def __str__(self):
        return format_element(self.coeffs)


def parse_family(text: str, quandle: Quandle, label: str = "") -> ParametricElement:
    return ParametricElement(quandle, parse_linear_form(text, quandle.order), (), label or text)


def verify_family(fam: ParametricElement) -> bool:
    """True iff fam^2 = fam holds identically in the parameters."""
    fam = fam.eliminated()
    u = fam.element()
    return u * u == u


def covering_family_r2n(n: int, wrap: str = "2n") -> list[ParametricElement]:
    """Idempotent families of Z[R_{2n}] lifted along the covering R_{2n} -> R_n.

    Family j (0 <= j < n) is
    b e_j + (1-b) e_{n+j} + sum_i a_i (e_i - e_{n+i} + e_{2j-i} - e_{n+2j-i}).
    ``wrap="n"`` reduces 2j-i modulo n before adding n; ``wrap="2n"`` reduces
    both 2j-i and n+2j-i modulo 2n.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3")
    if wrap not in ("n", "2n"):
        raise ValueError("wrap must be 'n' or '2n'")
    q = dihedral_quandle(2 * n)
    beta = Polynomial.var("b")
    alphas = [Polynomial.var(f"a{i}") for i in range(n)]
    fams = []
    for j in range(n):
        coeffs = [Polynomial.coerce(0)] * (2 * n)
        coeffs[j] = coeffs[j] + beta
        coeffs[n + j] = coeffs[n + j] + 1 - beta
        for i, a in enumerate(alphas):
            if wrap == "n":
                k = (2 * j - i) % n
                lo, hi = k, n + k
            else:
                lo, hi = (2 * j - i) % (2 * n), (n + 2 * j - i) % (2 * n)
            coeffs[i] = coeffs[i] + a
            coeffs[n + i] = coeffs[n + i] - a
            coeffs[lo] = coeffs[lo] + a
            coeffs[hi] = coeffs[hi] - a
        fams.append(ParametricElement(q, tuple(coeffs), (), f"u{j}"))
    return fams


def _hermite_solve(A: list[list[int]], r: list[int]):
    """One integer solution p of A p = r, or None.

    Column-style Hermite reduction: A U = H lower echelon with U unimodular.
    """
    m = len(A)
    k = len(A[0]) if A else 0
    H = [row[:] for row in A]
    U = [[int(i == j) for j in range(k)] for i in range(k)]

    def colop(dst, src, f):
        for row in H:
            row[dst] -= f * row[src]
        for row in U:
            row[dst] -= f * row[src]

    def swap(a, b):
        for row in H:
            row[a], row[b] = row[b], row[a]
        for row in U:
            row[a], row[b] = row[b], row[a]

    pivots = []
    col = 0
    for i in range(m):
        if col >= k:
            break
        while True:
            nz = [c for c in range(col, k) if H[i][c]]
            if not nz:
                break
            c_min = min(nz, key=lambda c: abs(H[i][c]))
            swap(col, c_min)
            done = True
            for c in range(col + 1, k):
                if H[i][c]:
                    colop(c, col, H[i][c] // H[i][col])
                    if H[i][c]:
                        done = False
            if done:
                break
        if H[i][col] if col < k else False:
            pivots.append((i, col))
            col += 1
    # forward substitution on H y = r
    y = [0] * k
    pivot_cols = {i: c for i, c in pivots}
    for i in range(m):
        acc = sum(H[i][c] * y[c] for c in range(k))
        if i in pivot_cols:
            c = pivot_cols[i]
            rem = r[i] - (acc - H[i][c] * y[c])
            if rem % H[i][c]:
                return None
            y[c] = rem // H[i][c]
        elif acc != r[i]:
            return None
    return [sum(U[a][b] * y[b] for b in range(k)) for a in range(k)]


def _rational_solve(A: list[list[Fraction]], r: list[Fraction]):
    """One rational solution of A p = r (free variables set to 0), or None."""
    m = len(A)
    k = len(A[0]) if A else 0
    M = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(A, r)]
    pivots = []
    row = 0
    for c in range(k):
        piv = next((i for i in range(row, m) if M[i][c]), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        inv = 1 / M[row][c]
        M[row] = [v * inv for v in M[row]]
        for i in range(m):
            if i != row and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[row])]
        pivots.append(c)
        row += 1
    if any(M[i][k] for i in range(row, m)):
        return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = M[i][k]
    return sol


def _affine_system(fam: ParametricElement):
    fam = fam.eliminated()
    if not fam.is_affine():
        raise ValueError(f"family {fam} is not affine-linear in its parameters")
    params = fam.parameters
    const = [Fraction(c.constant_value()) for c in fam.coeffs]
    lin = [[Fraction(c.linear_part().get(p, 0)) for p in params] for c in fam.coeffs]
    return params, const, lin


def family_parameters(fam: ParametricElement, u: RingElement | Sequence, integral: bool = True):
    """Parameter values instantiating ``fam`` to ``u``, or None.

    With ``integral`` the parameters must be integers.
    """
    coeffs = u.coeffs if isinstance(u, RingElement) else u
    params, const, lin = _affine_system(fam)
    rhs = [Fraction(c) - k for c, k in zip(coeffs, const)]
    if not params:
        return {} if all(v == 0 for v in rhs) else None
    if not integral:
        sol = _rational_solve(lin, rhs)
        return None if sol is None else {p: as_exact(v) for p, v in zip(params, sol)}
    # clear denominators row by row
    A, r = [], []
    for row, b in zip(lin, rhs):
        den = reduce(math.lcm, [v.denominator for v in row] + [b.denominator], 1)
        A.append([int(v * den) for v in row])
        r.append(int(b * den))
    sol = _hermite_solve(A, r)
    return None if sol is None else dict(zip(params, sol))


def in_families(u, families: Iterable[ParametricElement], integral: bool = True):
    """First family containing u, with its parameters, or None."""
    for fam in families:
        sol = family_parameters(fam, u, integral)
        if sol is not None:
            return fam, sol
    return None


# idempotent sets

@dataclass(frozen=True)
class IdempotentSet:
    quandle: Quandle
    ring: CoefficientRing
    elements: tuple = ()
    families: tuple = ()
    note: str = ""
    bound: int | None = None
    denom: int | None = None

    def __post_init__(self):
        for u in self.elements:
            if u.quandle != self.quandle or not is_idempotent(u):
                raise ValueError(f"{u} is not an idempotent of this ring")
        for fam in self.families:
            if not verify_family(fam):
                raise ValueError(f"family {fam} does not square to itself")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def strings(self) -> list[str]:
        return [str(u) for u in self.elements] + [str(f) for f in self.families]

    def masks(self) -> list[int]:
        return [u.to_mask() for u in self.elements]


def product_table(elements: Sequence[RingElement]) -> list[list[int]] | None:
    """Index table of u*v over ``elements`` (0-based), or None if not closed."""
    index = {u.coeffs: i for i, u in enumerate(elements)}
    table = []
    for u in elements:
        row = []
        for v in elements:
            k = index.get((u * v).coeffs)
            if k is None:
                return None
            row.append(k)
        table.append(row)
    return table


def is_quandle_under_mul(s: IdempotentSet | Sequence[RingElement]) -> bool:
    elements = list(s.elements if isinstance(s, IdempotentSet) else s)
    table = product_table(elements)
    if table is None:
        return False
    try:
        validate_table(table)
    except AxiomViolation:
        return False
    return True


def idempotent_quandle(s: IdempotentSet | Sequence[RingElement], name: str | None = None) -> Quandle:
    """The quandle formed by a finite idempotent set under the ring product."""
    elements = list(s.elements if isinstance(s, IdempotentSet) else s)
    table = product_table(elements)
    if table is None:
        raise ValueError("the set is not closed under multiplication")
    return validate_table(table, name)


@dataclass
class ParametricQuandleReport:
    closed: bool
    right_bijective: bool
    right_distributive: bool
    witness: str = ""
    checked_pairs: int = 0

    @property
    def is_quandle(self) -> bool:
        return self.closed and self.right_bijective and self.right_distributive


def _instances(fam: ParametricElement, grid):
    params = fam.parameters
    for vals in itertools.product(grid, repeat=len(params)):
        yield fam.subs(dict(zip(params, vals)), RATIONALS)


def _preimages(fams, v: RingElement, w: RingElement, limit: int = 2):
    """Distinct integral family members u with u*v = w (stops after ``limit``)."""
    found = set()
    n = v.quandle.order
    t = v.quandle.table
    # matrix R with (u*v)_k = sum_x R[k][x] u_x
    R = [[Fraction(0)] * n for _ in range(n)]
    for x in range(n):
        for y, c in enumerate(v.coeffs):
            if c:
                R[t[x][y]][x] += Fraction(c)
    for fam in fams:
        params, const, lin = _affine_system(fam)
        # R (const + lin p) = w
        A = [[sum(R[k][x] * lin[x][j] for x in range(n)) for j in range(len(params))] for k in range(n)]
        rhs = [Fraction(w.coeffs[k]) - sum(R[k][x] * const[x] for x in range(n)) for k in range(n)]
        if not params:
            if all(b == 0 for b in rhs):
                found.add(tuple(const))
            continue
        den_rows = []
        for row, b in zip(A, rhs):
            den = reduce(math.lcm, [a.denominator for a in row] + [b.denominator], 1)
            den_rows.append(([int(a * den) for a in row], int(b * den)))
        sol = _hermite_solve([r for r, _ in den_rows], [b for _, b in den_rows])
        if sol is None:
            continue
        u = tuple(const[x] + sum(lin[x][j] * sol[j] for j in range(len(params))) for x in range(n))
        found.add(u)
        # a kernel direction of A that moves u means infinitely many preimages
        if _moves_in_kernel(A, lin):
            return limit
        if len(found) >= limit:
            return len(found)
    return len(found)


def _moves_in_kernel(A, lin) -> bool:
    """Is there p with A p = 0 but lin p != 0?"""
    return _rank(A) < _rank(A + lin)


def _rank(rows) -> int:
    M = [[Fraction(v) for v in r] for r in rows]
    if not M:
        return 0
    rank, cols = 0, len(M[0])
    for c in range(cols):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c] / M[rank][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def parametric_is_quandle(families: Sequence[ParametricElement], grid: Sequence[int] = (-1, 0, 1, 2)
                          ) -> ParametricQuandleReport:
    """Decide whether the union of integral families is a quandle under the product.

    Right distributivity is an identity between polynomials in independent
    parameter copies, which is exact because integer points are Zariski dense.
    Closure and bijectivity of right multiplications are tested on grid
    instances, with membership and preimages decided by integer linear
    algebra, so a positive answer on those two is evidence, not proof.
    """
    fams = [f.eliminated() for f in families]
    for f in fams:
        if not verify_family(f):
            return ParametricQuandleReport(False, False, False, f"{f} is not idempotent")
    # closure
    instances = [list(_instances(f, grid)) for f in fams]
    flat = [u for group in instances for u in group]
    pairs = 0
    closed = True
    witness = ""
    seen = set()
    uniq = []
    for u in flat:
        if u.coeffs not in seen:
            seen.add(u.coeffs)
            uniq.append(u)
    for u in uniq:
        for v in uniq:
            pairs += 1
            if in_families(u * v, fams) is None:
                closed = False
                witness = f"({u})*({v}) = {u * v} lies in no family"
                break
        if not closed:
            break
    # right bijectivity: every sampled w has exactly one preimage under S_v
    bijective = True
    if closed:
        for v in uniq:
            for w in uniq:
                count = _preimages(fams, v, w)
                if count != 1:
                    bijective = False
                    what = "no" if count == 0 else "several"
                    witness = f"{what} u with u*({v}) = {w}"
                    break
            if not bijective:
                break
    # right distributivity, symbolically
    distributive = True
    if closed and bijective:
        for f1, f2, f3 in itertools.product(fams, repeat=3):
            x, y, z = f1.renamed("_1").element(), f2.renamed("_2").element(), f3.renamed("_3").element()
            if (x * y) * z != (x * z) * (y * z):
                distributive = False
                witness = f"(uv)w != (uw)(vw) for u in {f1}, v in {f2}, w in {f3}"
                break
    return ParametricQuandleReport(closed, bijective, distributive, witness, pairs)


# augmentation

@dataclass
class AugmentationReport:
    bound: int
    checked: int
    zero_augmentation: list = field(default_factory=list)
    family_augmentations: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.zero_augmentation and all(a == 1 for _, a in self.family_augmentations)


def check_augmentation_conjecture(q: Quandle, bound: int = 4, families: Sequence[ParametricElement] = (),
                                  limit: int = 20_000_000) -> AugmentationReport:
    """Look for integral idempotents with augmentation 0 within ``bound``."""
    found = search_bounded(q, INTEGERS, bound, method="exhaustive", limit=limit)
    zero = [u for u in found if u.augmentation() == 0]
    fam_aug = [(str(f), f.augmentation()) for f in families]
    return AugmentationReport(bound, len(found), zero, fam_aug)
