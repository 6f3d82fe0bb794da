"""Finite quandles given by multiplication tables.

Elements are ``0..n-1`` and ``table[x][y]`` is ``x*y`` (row = left
operand).  Text files and printed tables are 1-based; conversion happens
only in :func:`parse_table_text`, :func:`format_table` and the JSON helpers.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "AxiomViolation",
    "Quandle",
    "QuandleMap",
    "validate_table",
    "trivial_quandle",
    "dihedral_quandle",
    "conj_quandle",
    "core_quandle",
    "cyclic_group_table",
    "symmetric_group_table",
    "is_latin",
    "is_medial",
    "is_commutative",
    "is_involutory",
    "is_homomorphism",
    "is_covering",
    "is_isomorphic",
    "orbits",
    "parse_table_text",
    "format_table",
    "load_quandle",
    "quandle_to_json",
    "quandle_from_json",
]


class AxiomViolation(ValueError):
    """A table fails a quandle axiom.

    ``axiom`` is one of ``"idempotency"``, ``"right-bijectivity"``,
    ``"right-distributivity"``; ``witness`` is the offending tuple of
    0-based elements.  ``transpose_valid`` is set when the transposed table
    would have been a quandle, i.e. the table was most likely entered with
    rows and columns swapped.
    """

    def __init__(self, axiom: str, witness: tuple, transpose_valid: bool = False):
        self.axiom = axiom
        self.witness = tuple(witness)
        self.transpose_valid = transpose_valid
        msg = f"{axiom} fails at {self.witness}"
        if transpose_valid:
            msg += " (the transposed table is a quandle: rows must be the left operand)"
        super().__init__(msg)


@dataclass(frozen=True)
class Quandle:
    table: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def right(self, y: int) -> tuple[int, ...]:
        """The permutation S_y: x -> x*y, as a tuple."""
        return tuple(row[y] for row in self.table)

    def rdiv(self, a: int, b: int) -> int:
        """The unique c with c*b == a."""
        return self._right_inverse[b][a]

    @property
    def _right_inverse(self):
        inv = self.__dict__.get("_rinv")
        if inv is None:
            n = self.order
            inv = [[0] * n for _ in range(n)]
            for x in range(n):
                for y in range(n):
                    inv[y][self.table[x][y]] = x
            inv = tuple(tuple(r) for r in inv)
            object.__setattr__(self, "_rinv", inv)
        return inv

    def fixed_points(self, y: int) -> int:
        """Number of x with x*y == x."""
        return sum(1 for x in range(self.order) if self.table[x][y] == x)

    def one_based(self) -> list[list[int]]:
        return [[v + 1 for v in row] for row in self.table]

    def __str__(self):
        head = f"{self.name}\n" if self.name else ""
        return head + format_table(self.table)


def _check_square(table) -> tuple[tuple[int, ...], ...]:
    rows = [tuple(r) for r in table]
    n = len(rows)
    if n == 0:
        raise ValueError("empty table")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise ValueError(f"table is not square: row {i} has {len(r)} entries, expected {n}")
        for v in r:
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise ValueError(f"entry {v!r} in row {i} out of range 0..{n - 1}")
    return tuple(rows)


def _first_violation(t) -> tuple[str, tuple] | None:
    n = len(t)
    for x in range(n):
        if t[x][x] != x:
            return "idempotency", (x,)
    for y in range(n):
        seen = {}
        for x in range(n):
            v = t[x][y]
            if v in seen:
                return "right-bijectivity", (seen[v], x, y)
            seen[v] = x
    for x, y, z in itertools.product(range(n), repeat=3):
        if t[t[x][y]][z] != t[t[x][z]][t[y][z]]:
            return "right-distributivity", (x, y, z)
    return None


def validate_table(table: Sequence[Sequence[int]], name: str | None = None) -> Quandle:
    """Check the three quandle axioms on a 0-based table.

    Raises ValueError for malformed input and :class:`AxiomViolation`
    naming the first failed axiom otherwise.
    """
    t = _check_square(table)
    bad = _first_violation(t)
    if bad is not None:
        transposed = tuple(zip(*t))
        raise AxiomViolation(*bad, transpose_valid=_first_violation(transposed) is None)
    return Quandle(t, name)


# constructions

def trivial_quandle(n: int) -> Quandle:
    if n < 1:
        raise ValueError("order must be positive")
    return Quandle(tuple(tuple(x for _ in range(n)) for x in range(n)), f"T{n}")


def dihedral_quandle(n: int) -> Quandle:
    """R_n: i*j = 2j - i mod n."""
    if n < 1:
        raise ValueError("order must be positive")
    return Quandle(tuple(tuple((2 * j - i) % n for j in range(n)) for i in range(n)), f"R{n}")


def _check_group(g) -> tuple[tuple[tuple[int, ...], ...], int, list[int]]:
    g = _check_square(g)
    n = len(g)
    ident = [e for e in range(n) if all(g[e][a] == a and g[a][e] == a for a in range(n))]
    if not ident:
        raise ValueError("group table has no identity")
    e = ident[0]
    inv = []
    for a in range(n):
        cands = [b for b in range(n) if g[a][b] == e]
        if len(cands) != 1 or g[cands[0]][a] != e:
            raise ValueError(f"element {a} has no two-sided inverse")
        inv.append(cands[0])
    for a, b, c in itertools.product(range(n), repeat=3):
        if g[g[a][b]][c] != g[a][g[b][c]]:
            raise ValueError(f"group table not associative at {(a, b, c)}")
    return g, e, inv


def conj_quandle(group_table, name: str | None = None) -> Quandle:
    """Conj(G): x*y = y x y^-1."""
    g, _, inv = _check_group(group_table)
    n = len(g)
    return Quandle(tuple(tuple(g[g[y][x]][inv[y]] for y in range(n)) for x in range(n)),
                   name or f"Conj(G{n})")


def core_quandle(group_table, name: str | None = None) -> Quandle:
    """Core(G): x*y = y x^-1 y."""
    g, _, inv = _check_group(group_table)
    n = len(g)
    return Quandle(tuple(tuple(g[g[y][inv[x]]][y] for y in range(n)) for x in range(n)),
                   name or f"Core(G{n})")


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def symmetric_group_table(k: int) -> list[list[int]]:
    """Cayley table of S_k; element i is the i-th permutation in lexicographic order."""
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(x) = p(q(x))
    return [[index[tuple(p[q[x]] for x in range(k))] for q in perms] for p in perms]


# predicates

def is_latin(q: Quandle) -> bool:
    n = q.order
    return all(len(set(row)) == n for row in q.table)


def is_medial(q: Quandle) -> bool:
    t, r = q.table, range(q.order)
    return all(t[t[x][y]][t[z][w]] == t[t[x][z]][t[y][w]]
               for x, y, z, w in itertools.product(r, repeat=4))


def is_commutative(q: Quandle) -> bool:
    t = q.table
    return all(t[x][y] == t[y][x] for x in range(q.order) for y in range(x))


def is_involutory(q: Quandle) -> bool:
    t = q.table
    return all(t[t[x][y]][y] == x for x in range(q.order) for y in range(q.order))


def orbits(q: Quandle) -> list[list[int]]:
    """Orbits of the inner automorphism group, sorted by smallest element."""
    parent = list(range(q.order))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(q.order):
        for y in range(q.order):
            a, b = find(x), find(q.table[x][y])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for x in range(q.order):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


# maps

@dataclass(frozen=True)
class QuandleMap:
    source: Quandle
    target: Quandle
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.source.order:
            raise ValueError("map must be total on the source")
        if any(not 0 <= v < self.target.order for v in self.values):
            raise ValueError("map value outside the target")

    def __call__(self, x: int) -> int:
        return self.values[x]


def is_homomorphism(f: QuandleMap) -> bool:
    s, t, v = f.source.table, f.target.table, f.values
    n = f.source.order
    return all(v[s[x][y]] == t[v[x]][v[y]] for x in range(n) for y in range(n))


def is_covering(f: QuandleMap) -> bool:
    """Surjective homomorphism with S_x = S_x' whenever f(x) = f(x')."""
    if set(f.values) != set(range(f.target.order)) or not is_homomorphism(f):
        return False
    columns: dict[int, tuple[int, ...]] = {}
    for x in range(f.source.order):
        col = f.source.right(x)
        prev = columns.setdefault(f.values[x], col)
        if prev != col:
            return False
    return True


def _profiles(q: Quandle) -> list[tuple]:
    orbit_size = {}
    for orb in orbits(q):
        for x in orb:
            orbit_size[x] = len(orb)
    t = q.table
    n = q.order
    prof = []
    for x in range(n):
        left_image = len(set(t[x]))
        # cycle type of S_x
        seen, cycles = set(), []
        for a in range(n):
            if a in seen:
                continue
            c, b = 0, a
            while b not in seen:
                seen.add(b)
                b = t[b][x]
                c += 1
            cycles.append(c)
        prof.append((orbit_size[x], q.fixed_points(x), left_image, tuple(sorted(cycles))))
    return prof


def is_isomorphic(q1: Quandle, q2: Quandle) -> tuple[int, ...] | None:
    """A bijection f with f(x*y) = f(x)*f(y), or None.

    Backtracking over elements, restricted to targets with the same
    profile (orbit size, fixed points and cycle type of S_x, size of
    the left image).
    """
    n = q1.order
    if n != q2.order:
        return None
    p1, p2 = _profiles(q1), _profiles(q2)
    if sorted(p1) != sorted(p2):
        return None
    t1, t2 = q1.table, q2.table
    cands = [[y for y in range(n) if p2[y] == p1[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: len(cands[x]))
    f = [-1] * n
    used = [False] * n

    products_to = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            products_to[t1[a][b]].append((a, b))

    def consistent(x):
        for a in range(n):
            if f[a] < 0:
                continue
            for l, r in ((x, a), (a, x)):
                p = t1[l][r]
                if f[p] >= 0 and f[p] != t2[f[l]][f[r]]:
                    return False
        for l, r in products_to[x]:
            if f[l] >= 0 and f[r] >= 0 and f[x] != t2[f[l]][f[r]]:
                return False
        return True

    def extend(k):
        if k == n:
            return True
        x = order[k]
        for y in cands[x]:
            if used[y]:
                continue
            f[x], used[y] = y, True
            if consistent(x) and extend(k + 1):
                return True
            f[x], used[y] = -1, False
        return False

    if not extend(0):
        return None
    return tuple(f)


# I/O

def parse_table_text(text: str, name: str | None = None) -> Quandle:
    """Parse ``n`` followed by ``n`` rows of 1-based entries."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty quandle file")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"non-integer token in quandle file: {exc}") from None
    n = nums[0]
    body = nums[1:]
    if n < 1 or len(body) != n * n:
        raise ValueError(f"expected {n}x{n} entries after the order, got {len(body)}")
    return validate_table([[v - 1 for v in body[i * n:(i + 1) * n]] for i in range(n)], name)


def format_table(table: Iterable[Iterable[int]], one_based: bool = True) -> str:
    off = 1 if one_based else 0
    rows = [[v + off for v in r] for r in table]
    width = max(len(str(v)) for r in rows for v in r)
    return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in rows)


def quandle_to_json(q: Quandle) -> dict:
    return {"name": q.name, "order": q.order, "table": q.one_based()}


def quandle_from_json(data: dict) -> Quandle:
    table = data["table"]
    if "order" in data and data["order"] != len(table):
        raise ValueError(f"order {data['order']} does not match table size {len(table)}")
    return validate_table([[v - 1 for v in row] for row in table], data.get("name"))


def load_quandle(path) -> Quandle:
    """Read a quandle from a plain-text or JSON file (detected by content)."""
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return quandle_from_json(json.loads(text))
    return parse_table_text(text, name=str(path))
