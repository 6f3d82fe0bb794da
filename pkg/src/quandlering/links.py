"""Quandle presentations, colorings and their ring-level enhancements.

Presentation syntax::

    quandle K { gens: a, b; rel: a*(a*b) = (a*b)*b; rel: (b*a)*(a*b) = b; }

``*`` is the quandle product and ``\\`` its right inverse (``a \\ b`` is
the unique ``c`` with ``c*b = a``).  Without parentheses both operators
associate to the left.  The name after ``quandle`` is optional and ``#``
starts a comment.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .quandle import Quandle, is_isomorphic, is_medial, validate_table
from .ring import RingElement

__all__ = [
    "Term",
    "Presentation",
    "PresentationError",
    "parse_term",
    "parse_presentation",
    "format_presentation",
    "builtin_presentations",
    "FiniteMagma",
    "eval_term",
    "hom_set",
    "count_colorings",
    "HomQuandle",
    "hom_quandle",
    "eval_ring_term",
    "check_ring_relations",
    "EnhancementReport",
    "enhancement_report",
]


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Term:
    """Leaf (``op is None``, ``name`` set) or binary node with op ``*`` or ``\\``."""

    name: str | None = None
    op: str | None = None
    left: "Term | None" = None
    right: "Term | None" = None

    @classmethod
    def gen(cls, name: str) -> "Term":
        return cls(name=name)

    def __mul__(self, other: "Term") -> "Term":
        return Term(op="*", left=self, right=other)

    def rdiv(self, other: "Term") -> "Term":
        return Term(op="\\", left=self, right=other)

    def leaves(self) -> set[str]:
        if self.op is None:
            return {self.name}
        return self.left.leaves() | self.right.leaves()

    def uses_inverse(self) -> bool:
        if self.op is None:
            return False
        return self.op == "\\" or self.left.uses_inverse() or self.right.uses_inverse()

    def __str__(self):
        if self.op is None:
            return self.name

        def wrap(t):
            return str(t) if t.op is None else f"({t})"

        return f"{wrap(self.left)}{self.op}{wrap(self.right)}"


_TERM_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|[*\\()])")


def _term_tokens(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TERM_TOKEN.match(text, pos)
        if not m:
            raise PresentationError(f"unexpected input at {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def parse_term(text: str) -> Term:
    tokens = _term_tokens(text)
    pos = 0

    def atom():
        nonlocal pos
        if pos >= len(tokens):
            raise PresentationError(f"term {text!r} ends early")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            t = expr()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise PresentationError(f"missing ')' in {text!r}")
            pos += 1
            return t
        if tok in "*\\)":
            raise PresentationError(f"unexpected {tok!r} in {text!r}")
        return Term.gen(tok)

    def expr():
        nonlocal pos
        t = atom()
        while pos < len(tokens) and tokens[pos] in ("*", "\\"):
            op = tokens[pos]
            pos += 1
            rhs = atom()
            t = Term(op=op, left=t, right=rhs)
        return t

    t = expr()
    if pos != len(tokens):
        raise PresentationError(f"trailing input in term {text!r}")
    return t


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[Term, Term], ...]
    name: str = ""

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("repeated generator")
        gens = set(self.generators)
        for lhs, rhs in self.relations:
            extra = (lhs.leaves() | rhs.leaves()) - gens
            if extra:
                raise PresentationError(f"relation {lhs} = {rhs} uses undeclared {sorted(extra)}")


def parse_presentation(text: str) -> Presentation:
    text = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    # names may themselves contain braces, e.g. L4a1{0}
    m = re.fullmatch(r"\s*quandle(?:\s+(\S+))?\s*\{(.*)\}\s*", text, re.S)
    if not m:
        raise PresentationError("expected 'quandle [name] { ... }'")
    name, body = m.group(1) or "", m.group(2)
    gens: list[str] = []
    rels = []
    seen_gens = False
    for stmt in body.split(";"):
        stmt = stmt.strip()
        if not stmt:
            continue
        key, _, value = stmt.partition(":")
        key = key.strip()
        if key == "gens":
            if seen_gens:
                raise PresentationError("generators declared twice")
            seen_gens = True
            gens = [g.strip() for g in value.split(",") if g.strip()]
            for g in gens:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", g):
                    raise PresentationError(f"bad generator name {g!r}")
        elif key == "rel":
            if value.count("=") != 1:
                raise PresentationError(f"relation needs exactly one '=': {value!r}")
            lhs, rhs = value.split("=")
            rels.append((parse_term(lhs), parse_term(rhs)))
        else:
            raise PresentationError(f"unknown statement {stmt!r}")
    if not seen_gens:
        raise PresentationError("missing 'gens:'")
    return Presentation(tuple(gens), tuple(rels), name)


def format_presentation(p: Presentation) -> str:
    lines = [f"quandle {p.name} {{" if p.name else "quandle {", f"  gens: {', '.join(p.generators)};"]
    lines += [f"  rel: {lhs} = {rhs};" for lhs, rhs in p.relations]
    lines.append("}")
    return "\n".join(lines) + "\n"


_BUILTIN = {
    # two-component link L4a1{0}: full and reduced presentations
    "L4a1{0}:5": "quandle { gens: a, b, c, d, k; rel: d*b = c; rel: k*d = b; rel: b*a = k;"
                 " rel: a*d = c; rel: a*b = d; }",
    "L4a1{0}": "quandle { gens: a, b; rel: a*(a*b) = (a*b)*b; rel: (b*a)*(a*b) = b; }",
    # L5a1{1}
    "L5a1{1}:5": "quandle { gens: x, y, z, r, w; rel: w*x = y; rel: x*z = r; rel: y*w = z;"
                 " rel: w*r = z; rel: x*y = r; }",
    "L5a1{1}": "quandle { gens: x, w; rel: w*(x*(w*x)) = (w*x)*w; rel: x*((w*x)*w) = x*(w*x); }",
    # Hopf link L2a1{0}
    "L2a1{0}": "quandle { gens: a, b; rel: a*b = a; rel: b*a = b; }",
    # L4a1{1}
    "L4a1{1}:4": "quandle { gens: x, y, z, w; rel: x*w = y; rel: w*y = z; rel: y*z = x; rel: z*x = w; }",
    "L4a1{1}": "quandle { gens: x, w; rel: (x*w)*(w*(x*w)) = x; rel: (w*(x*w))*x = w; }",
}


def builtin_presentations() -> dict[str, Presentation]:
    """Link quandle presentations used in the coloring examples, keyed by link name.

    A ``:k`` suffix marks the unreduced k-generator presentation.
    """
    out = {}
    for name, text in _BUILTIN.items():
        p = parse_presentation(text)
        out[name] = Presentation(p.generators, p.relations, name)
    return out


# coloring targets

@dataclass(frozen=True)
class FiniteMagma:
    """Finite set with a closed binary operation, given by an index table."""

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()
    is_quandle: bool = False

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(table)
        if any(len(r) != n or any(not 0 <= v < n for v in r) for r in table):
            raise ValueError("magma table must be square with entries in range")
        object.__setattr__(self, "table", table)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i + 1) for i in range(n)))

    @property
    def order(self) -> int:
        return len(self.table)

    @classmethod
    def from_quandle(cls, q: Quandle) -> "FiniteMagma":
        return cls(q.table, tuple(str(i + 1) for i in range(q.order)), True)

    @classmethod
    def from_elements(cls, elements: Sequence[RingElement]) -> "FiniteMagma":
        """Magma of ring elements closed under the ring product."""
        index = {u.coeffs: i for i, u in enumerate(elements)}
        table = []
        for u in elements:
            row = []
            for v in elements:
                k = index.get((u * v).coeffs)
                if k is None:
                    raise ValueError(f"({u})*({v}) leaves the element list")
                row.append(k)
            table.append(row)
        try:
            validate_table(table)
            quandle = True
        except ValueError:
            quandle = False
        return cls(tuple(map(tuple, table)), tuple(str(u) for u in elements), quandle)

    def rdiv(self, a: int, b: int) -> int:
        col = [self.table[x][b] for x in range(self.order)]
        if sorted(col) != list(range(self.order)):
            raise ValueError(f"right multiplication by {self.labels[b]} is not a bijection")
        return col.index(a)


def _as_target(target):
    if isinstance(target, Quandle):
        return target.table, target.rdiv
    if isinstance(target, FiniteMagma):
        return target.table, target.rdiv
    raise TypeError(f"not a coloring target: {type(target).__name__}")


def eval_term(t: Term, assignment: Mapping[str, int], target) -> int:
    table, rdiv = _as_target(target)
    return _eval(t, assignment, table, rdiv)


def _eval(t, assignment, table, rdiv):
    if t.op is None:
        return assignment[t.name]
    a = _eval(t.left, assignment, table, rdiv)
    b = _eval(t.right, assignment, table, rdiv)
    if t.op == "*":
        return table[a][b]
    return rdiv(a, b)


def hom_set(p: Presentation, target) -> list[tuple[int, ...]]:
    """Generator assignments satisfying every relation, in lexicographic order.

    Relations are checked as soon as their generators are assigned.
    """
    table, rdiv = _as_target(target)
    n = len(table)
    gens = p.generators
    pos = {g: i for i, g in enumerate(gens)}
    ready: list[list] = [[] for _ in gens]
    for lhs, rhs in p.relations:
        used = lhs.leaves() | rhs.leaves()
        last = max((pos[g] for g in used), default=0)
        ready[last].append((lhs, rhs))
    out = []
    values = [0] * len(gens)

    def extend(i):
        if i == len(gens):
            out.append(tuple(values))
            return
        for v in range(n):
            values[i] = v
            env = dict(zip(gens[:i + 1], values[:i + 1]))
            if all(_eval(l, env, table, rdiv) == _eval(r, env, table, rdiv) for l, r in ready[i]):
                extend(i + 1)

    if gens:
        extend(0)
    return out


def count_colorings(p: Presentation, target) -> int:
    return len(hom_set(p, target))


@dataclass(frozen=True)
class HomQuandle:
    presentation: Presentation
    target: Quandle
    elements: tuple[tuple[int, ...], ...]
    quandle: Quandle

    @property
    def order(self) -> int:
        return len(self.elements)


def hom_quandle(p: Presentation, target: Quandle) -> HomQuandle:
    """Homomorphisms into a medial quandle under the pointwise product."""
    if not isinstance(target, Quandle):
        raise TypeError("the Hom quandle needs a quandle target")
    if not is_medial(target):
        raise ValueError(f"target {target.name or ''} is not medial; pointwise product is not a quandle")
    elements = hom_set(p, target)
    index = {e: i for i, e in enumerate(elements)}
    t = target.table
    table = []
    for f in elements:
        row = []
        for g in elements:
            h = tuple(t[a][b] for a, b in zip(f, g))
            if h not in index:
                raise AssertionError("pointwise product left the homomorphism set")
            row.append(index[h])
        table.append(row)
    name = f"Hom({p.name or 'P'}, {target.name or 'T'})"
    q = validate_table(table, name)
    return HomQuandle(p, target, tuple(elements), q)


# ring-level relations

def eval_ring_term(t: Term, assignment: Mapping[str, RingElement]) -> RingElement:
    if t.op is None:
        return assignment[t.name]
    if t.op != "*":
        raise ValueError("ring relations can only use '*'")
    return eval_ring_term(t.left, assignment) * eval_ring_term(t.right, assignment)


def check_ring_relations(p: Presentation, assignment: Mapping[str, RingElement]) -> bool:
    """Do the assigned ring elements (0 allowed) satisfy every relation, parenthesized as given?"""
    for lhs, rhs in p.relations:
        if lhs.uses_inverse() or rhs.uses_inverse():
            raise ValueError(f"relation {lhs} = {rhs} uses the right inverse")
    return all(eval_ring_term(l, assignment) == eval_ring_term(r, assignment)
               for l, r in p.relations)


def _structure_tensor(q: Quandle) -> np.ndarray:
    n = q.order
    T = np.zeros((n, n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            T[x, y, q.table[x][y]] = 1
    return T


def _leaf_count(t: Term) -> int:
    if t.op is None:
        return 1
    return _leaf_count(t.left) + _leaf_count(t.right)


def _batch_eval(t: Term, leaves: Mapping[str, np.ndarray], T: np.ndarray) -> np.ndarray:
    if t.op is None:
        return leaves[t.name]
    if t.op != "*":
        raise ValueError("ring relations can only use '*'")
    a = _batch_eval(t.left, leaves, T)
    b = _batch_eval(t.right, leaves, T)
    if a.dtype == object or b.dtype == object:
        n = T.shape[0]
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=object)
        for x in range(n):
            for y in range(n):
                k = int(np.argmax(T[x, y]))
                out[..., k] = out[..., k] + a[..., x] * b[..., y]
        return out
    return np.einsum("...x,...y,xyk->...k", a, b, T)


@dataclass
class EnhancementReport:
    """Which (value-or-zero) pairs satisfy each presentation's ring relations.

    ``values`` are distinct family instances, labelled by family index;
    index ``-1`` denotes the zero element (always values[0]).
    """

    names: tuple[str, str]
    values: list
    family_of: list
    satisfied: dict = field(default_factory=dict)

    def count(self, which: int, relation: int | None = None, kind: str = "all") -> int:
        mask = self._kind_mask(kind)
        sat = self._sat(which, relation)
        return int((sat & mask).sum())

    def _sat(self, which, relation):
        rels = self.satisfied[which]
        if relation is None:
            return np.logical_and.reduce(rels)
        return rels[relation]

    def _kind_mask(self, kind):
        f = np.array(self.family_of)
        zero = f == -1
        first, second = f[:, None], f[None, :]
        if kind == "all":
            return np.ones((len(f), len(f)), dtype=bool)
        if kind == "zero-first":
            return zero[:, None] & ~zero[None, :]
        if kind == "zero-second":
            return ~zero[:, None] & zero[None, :]
        if kind == "zero-zero":
            return zero[:, None] & zero[None, :]
        nonzero = ~zero[:, None] & ~zero[None, :]
        if kind == "same-family":
            return nonzero & (first == second)
        if kind == "cross-family":
            return nonzero & (first != second)
        raise ValueError(f"unknown pair kind {kind!r}")

    def pairs(self, kind: str) -> int:
        return int(self._kind_mask(kind).sum())

    def all_satisfy(self, which: int, kind: str, relation: int | None = None) -> bool:
        mask = self._kind_mask(kind)
        return bool(self._sat(which, relation)[mask].all())

    def none_satisfy(self, which: int, kind: str, relation: int | None = None) -> bool:
        mask = self._kind_mask(kind)
        return not bool(self._sat(which, relation)[mask].any())

    def summary(self) -> dict:
        out = {"values": len(self.values) - 1, "pairs": len(self.values) ** 2, "presentations": {}}
        for which, name in enumerate(self.names):
            rels = len(self.satisfied[which])
            out["presentations"][name] = {
                kind: {"pairs": self.pairs(kind), "satisfy_all": self.count(which, None, kind),
                       "satisfy_each": [self.count(which, r, kind) for r in range(rels)]}
                for kind in ("zero-zero", "zero-first", "zero-second", "same-family", "cross-family")
            }
        return out


def enhancement_report(p1: Presentation, p2: Presentation, families, grid: Sequence[int] = (-1, 0, 1)
                       ) -> EnhancementReport:
    """Tabulate ring-relation solutions over grid instances of idempotent families.

    Both presentations must have two generators; the pair (v, w) assigns v to
    the first generator and w to the second.  Identical instances are merged.
    """
    for p in (p1, p2):
        if len(p.generators) != 2:
            raise ValueError(f"{p.name or 'presentation'} must have exactly two generators")
    quandle = families[0].quandle
    n = quandle.order
    values = [tuple([0] * n)]
    family_of = [-1]
    seen = {values[0]}
    for j, fam in enumerate(families):
        params = fam.parameters
        for vals in itertools.product(grid, repeat=len(params)):
            u = fam.subs(dict(zip(params, vals))).coeffs
            if u in seen:
                continue
            seen.add(u)
            values.append(u)
            family_of.append(j)
    # ||uv||_1 <= ||u||_1 ||v||_1 bounds every coefficient of a product
    big = max(sum(abs(int(c)) for c in v) for v in values) or 1
    T = _structure_tensor(quandle)
    report = EnhancementReport((p1.name or "P1", p2.name or "P2"), values, family_of)
    for which, p in enumerate((p1, p2)):
        nleaves = max(_leaf_count(t) for rel in p.relations for t in rel)
        dtype = np.int64 if big ** nleaves < 2 ** 62 else object
        arr = np.array(values, dtype=dtype)
        g1, g2 = p.generators
        leaves = {g1: arr[:, None, :], g2: arr[None, :, :]}
        sats = []
        for lhs, rhs in p.relations:
            lv = np.broadcast_to(_batch_eval(lhs, leaves, T), (len(values), len(values), n))
            rv = np.broadcast_to(_batch_eval(rhs, leaves, T), (len(values), len(values), n))
            sats.append(np.all(lv == rv, axis=-1))
        report.satisfied[which] = sats
    return report


def hom_isomorphism(h1: HomQuandle, h2: HomQuandle):
    return is_isomorphic(h1.quandle, h2.quandle)
