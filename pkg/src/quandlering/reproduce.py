"""End-to-end checks of the reference results.

Each check returns a :class:`CheckResult`; :func:`run_checks` runs a
selection of them and never lets one failure stop the others.
"""
from __future__ import annotations

import random
import time
import traceback
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .catalog import (
    LEMMA_IDEMPOTENT_TABLE,
    LEMMA_IDEMPOTENTS,
    LEMMA_QUANDLE,
    CatalogEntry,
    catalog_entries,
)
from .coeffs import INTEGERS, MOD2, RATIONALS
from .idempotents import (
    SearchTooLarge,
    covering_family_r2n,
    enumerate_mod2,
    in_families,
    idempotent_quandle,
    is_idempotent,
    is_quandle_under_mul,
    parse_family,
    product_table,
    search_bounded,
    verify_family,
)
from .links import FiniteMagma, builtin_presentations, count_colorings, enhancement_report, hom_quandle
from .peirce import algebra_spectrum, annihilator_check, rational_spectrum, right_mult_matrix, trace_check
from .quandle import Quandle, dihedral_quandle, is_commutative, is_isomorphic, is_latin, is_medial
from .ring import RingElement, parse_element

__all__ = ["CheckResult", "CHECKS", "GROUPS", "run_checks", "mod2_row_report", "RATIONAL_R3_IDEMPOTENTS",
           "RATIONAL_NONLATIN3_FAMILIES"]

DEFAULT_SEED = 20230613

# every idempotent of Q[R3]
RATIONAL_R3_IDEMPOTENTS = (
    "e1", "e2", "e3", "(1/3)*e1+(1/3)*e2+(1/3)*e3",
    "(-1/3)*e1-(1/3)*e2+(2/3)*e3", "(-1/3)*e1+(2/3)*e2-(1/3)*e3", "(2/3)*e1-(1/3)*e2-(1/3)*e3",
)
# idempotent families of Q[X] for the order-3 quandle 1 1 2 / 2 2 1 / 3 3 3
RATIONAL_NONLATIN3_FAMILIES = ("(1-b)*e1+b*e2", "a*e1+a*e2+(1-2*a)*e3")


@dataclass
class CheckResult:
    key: int
    group: str
    title: str
    passed: bool
    details: list = field(default_factory=list)
    seconds: float = 0.0
    status: str = ""

    def __post_init__(self):
        if not self.status:
            self.status = "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {"id": self.key, "group": self.group, "title": self.title, "status": self.status,
                "details": list(self.details), "seconds": round(self.seconds, 3)}


def _entries(entries):
    return list(entries) if entries is not None else list(catalog_entries())


def mod2_row_report(entry: CatalogEntry) -> dict:
    """Compare one row's listed mod-2 data with an exhaustive computation."""
    q = entry.quandle
    computed = enumerate_mod2(q)
    listed = {parse_element(s, q, MOD2).to_mask() for s in entry.mod2_idempotents}
    got = set(computed.masks())
    flag = is_quandle_under_mul(computed)
    missing = sorted(got - listed)
    extra = sorted(listed - got)
    fmt = lambda masks: [str(RingElement.from_mask(q, m)) for m in masks]
    # listed "Yes" next to augmentation-0 elements cannot be right
    alarm = entry.mod2_is_quandle and any(bin(m).count("1") % 2 == 0 for m in listed)
    return {
        "label": entry.label,
        "set_matches": not missing and not extra,
        "flag_matches": flag == entry.mod2_is_quandle,
        "computed_count": len(got),
        "listed_count": len(listed),
        "not_listed": fmt(missing),
        "listed_not_idempotent": fmt(extra),
        "computed_flag": flag,
        "listed_flag": entry.mod2_is_quandle,
        "augmentation_alarm": alarm,
    }


def check_mod2_tables(entries=None, **_):
    details, ok = [], True
    for e in _entries(entries):
        r = mod2_row_report(e)
        good = r["set_matches"] and r["flag_matches"] and not r["augmentation_alarm"]
        ok &= good
        if not good:
            parts = []
            if r["not_listed"]:
                parts.append(f"idempotent but not listed: {', '.join(r['not_listed'])}")
            if r["listed_not_idempotent"]:
                parts.append(f"listed but not idempotent: {', '.join(r['listed_not_idempotent'])}")
            if not r["flag_matches"]:
                parts.append(f"quandle flag listed {r['listed_flag']}, computed {r['computed_flag']}")
            if r["augmentation_alarm"]:
                parts.append("flag Yes listed next to augmentation-0 elements")
            details.append(f"{e.label}: {'; '.join(parts)} "
                           f"({r['listed_count']} listed, {r['computed_count']} computed)")
    n = len(_entries(entries))
    details.insert(0, f"{n - len(details)}/{n} rows match exactly")
    return ok, details


def _lemma_entry(entries):
    for e in _entries(entries):
        if e.label == LEMMA_QUANDLE:
            return e
    raise KeyError(LEMMA_QUANDLE)


def check_lemma_quandle(entries=None, **_):
    q = _lemma_entry(entries).quandle
    found = enumerate_mod2(q)
    names = [str(u) for u in found]
    ok_set = names == list(LEMMA_IDEMPOTENTS)
    iq = idempotent_quandle(found)
    table = [[v + 1 for v in row] for row in product_table(list(found))]
    ok_table = table == [list(r) for r in LEMMA_IDEMPOTENT_TABLE]
    details = [f"{len(found)} idempotents: {', '.join(names)}",
               f"medial quandle under the product: {is_medial(iq)}",
               f"10x10 table equals reference: {ok_table}"]
    return ok_set and ok_table and is_medial(iq) and is_medial(q), details


def check_latin_trivial(entries=None, **_):
    details, ok = [], True
    r3 = dihedral_quandle(3)
    found = search_bounded(r3, INTEGERS, 10)
    ok &= len(found) == 3 and all(sorted(u.coeffs) == [0, 0, 1] for u in found)
    details.append(f"R3, B=10: {len(found)} idempotents ({', '.join(map(str, found))})")
    for e in _entries(entries):
        if not is_latin(e.quandle):
            continue
        found = search_bounded(e.quandle, INTEGERS, 5)
        trivial = len(found) == e.order and all(sorted(u.coeffs) == [0] * (e.order - 1) + [1] for u in found)
        ok &= trivial
        details.append(f"{e.label} (latin), B=5: {len(found)} idempotents, trivial only: {trivial}")
    return ok, details


def check_commutative(entries=None, **_):
    details, ok = [], True
    quandles = [e.quandle for e in _entries(entries) if is_commutative(e.quandle)]
    quandles.insert(0, dihedral_quandle(3))
    checked = 0
    for q in quandles:
        count = len(enumerate_mod2(q))
        good = count == 2 ** q.order - 1
        ok &= good
        checked += q.order <= 4
        details.append(f"{q.name}: order {q.order}, {count} mod-2 idempotents, 2^n-1 = {2 ** q.order - 1}")
    ok &= checked > 0
    return ok, details


def _random_rational(rng: random.Random):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 4))


def check_covering_families(seed=DEFAULT_SEED, **_):
    rng = random.Random(seed)
    fams = covering_family_r2n(3)
    symbolic = [verify_family(f) for f in fams]
    ok = all(symbolic)
    bad = 0
    for _ in range(200):
        fam = rng.choice(fams)
        vals = {p: _random_rational(rng) for p in fam.parameters}
        u = fam.subs(vals)
        if u.is_zero() or not is_idempotent(u):
            bad += 1
    ok &= bad == 0
    return ok, [f"symbolic u_j^2 = u_j for j = 0, 1, 2: {symbolic}",
                f"200 random rational instances, failures: {bad}"]


def check_integral_families(entries=None, bound=3, **_):
    details, ok = [], True
    for e in _entries(entries):
        fams = [parse_family(s, e.quandle) for s in e.z_families]
        bad_fams = [str(f) for f in fams if not verify_family(f)]
        found = search_bounded(e.quandle, INTEGERS, bound)
        outside = [str(u) for u in found if in_families(u, fams) is None]
        if bad_fams or outside:
            ok = False
            msg = [f"{e.label}:"]
            if bad_fams:
                msg.append(f"families not idempotent: {', '.join(bad_fams)}")
            if outside:
                msg.append(f"{len(outside)} of {len(found)} integral idempotents (B={bound}) in no family, "
                           f"e.g. {', '.join(outside[:4])}")
            details.append(" ".join(msg))
    n = len(_entries(entries))
    details.insert(0, f"{n - len(details)}/{n} rows sound and complete within B={bound}")
    return ok, details


def check_colorings(entries=None, **_):
    P = builtin_presentations()
    r6 = dihedral_quandle(6)
    x = _lemma_entry(entries).quandle
    ix = FiniteMagma.from_elements(list(enumerate_mod2(x)))
    got = {
        "L4a1{0} -> R6": (count_colorings(P["L4a1{0}"], r6), 12),
        "L5a1{1} -> R6": (count_colorings(P["L5a1{1}"], r6), 12),
        "L2a1{0} -> X": (count_colorings(P["L2a1{0}"], x), 13),
        "L4a1{1} -> X": (count_colorings(P["L4a1{1}"], x), 13),
        "L2a1{0} -> I(Z2[X])": (count_colorings(P["L2a1{0}"], ix), 68),
        "L4a1{1} -> I(Z2[X])": (count_colorings(P["L4a1{1}"], ix), 76),
    }
    details = [f"{k}: {a} (expected {b})" for k, (a, b) in got.items()]
    return all(a == b for a, b in got.values()), details


def check_hom_quandles(entries=None, **_):
    P = builtin_presentations()
    r6 = dihedral_quandle(6)
    x = _lemma_entry(entries).quandle
    ok, details = True, []
    for (p1, p2), target, size in (
        (("L4a1{0}", "L5a1{1}"), r6, 12),
        (("L2a1{0}", "L4a1{1}"), x, 13),
    ):
        h1, h2 = hom_quandle(P[p1], target), hom_quandle(P[p2], target)
        iso = is_isomorphic(h1.quandle, h2.quandle)
        good = (h1.order == h2.order == size and iso is not None
                and is_medial(h1.quandle) and is_medial(h2.quandle))
        ok &= good
        details.append(f"Hom({p1}) and Hom({p2}) into {target.name}: orders {h1.order}, {h2.order}; "
                       f"medial; isomorphism {'found' if iso else 'missing'}"
                       + (f" {[v + 1 for v in iso]}" if iso else ""))
    return ok, details


def check_enhancement(**_):
    P = builtin_presentations()
    p1, p2 = P["L4a1{0}"], P["L5a1{1}"]
    rep = enhancement_report(p1, p2, covering_family_r2n(3), (-1, 0, 1))
    checks = {
        "cross-family pairs fail the first relation of L4a1{0}": rep.none_satisfy(0, "cross-family", 0),
        "cross-family pairs fail the first relation of L5a1{1}": rep.none_satisfy(1, "cross-family", 0),
        "same-family pairs satisfy both relations of L4a1{0}": rep.all_satisfy(0, "same-family"),
        "same-family pairs satisfy both relations of L5a1{1}": rep.all_satisfy(1, "same-family"),
        "L5a1{1} admits (0, u) with u != 0": rep.all_satisfy(1, "zero-first"),
        "L4a1{0} forbids (0, u) with u != 0": rep.none_satisfy(0, "zero-first"),
    }
    details = [f"{len(rep.values) - 1} distinct nonzero instances, {rep.pairs('same-family')} same-family and "
               f"{rep.pairs('cross-family')} cross-family pairs"]
    details += [f"{k}: {v}" for k, v in checks.items()]
    return all(checks.values()), details


def _order3(entries, latin: bool):
    for e in _entries(entries):
        if e.order == 3 and is_latin(e.quandle) == latin and e.quandle.table != tuple(
                tuple(x for _ in range(3)) for x in range(3)):
            return e.quandle
    raise KeyError("order-3 quandle")


def check_peirce_order3(entries=None, seed=DEFAULT_SEED, **_):
    rng = random.Random(seed)
    ok, details = True, []
    bad = 0
    for e in _entries(entries):
        for _ in range(500):
            u = RingElement(e.quandle, RATIONALS, tuple(_random_rational(rng) for _ in range(e.order)))
            tr, fixed, _eps = trace_check(e.quandle, u)
            bad += tr != fixed
    ok &= bad == 0
    details.append(f"trace identity on 500 random elements per quandle, failures: {bad}")

    r3 = _order3(entries, latin=True)
    found = search_bounded(r3, RATIONALS, 3, 3)
    expected = {parse_element(s, r3).coeffs for s in RATIONAL_R3_IDEMPOTENTS}
    same = {u.coeffs for u in found} == expected
    ok &= same
    details.append(f"latin order 3: {len(found)} rational idempotents, equal to the expected 7: {same}")

    q = _order3(entries, latin=False)
    fams = [parse_family(s, q) for s in RATIONAL_NONLATIN3_FAMILIES]
    found = search_bounded(q, RATIONALS, 3, 3)
    in_fam = all(in_families(u, fams, integral=False) is not None for u in found)
    # every family member inside the bounds must have been found
    grid = sorted({Fraction(p, d) for d in range(1, 4) for p in range(-9, 10)})
    members = set()
    for fam in fams:
        for v in grid:
            u = fam.subs({p: v for p in fam.parameters})
            if all(Fraction(c).denominator <= 3 and abs(Fraction(c).numerator) <= 9 for c in u.coeffs):
                members.add(u.coeffs)
    complete = members == {u.coeffs for u in found}
    ok &= in_fam and complete
    details.append(f"non-latin order 3: {len(found)} rational idempotents within bounds, all in the two "
                   f"families: {in_fam}, every family member within bounds found: {complete}")

    spec = algebra_spectrum(r3, list(search_bounded(r3, RATIONALS, 3, 3)))
    good = spec.eigenvalues == {0, 1, -1} and not spec.residual
    ok &= good
    details.append(f"spectrum of Q[R3]: {sorted(spec.eigenvalues)}, residual factors: {len(spec.residual)}")

    seen = []
    for a in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)):
        u = RingElement(q, RATIONALS, (a, a, 1 - 2 * a))
        s = rational_spectrum(right_mult_matrix(u))
        seen.append(4 * a - 1 in s.values())
    ok &= all(seen)
    details.append(f"eigenvalue 4a-1 at a = 0, 1/2, 1, 2: {seen}")
    return ok, details


def check_dihedral_spectra(**_):
    ok, details = True, []
    for n in (5, 7, 9):
        q = dihedral_quandle(n)
        found = search_bounded(q, RATIONALS, 1, n)
        good = all(annihilator_check(u) for u in found)
        ok &= good and len(found) > 0
        details.append(f"R{n}: {len(found)} rational idempotents (|numerator| <= {n}, denominator <= {n}); "
                       f"S_u(S_u-1)(S_u+1) = 0 for all: {good}")
    return ok, details


def check_augmentation(entries=None, bound=4, **_):
    ok, details, total = True, [], 0
    for e in _entries(entries):
        found = search_bounded(e.quandle, INTEGERS, bound)
        total += len(found)
        zero = [str(u) for u in found if u.augmentation() == 0]
        if zero:
            ok = False
            details.append(f"{e.label}: augmentation-0 idempotents {', '.join(zero)}")
    details.insert(0, f"{total} integral idempotents with |coefficients| <= {bound} across the catalog")
    return ok, details


CHECKS: list[tuple[int, str, str, Callable]] = [
    (1, "tables", "mod-2 idempotent sets and quandle flags of every catalog row", check_mod2_tables),
    (2, "lemma", "ten mod-2 idempotents of the order-5 medial quandle and their product table",
     check_lemma_quandle),
    (3, "latin", "integral rings of latin quandles have only trivial idempotents (bounded)",
     check_latin_trivial),
    (4, "commutative", "commutative quandles have 2^n-1 mod-2 idempotents", check_commutative),
    (5, "covering", "covering families of Z[R6] are idempotent", check_covering_families),
    (6, "families", "integral idempotent families are sound and complete within B=3",
     check_integral_families),
    (7, "colorings", "coloring counts 12/12, 13/13 and 68/76", check_colorings),
    (8, "hom", "Hom quandles of the link pairs are isomorphic and medial", check_hom_quandles),
    (9, "enhancement", "ring relations separate the two presentations into Z[R6]", check_enhancement),
    (10, "peirce", "trace identity, order-3 rational idempotents and spectra", check_peirce_order3),
    (11, "dihedral-spectra", "S_u(S_u-1)(S_u+1) = 0 for rational idempotents of R5, R7, R9",
     check_dihedral_spectra),
    (12, "augmentation", "no integral idempotent of augmentation 0 (B=4)", check_augmentation),
]

GROUPS = {group: key for key, group, _, _ in CHECKS}


def _select(only: Sequence[str] | None):
    if not only:
        return CHECKS
    wanted = set()
    for item in only:
        for tok in str(item).split(","):
            tok = tok.strip()
            if not tok:
                continue
            if tok.isdigit() and any(k == int(tok) for k, *_ in CHECKS):
                wanted.add(int(tok))
            elif tok in GROUPS:
                wanted.add(GROUPS[tok])
            else:
                raise ValueError(f"unknown check {tok!r}; choose from {', '.join(GROUPS)} or 1-{len(CHECKS)}")
    return [c for c in CHECKS if c[0] in wanted]


def run_checks(only: Sequence[str] | None = None, entries: Sequence[CatalogEntry] | None = None,
               seed: int = DEFAULT_SEED) -> list[CheckResult]:
    results = []
    for key, group, title, fn in _select(only):
        start = time.perf_counter()
        try:
            passed, details = fn(entries=entries, seed=seed)
            status = ""
        except SearchTooLarge as exc:
            passed, details, status = False, [f"resource limit: {exc}"], "LIMIT"
        except Exception as exc:  # a broken check must not stop the others
            passed, status = False, "ERROR"
            details = [f"{type(exc).__name__}: {exc}", traceback.format_exc(limit=3)]
        results.append(CheckResult(key, group, title, passed, details, time.perf_counter() - start, status))
    return results
