import itertools
import random

import pytest
from hypothesis import given, strategies as st

from quandlering.catalog import catalog_entries, get_entry, LEMMA_QUANDLE
from quandlering.coeffs import INTEGERS
from quandlering.idempotents import covering_family_r2n, enumerate_mod2
from quandlering.links import (
    FiniteMagma,
    Presentation,
    PresentationError,
    builtin_presentations,
    check_ring_relations,
    count_colorings,
    enhancement_report,
    eval_term,
    format_presentation,
    hom_isomorphism,
    hom_quandle,
    hom_set,
    parse_presentation,
    parse_term,
)
from quandlering.quandle import dihedral_quandle, is_medial, trivial_quandle
from quandlering.ring import RingElement

P = builtin_presentations()
ENTRIES = catalog_entries()
R6 = dihedral_quandle(6)
X = get_entry(LEMMA_QUANDLE).quandle


def brute_colorings(p, target):
    n = target.order
    out = []
    for vals in itertools.product(range(n), repeat=len(p.generators)):
        env = dict(zip(p.generators, vals))
        if all(eval_term(l, env, target) == eval_term(r, env, target) for l, r in p.relations):
            out.append(vals)
    return out


def test_term_parsing():
    t = parse_term("a*(b\\c)*d")
    assert str(t) == "(a*(b\\c))*d"
    assert t.leaves() == {"a", "b", "c", "d"}
    assert t.uses_inverse()
    assert not parse_term("(x*y)*z").uses_inverse()


def test_presentation_round_trip():
    for p in P.values():
        q = parse_presentation(format_presentation(p))
        assert q.generators == p.generators and q.relations == p.relations


def test_comments_ignored():
    p = parse_presentation("quandle h { # Hopf link\n gens: a, b;\n rel: a*b = a; # first\n rel: b*a = b; }")
    assert p.name == "h" and len(p.relations) == 2


@pytest.mark.parametrize("text", [
    "gens: a;",
    "quandle { rel: a*a = a; }",
    "quandle { gens: a; rel: a*b = a; }",
    "quandle { gens: a, a; }",
    "quandle { gens: a; rel: a = a = a; }",
    "quandle { gens: a; colour: red; }",
])
def test_bad_presentations(text):
    with pytest.raises(PresentationError):
        parse_presentation(text)


def test_hopf_link_into_trivial_quandle():
    assert count_colorings(P["L2a1{0}"], trivial_quandle(3)) == 9


@pytest.mark.parametrize("name", sorted(P))
def test_backtracking_matches_brute_force(name):
    for target in (dihedral_quandle(3), get_entry("Q4.2").quandle, X):
        assert hom_set(P[name], target) == brute_colorings(P[name], target)


@pytest.mark.parametrize("full,reduced", [("L4a1{0}:5", "L4a1{0}"), ("L5a1{1}:5", "L5a1{1}"),
                                          ("L4a1{1}:4", "L4a1{1}")])
@pytest.mark.parametrize("entry", ENTRIES[::3], ids=lambda e: e.label)
def test_reduced_presentations_same_count(full, reduced, entry):
    assert count_colorings(P[full], entry.quandle) == count_colorings(P[reduced], entry.quandle)


def test_coloring_counts():
    assert count_colorings(P["L4a1{0}"], R6) == 12
    assert count_colorings(P["L5a1{1}"], R6) == 12
    assert count_colorings(P["L2a1{0}"], X) == 13
    assert count_colorings(P["L4a1{1}"], X) == 13
    ix = FiniteMagma.from_elements(list(enumerate_mod2(X)))
    assert ix.is_quandle
    assert count_colorings(P["L2a1{0}"], ix) == 68
    assert count_colorings(P["L4a1{1}"], ix) == 76


def test_magma_without_right_division():
    m = FiniteMagma(((0, 0), (0, 0)))
    p = parse_presentation("quandle { gens: a, b; rel: a\\b = a; }")
    with pytest.raises(ValueError):
        count_colorings(p, m)


@pytest.mark.parametrize("pair,target,size", [(("L4a1{0}", "L5a1{1}"), R6, 12), (("L2a1{0}", "L4a1{1}"), X, 13)])
def test_hom_quandles_isomorphic(pair, target, size):
    h1, h2 = (hom_quandle(P[name], target) for name in pair)
    assert h1.order == h2.order == size
    assert is_medial(h1.quandle) and is_medial(h2.quandle)
    f = hom_isomorphism(h1, h2)
    assert f is not None
    t1, t2 = h1.quandle.table, h2.quandle.table
    assert all(f[t1[a][b]] == t2[f[a]][f[b]] for a in range(size) for b in range(size))


def test_hom_quandle_needs_medial_target():
    nonmedial = next(e.quandle for e in ENTRIES if not is_medial(e.quandle))
    with pytest.raises(ValueError):
        hom_quandle(P["L2a1{0}"], nonmedial)


def test_ring_relations_reject_inverse():
    p = parse_presentation("quandle { gens: a, b; rel: a\\b = a; }")
    e = RingElement(R6, INTEGERS, (1, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        check_ring_relations(p, {"a": e, "b": e})


@pytest.fixture(scope="module")
def report():
    return enhancement_report(P["L4a1{0}"], P["L5a1{1}"], covering_family_r2n(3), (-1, 0, 1))


def test_enhancement_structure(report):
    assert len(report.values) - 1 == 105
    assert report.none_satisfy(0, "cross-family", 0)
    assert report.none_satisfy(1, "cross-family", 0)
    assert report.all_satisfy(0, "same-family")
    assert report.all_satisfy(1, "same-family")
    assert report.all_satisfy(1, "zero-first")
    assert report.none_satisfy(0, "zero-first")
    s = report.summary()
    assert s["presentations"]["L4a1{0}"]["same-family"]["pairs"] == report.pairs("same-family")


def test_batch_evaluation_matches_ring_arithmetic(report):
    rng = random.Random(7)
    n = len(report.values)
    for _ in range(300):
        i, j = rng.randrange(n), rng.randrange(n)
        v, w = (RingElement(R6, INTEGERS, report.values[k]) for k in (i, j))
        for which, name in enumerate(("L4a1{0}", "L5a1{1}")):
            g1, g2 = P[name].generators
            expect = check_ring_relations(P[name], {g1: v, g2: w})
            assert bool(report._sat(which, None)[i, j]) == expect


def test_enhancement_needs_two_generators():
    with pytest.raises(ValueError):
        enhancement_report(P["L4a1{0}:5"], P["L5a1{1}"], covering_family_r2n(3))
