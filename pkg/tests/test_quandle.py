import itertools
import json

import pytest
from hypothesis import given, strategies as st

from quandlering.catalog import catalog_entries, get_entry, SUPPORTED_ORDERS
from quandlering.quandle import (
    AxiomViolation,
    QuandleMap,
    conj_quandle,
    core_quandle,
    cyclic_group_table,
    dihedral_quandle,
    format_table,
    is_commutative,
    is_covering,
    is_homomorphism,
    is_involutory,
    is_isomorphic,
    is_latin,
    is_medial,
    load_quandle,
    orbits,
    parse_table_text,
    quandle_from_json,
    quandle_to_json,
    symmetric_group_table,
    trivial_quandle,
    validate_table,
)

ENTRIES = catalog_entries()


def relabel(q, perm):
    """Table of q transported along the bijection x -> perm[x]."""
    n = q.order
    t = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            t[perm[x]][perm[y]] = perm[q.table[x][y]]
    return validate_table(t)


def brute_isomorphic(q1, q2):
    n = q1.order
    return any(all(p[q1.table[x][y]] == q2.table[p[x]][p[y]] for x in range(n) for y in range(n))
               for p in itertools.permutations(range(n)))


def test_dihedral_rule():
    r5 = dihedral_quandle(5)
    assert r5.op(1, 3) == 0
    assert r5.name == "R5"
    assert is_latin(r5) and is_medial(r5) and is_involutory(r5)
    assert not is_latin(dihedral_quandle(4))


def test_trivial_quandle():
    t = trivial_quandle(4)
    assert all(t.op(x, y) == x for x in range(4) for y in range(4))
    assert orbits(t) == [[0], [1], [2], [3]]


def test_catalog_counts_and_validity():
    counts = {n: len(catalog_entries(n)) for n in SUPPORTED_ORDERS}
    assert counts == {3: 3, 4: 7, 5: 22}
    for e in ENTRIES:
        validate_table(e.quandle.table)


@pytest.mark.parametrize("order", [3, 4, 5])
def test_catalog_rows_pairwise_non_isomorphic(order):
    qs = [e.quandle for e in catalog_entries(order)]
    for a, b in itertools.combinations(qs, 2):
        assert is_isomorphic(a, b) is None


def test_isomorphism_agrees_with_brute_force_order_4():
    qs = [e.quandle for e in catalog_entries(4)]
    for a, b in itertools.product(qs, repeat=2):
        assert (is_isomorphic(a, b) is not None) == brute_isomorphic(a, b)


@given(st.sampled_from(ENTRIES), st.randoms(use_true_random=False))
def test_relabelled_copy_is_isomorphic(entry, rnd):
    q = entry.quandle
    perm = list(range(q.order))
    rnd.shuffle(perm)
    f = is_isomorphic(q, relabel(q, perm))
    assert f is not None
    assert is_homomorphism(QuandleMap(q, relabel(q, perm), f))


def test_axiom_violations_are_named():
    with pytest.raises(AxiomViolation) as exc:
        validate_table([[1, 1], [0, 0]])
    assert exc.value.axiom == "idempotency"
    with pytest.raises(AxiomViolation) as exc:
        validate_table([[0, 0, 0], [1, 1, 1], [1, 2, 2]])
    assert exc.value.axiom in ("idempotency", "right-bijectivity")
    with pytest.raises(ValueError):
        validate_table([[0, 1], [0]])


def test_transposed_input_is_flagged():
    # a non-commutative quandle entered column-major
    q = get_entry("Q3.2").quandle
    if is_commutative(q):
        pytest.skip("row is commutative")
    transposed = [list(col) for col in zip(*q.table)]
    with pytest.raises(AxiomViolation) as exc:
        validate_table(transposed)
    assert exc.value.transpose_valid


def test_group_constructions():
    assert core_quandle(cyclic_group_table(5)).table == dihedral_quandle(5).table
    c = conj_quandle(symmetric_group_table(3))
    assert c.order == 6
    # orbits are the conjugacy classes: identity, 3-cycles, transpositions
    sizes = sorted(len(o) for o in orbits(c))
    assert sizes == [1, 2, 3]
    with pytest.raises(ValueError):
        conj_quandle([[0, 1], [0, 1]])


def test_covering_r6_to_r3():
    r6, r3 = dihedral_quandle(6), dihedral_quandle(3)
    f = QuandleMap(r6, r3, [x % 3 for x in range(6)])
    assert is_homomorphism(f) and is_covering(f)
    g = QuandleMap(r3, trivial_quandle(1), [0, 0, 0])
    assert is_homomorphism(g) and not is_covering(g)


def test_text_and_json_round_trip(tmp_path):
    q = get_entry("Q4.3").quandle
    text = f"{q.order}\n{format_table(q.table)}\n"
    assert parse_table_text(text).table == q.table
    assert quandle_from_json(quandle_to_json(q)).table == q.table
    p = tmp_path / "q.json"
    p.write_text(json.dumps(quandle_to_json(q)))
    assert load_quandle(p).table == q.table
    p = tmp_path / "q.txt"
    p.write_text(text)
    assert load_quandle(p).table == q.table


def test_bad_text_input():
    with pytest.raises(ValueError):
        parse_table_text("3\n1 1 1\n2 2 2\n")
    with pytest.raises(ValueError):
        parse_table_text("2\n1 x\n2 2\n")
