import json
import random
from collections import Counter
from fractions import Fraction

import networkx as nx
import pytest

from bicyclic_inertia import WeightedGraph, adjacency_matrix, congruence_inertia, find_pendant_twins
from bicyclic_inertia.extremal import THETA101
from bicyclic_inertia.lab.canon import brute_force_bicyclic, canonical_form
from bicyclic_inertia.lab.census import census, format_report, json_report, summarize, underlying_graphs
from bicyclic_inertia.lab.conditions import derive_condition, validate
from bicyclic_inertia.lab.enumeration import enumerate_bicyclic
from bicyclic_inertia.lab.predicates import PredicateError, parse_predicate
from bicyclic_inertia.lab.transforms import path_to_star, star_merge, star_shift
from bicyclic_inertia.structure import classify

from conftest import random_connected_graph

EXPECTED_COUNTS = {4: 1, 5: 5, 6: 19, 7: 67, 8: 236, 9: 797, 10: 2678}


def inertia(g):
    return congruence_inertia(adjacency_matrix(g))


# --- canonical form ---------------------------------------------------------

def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(4)
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(2, 9))
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_canonical_form_separates_non_isomorphic():
    rng = random.Random(6)
    graphs = [random_connected_graph(rng, 7, extra_p=0.15) for _ in range(120)]
    for g, h in zip(graphs, graphs[1:]):
        same = canonical_form(g) == canonical_form(h)
        iso = nx.is_isomorphic(nx.Graph([(u, v) for u, v, _ in g.edges]), nx.Graph([(u, v) for u, v, _ in h.edges]))
        assert same == iso


# --- enumeration ------------------------------------------------------------

def test_enumeration_small_examples():
    (g4,) = enumerate_bicyclic(4)
    assert classify(g4)[0].label == "theta(1,0,1)"
    labels = Counter((classify(g)[0].label, classify(g)[1]) for g in enumerate_bicyclic(5))
    assert labels == Counter({("theta(1,1,1)", False): 1, ("theta(1,0,2)", False): 1,
                              ("infinity(3,1,3)", False): 1, ("theta(1,0,1)", True): 2})


@pytest.mark.parametrize("n", [4, 5, 6])
def test_enumeration_matches_brute_force(n):
    assert {canonical_form(g) for g in enumerate_bicyclic(n)} == brute_force_bicyclic(n)


def test_enumeration_matches_graph_atlas():
    atlas = Counter(g.number_of_nodes() for g in nx.graph_atlas_g()
                    if g.number_of_nodes() >= 4 and g.number_of_edges() == g.number_of_nodes() + 1
                    and nx.is_connected(g))
    for n in range(4, 8):
        assert len(enumerate_bicyclic(n)) == atlas[n]


@pytest.mark.parametrize("n", range(4, 11))
def test_enumeration_counts_and_uniqueness(n):
    graphs = enumerate_bicyclic(n)
    assert len(graphs) == EXPECTED_COUNTS[n]
    assert len({canonical_form(g) for g in graphs}) == len(graphs)
    assert all(g.m == n + 1 and g.n == n for g in graphs)


@pytest.mark.parametrize("n", [3, 11])
def test_enumeration_range(n):
    with pytest.raises(ValueError):
        enumerate_bicyclic(n)


# --- predicates ---------------------------------------------------------------

def test_predicates():
    p = parse_predicate("i+=1, rank<=4, kind=theta, pendants=no")
    assert p({"pos": 1, "rank": 3, "kind": "theta", "pendants": False})
    assert not p({"pos": 1, "rank": 3, "kind": "theta", "pendants": True})
    assert parse_predicate("all")({})
    for bad in ("i+=x", "color=red", "pendants>1", "i+"):
        with pytest.raises(PredicateError):
            parse_predicate(bad)


# --- census -------------------------------------------------------------------

def test_census_rank2_example():
    recs = census(5, [1], "rank=2")
    assert len(recs) == 1 and recs[0].base == "theta(1,1,1)" and not recs[0].pendants


def test_census_index1_example():
    recs = census(4, [1, 2], "i+=1")
    all4 = census(4, [1, 2])
    assert recs and all(r.base == "theta(1,0,1)" for r in recs)
    want = [r for r in all4 if THETA101(dict(r.weights))]
    assert recs == want


def test_census_infinity_with_pendants_example():
    recs = census(6, [1], "i+>=3, kind=infinity, pendants=yes")
    assert recs and all(r.inertia.pos >= 3 for r in recs)


def test_census_record_invariants_and_determinism():
    recs = census(6, [1, 2])
    for r in recs:
        assert sum(r.inertia) == r.n and r.rank == r.inertia.pos + r.inertia.neg
        g = WeightedGraph.from_edges(r.n, r.graph)
        assert classify(g)[1] == r.pendants
    assert format_report(recs) == format_report(census(6, [2, 1], workers=2))


def test_census_tree_weight_independent():
    ref = census(7, [1, 2])
    heavy = census(7, [1, 2], tree_weight=7)
    assert [(r.graph, r.weights, r.inertia) for r in ref] == [(r.graph, r.weights, r.inertia) for r in heavy]


def test_census_twin_modes():
    every = underlying_graphs(7, "all")
    free = underlying_graphs(7, "free")
    reduced = underlying_graphs(7, "reduced")
    assert all(find_pendant_twins(g) is None for g in free + reduced)
    assert len(free) < len(every)
    assert {canonical_form(g) for g in free if g.n == 7} <= {canonical_form(g) for g in reduced}


def test_census_errors():
    with pytest.raises(ValueError):
        census(5, [])
    with pytest.raises(ValueError):
        census(5, [0, 1])
    with pytest.raises(ValueError):
        census(11, [1])


def test_reports():
    recs = census(5, [1])
    text = format_report(recs, "n=5")
    assert text.startswith("# census-format 1\n# n=5\n")
    assert "# records=5 graphs=5" in text
    doc = json.loads(json_report(recs, {"n": 5}))
    assert doc["format_version"] == 1 and len(doc["records"]) == 5
    assert set(summarize(recs)) == {(r.base, r.pendants) for r in recs}


# --- transforms -----------------------------------------------------------------

def monotone(pair):
    a, b = (inertia(g) for g in pair)
    return a.pos >= b.pos and a.neg >= b.neg


def test_transform_examples():
    k1 = WeightedGraph(1)
    p2 = WeightedGraph.from_edges(2, [(0, 1)])
    c3 = WeightedGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    c4 = WeightedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    g1, g2 = star_shift(k1, 0, [1])
    assert canonical_form(g1) == canonical_form(g2)
    assert monotone(star_shift(p2, 0, [1, 1])) and monotone(star_shift(c3, 0, [1]))
    g1, g2 = star_merge(p2, 0, 1, 1, 1)
    assert inertia(g1).pos == 2 and inertia(g2).pos == 1
    assert star_merge(p2, 0, 1, 0, 0) == (p2, p2)
    assert monotone(star_merge(c4, 0, 1, 1, 1))
    gp, gd = path_to_star(k1, k1, 0, 0, [1, 1])
    assert inertia(gp).pos == 1 and monotone((gp, gd))
    assert monotone(path_to_star(p2, p2, 0, 1, [1, 1]))
    assert monotone(path_to_star(c3, k1, 0, 0, [1, 2, 3]))
    with pytest.raises(ValueError):
        path_to_star(k1, k1, 0, 0, [1])
    with pytest.raises(ValueError):
        star_merge(p2, 0, 0, 1, 1)
    with pytest.raises(ValueError):
        star_merge(p2, 0, 1, 0, 1)
    with pytest.raises(ValueError):
        star_shift(p2, 5, [1])


def _rand_weights(rng, k):
    return [rng.choice((Fraction(1), Fraction(1, 2), Fraction(2), Fraction(3))) for _ in range(k)]


def test_transforms_random():
    rng = random.Random(21)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(1, 6))
        h = random_connected_graph(rng, rng.randint(1, 5))
        assert monotone(star_shift(g, rng.randrange(g.n), _rand_weights(rng, rng.randint(1, 4))))
        if g.n >= 2:
            u1, u2 = rng.sample(range(g.n), 2)
            l, t = rng.randint(1, 3), rng.randint(0, 3)
            assert monotone(star_merge(g, u1, u2, l, t, _rand_weights(rng, l), _rand_weights(rng, t)))
        assert monotone(path_to_star(g, h, rng.randrange(g.n), rng.randrange(h.n),
                                     _rand_weights(rng, rng.randint(2, 5))))


# --- condition derivation ----------------------------------------------------------

def test_derive_examples():
    rep = derive_condition(("theta", 1, 0, 1), "i+=1", (1, 2, 3))
    assert [c.text for c in rep.agreeing] == ["a1c2=a2c1"]
    rep = derive_condition(("theta", 1, 1, 1), "rank=2", (1, 2))
    texts = [c.text for c in rep.agreeing]
    assert "a1b2=a2b1 and a1c2=a2c1" in texts and all(" and " in t for t in texts)


def test_derive_theta_202_reports_printed_variants():
    rep = derive_condition(("theta", 2, 0, 2), "i+=2", (1, 2, 3))
    assert rep.printed_agreeing() == ["Table 1 (i+=2)"]
    assert any(v.startswith("disagrees") for _, _, v in rep.printed)
    assert rep.agreeing and all(validate(c, ("theta", 2, 0, 2), "i+=2", (1, 2, 5)) == 0 for c in rep.agreeing)


def test_derive_theta_102_flags_undefined_symbol():
    rep = derive_condition(("theta", 1, 0, 2), "i-=2", (1, 2, 3))
    assert all(v.startswith("undefined (b2") for _, _, v in rep.printed)
    assert [c.text for c in rep.agreeing] == ["b1c2<=c1c3"]


def test_star_merge_needs_a_pendant_at_u1():
    # moving a pendant onto a bare vertex can raise an index: the l = 0 case is excluded
    g0 = WeightedGraph(3, ((0, 2, Fraction(3)), (1, 2, Fraction(1, 2))))
    before, after = star_merge(g0, 0, 2, 0, 1, allow_empty_first=True)
    assert inertia(before).pos < inertia(after).pos
