import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilclean import invariants as inv
from nilclean.graphs import build_nil_clean_graph, from_edges
from nilclean.oracles import brute_force_clique_number, brute_force_dominating_sets
from nilclean.rings import make_ring


def gn(text):
    return build_nil_clean_graph(make_ring(text))


def labelled(g, sets):
    return [{g.labels[i] for i in s} for s in sets]


def complete(n):
    return from_edges(n, itertools.combinations(range(n), 2))


# degree / neighbourhood


def test_degree_examples():
    g = gn("Z10")
    assert inv.neighborhood(g, "1") == {"5", "6"}
    assert inv.degree(g, "5") == 8
    assert inv.degree(gn("Z6"), "3") == 4


def test_unknown_vertex_rejected():
    with pytest.raises(KeyError):
        inv.degree(gn("Z10"), "0")
    with pytest.raises(KeyError):
        inv.neighborhood(gn("Z5"), "4")


# distance / diameter


def test_diameter_examples():
    assert inv.diameter(gn("Z10")) == 2
    assert inv.diameter(gn("Z15")) == 3
    assert inv.diameter(gn("Z7")) == inv.INF
    assert inv.diameter(gn("Z2")) is None
    assert inv.diameter(from_edges(1, [])) is None


def test_distance():
    g = gn("Z7")
    assert inv.distance(g, "2", "4") == 1
    assert inv.distance(g, "2", "3") == inv.INF
    assert inv.distance(g, "2", "2") == 0


# girth


def test_girth_examples():
    assert inv.girth(gn("Z6")) == 3
    assert inv.girth(gn("Z5")) == inv.INF
    assert inv.girth(from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])) == 4
    assert inv.girth(from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])) == 6
    assert inv.girth(from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])) == inv.INF


# clique


def test_clique_examples():
    assert inv.clique_number(gn("Z10")) == 3
    assert inv.clique_number(gn("Z15")) == 3
    assert inv.clique_number(from_edges(0, [])) == 0
    assert inv.clique_number(from_edges(4, [])) == 1
    assert inv.clique_number(complete(7)) == 7


def test_maximum_clique_is_a_clique():
    for text in ("Z6", "Z12", "Z30", "Z36", "Z60"):
        g = gn(text)
        c = inv.maximum_clique(g)
        assert len(c) == inv.clique_number(g)
        for a, b in itertools.combinations(c, 2):
            assert b in g.adjacency[a]


# domination


def test_domination_examples():
    g = gn("Z10")
    gamma, sets = inv.minimum_dominating_sets(g)
    assert gamma == 1 and labelled(g, sets) == [{"5"}]
    g = gn("Z15")
    gamma, sets = inv.minimum_dominating_sets(g)
    assert gamma == 2 and labelled(g, sets) == [{"5", "10"}]
    for n in range(1, 8):
        gamma, sets = inv.minimum_dominating_sets(complete(n))
        assert gamma == 1 and len(sets) == n


def test_domination_set_cap():
    # 20 disjoint edges: 2**20 minimum dominating sets, gamma still exact
    g = from_edges(40, [(2 * i, 2 * i + 1) for i in range(20)])
    gamma, sets = inv.minimum_dominating_sets(g)
    assert gamma == 20 and sets is None
    assert inv.dominating_set_count(g) == 2**20


def test_budget_exceeded():
    with pytest.raises(inv.SearchBudgetExceeded):
        inv.clique_number(gn("Z60"), budget=1)


# shape predicates


def test_shape_examples():
    assert inv.is_star(gn("Z5"))
    assert not inv.is_star(gn("Z5"), min_leaves=2)
    assert inv.is_complete(gn("Z4"))
    z7 = inv.shape_predicates(gn("Z7"))
    assert z7["is_bipartite"] and not z7["is_star"]
    assert inv.is_complete(gn("Z2"))
    assert inv.is_star(from_edges(4, [(0, 1), (0, 2), (0, 3)]), min_leaves=2)
    assert not inv.is_bipartite(gn("Z6"))


# report


def test_report_json_rendering():
    rep = inv.invariant_report(gn("Z7"))
    data = json.loads(rep.to_json())
    assert data["diameter"] == "inf" and data["girth"] == "inf"
    assert list(data) == [
        "order", "size", "degree_map", "components", "diameter", "girth", "clique_number",
        "min_dominating_sets", "domination_number", "bipartite", "complete", "star",
    ]
    empty = json.loads(inv.invariant_report(gn("Z3")).to_json())
    assert empty["diameter"] is None and empty["clique_number"] == 0


def test_report_z10():
    rep = inv.invariant_report(gn("Z10")).to_dict()
    assert (rep["clique_number"], rep["diameter"], rep["girth"], rep["domination_number"]) == (3, 2, 3, 1)
    assert rep["min_dominating_sets"] == [["5"]]
    assert sum(rep["degree_map"].values()) == 2 * rep["size"]


# oracles and properties

random_graphs = st.integers(0, 14).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))), max_size=40),
    )
).map(lambda t: from_edges(t[0], [(a, b) for a, b in t[1] if a != b]))


@settings(max_examples=200, deadline=None)
@given(random_graphs)
def test_clique_matches_oracle(g):
    assert inv.clique_number(g) == brute_force_clique_number(g)
    assert inv.clique_number(g) <= max((len(a) for a in g.adjacency), default=-1) + 1


@settings(max_examples=200, deadline=None)
@given(random_graphs)
def test_domination_matches_oracle(g):
    gamma, sets = inv.minimum_dominating_sets(g)
    assert (gamma, sets) == brute_force_dominating_sets(g)
    assert gamma <= g.order
    for s in sets:
        assert inv.is_dominating(g, s)


@settings(max_examples=150, deadline=None)
@given(random_graphs)
def test_metric_properties(g):
    diam = inv.diameter(g)
    dist = {(x, y): inv.distance(g, x, y) for x in g.labels for y in g.labels}
    for (x, y), d in dist.items():
        assert d == dist[(y, x)]
        if x != y and diam is not None:
            assert diam >= d
    for x, y, z in itertools.islice(itertools.product(g.labels, repeat=3), 500):
        assert dist[(x, z)] <= dist[(x, y)] + dist[(y, z)]
    if diam is not None and diam != inv.INF:
        assert inv.is_connected(g) and g.order >= 2


@settings(max_examples=150, deadline=None)
@given(random_graphs)
def test_girth_properties(g):
    gr = inv.girth(g)
    triangle = any(set(g.adjacency[u]) & set(g.adjacency[w]) for u in range(g.order) for w in g.adjacency[u])
    assert (gr == 3) == triangle
    acyclic = g.size == g.order - len(inv.connected_components(g))
    assert (gr == inv.INF) == acyclic
    if inv.is_bipartite(g):
        assert gr != 3


@pytest.mark.parametrize("n", [4, 6, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21])
def test_ring_graphs_match_oracles(n):
    g = gn(f"Z{n}")
    assert g.order <= 20
    assert inv.clique_number(g) == brute_force_clique_number(g)
    assert inv.minimum_dominating_sets(g) == brute_force_dominating_sets(g)
