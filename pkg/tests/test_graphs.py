import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilclean.graphs import (
    build_graph,
    build_idempotent_divisor_graph,
    build_nil_clean_graph,
    build_nilpotent_divisor_graph,
    build_zero_divisor_graph,
    to_dot,
    to_json,
)
from nilclean.rings import make_ring


def edge_set(*pairs):
    return {frozenset(map(str, p)) for p in pairs}


def brute_nil_clean_graph(n):
    """Vertices and edges of G_N(Z_n) straight from the definition."""
    idem = {x for x in range(n) if x * x % n == x}
    nil = {x for x in range(n) if pow(x, n, n) == 0}
    nc = {(e + m) % n for e in idem for m in nil}
    verts = {x for x in range(1, n) if any(y not in (0, x) and x * y % n in nc for y in range(n))}
    edges = {frozenset((str(x), str(y))) for x in verts for y in verts if x < y and x * y % n in nc}
    return {str(v) for v in verts}, edges


def test_figure1_z6():
    g = build_nil_clean_graph(make_ring("Z6"))
    verts, edges = brute_nil_clean_graph(6)
    assert set(g.labels) == verts == {"1", "2", "3", "4", "5"}
    assert g.edge_labels() == edges == edge_set((1, 3), (1, 4), (3, 4), (2, 3), (2, 5), (3, 5))
    assert g.size == 6


def test_z5_single_edge():
    g = build_nil_clean_graph(make_ring("Z5"))
    assert g.labels == ("2", "3")
    assert g.edge_labels() == edge_set((2, 3))
    assert "4" not in g  # its only inverse is itself


def test_z2_empty():
    g = build_nil_clean_graph(make_ring("Z2"))
    assert g.order == 0 and g.size == 0


@pytest.mark.parametrize("n", list(range(2, 41)))
def test_nil_clean_graph_matches_definition(n):
    g = build_nil_clean_graph(make_ring(f"Z{n}"))
    verts, edges = brute_nil_clean_graph(n)
    assert set(g.labels) == verts
    assert g.edge_labels() == edges


def test_nilpotent_divisor_examples():
    g = build_nilpotent_divisor_graph(make_ring("Z6"))
    assert g.labels == ("2", "3", "4")
    assert g.edge_labels() == edge_set((2, 3), (3, 4))
    # Nil(Z4) = {0, 2}; 1*2 = 3*2 = 2 is nilpotent, so 2 is not isolated
    nil4 = {x for x in range(4) if pow(x, 4, 4) == 0}
    oracle = {frozenset((str(x), str(y))) for x in range(1, 4) for y in range(x + 1, 4) if x * y % 4 in nil4}
    g = build_nilpotent_divisor_graph(make_ring("Z4"))
    assert g.labels == ("1", "2", "3")
    assert g.edge_labels() == oracle == edge_set((1, 2), (2, 3))
    # 2 qualifies through y = x alone in the zero-divisor graph
    g = build_zero_divisor_graph(make_ring("Z4"))
    assert g.labels == ("2",) and g.size == 0
    for text in ("Z7", "GF2^2", "GF3^2"):
        assert build_nilpotent_divisor_graph(make_ring(text)).order == 0


def test_zero_divisor_examples():
    g = build_zero_divisor_graph(make_ring("Z6"))
    assert g.labels == ("2", "3", "4")
    assert g.edge_labels() == edge_set((2, 3), (3, 4))
    g = build_zero_divisor_graph(make_ring("Z10"))
    assert g.edge_labels() == edge_set((2, 5), (4, 5), (6, 5), (8, 5))
    for text in ("Z7", "GF2^3"):
        g = build_zero_divisor_graph(make_ring(text))
        assert g.order == 0 and g.size == 0


def test_idempotent_divisor_examples():
    r = make_ring("Z6")
    g = build_idempotent_divisor_graph(r, r.element(1))
    assert {"1", "5"} <= set(g.labels)
    assert g.size == 0  # 1*1 and 5*5 are loops
    g = build_idempotent_divisor_graph(r, r.element(4))
    assert frozenset(("2", "5")) in g.edge_labels()
    assert frozenset(("1", "4")) in g.edge_labels()


def test_idempotent_divisor_e_zero_contains_zero_divisor_graph():
    for text in ("Z6", "Z12", "Z2xZ3", "Z4xZ2"):
        r = make_ring(text)
        g0 = build_idempotent_divisor_graph(r, r.zero)
        zd = build_zero_divisor_graph(r)
        assert r.render(r.zero) in g0
        assert zd.edge_labels() <= g0.edge_labels()
        nonzero = {frozenset(e) for e in g0.edge_labels() if r.render(r.zero) not in e}
        assert nonzero == zd.edge_labels()


def test_idempotent_divisor_rejects_non_idempotent():
    r = make_ring("Z6")
    with pytest.raises(ValueError, match="not idempotent"):
        build_idempotent_divisor_graph(r, r.element(2))
    with pytest.raises(ValueError):
        build_graph(r, "idem:2")


def test_build_graph_unknown_kind():
    with pytest.raises(ValueError, match="unknown graph kind"):
        build_graph(make_ring("Z6"), "beck")


RINGS = ["Z4", "Z6", "Z8", "Z9", "Z12", "Z18", "Z30", "Z36", "Z2xZ2", "Z2xZ3", "Z4xZ2", "GF2^2", "GF3^2", "Z3xGF2^2"]


@pytest.mark.parametrize("text", RINGS)
def test_generalisation_and_inclusions(text):
    r = make_ring(text)
    gn = build_nil_clean_graph(r).edge_labels()
    nil = build_nilpotent_divisor_graph(r).edge_labels()
    zd = build_zero_divisor_graph(r).edge_labels()
    assert nil <= gn
    assert zd <= nil
    zero = r.render(r.zero)
    for e in r.idempotents:
        idem = build_idempotent_divisor_graph(r, e).edge_labels()
        assert {x for x in idem if zero not in x} <= gn


@pytest.mark.parametrize("text", ["Z3", "Z5", "Z7", "Z11", "Z13", "GF2^2", "GF2^3", "GF3^2", "GF5^2"])
def test_field_graph_is_inverse_matching(text):
    r = make_ring(text)
    g = build_nil_clean_graph(r)
    expected = {
        frozenset((r.render(x), r.render(r.inverse(x))))
        for x in r.units
        if r.inverse(x) != x
    }
    assert g.edge_labels() == expected
    assert all(len(a) == 1 for a in g.adjacency)


@settings(max_examples=40, deadline=None)
@given(st.one_of(st.integers(2, 80).map(lambda n: f"Z{n}"), st.sampled_from(RINGS)))
def test_graph_is_simple_and_sorted(text):
    r = make_ring(text)
    for kind in ("nilclean", "nilpotent", "zerodiv"):
        g = build_graph(r, kind)
        for i, nbrs in enumerate(g.adjacency):
            assert i not in nbrs
            assert list(nbrs) == sorted(set(nbrs))
            for j in nbrs:
                assert i in g.adjacency[j]
        idx = [r.index[x] for x in g.elements]
        assert idx == sorted(idx)
        assert len(set(g.labels)) == len(g.labels)
        if kind == "nilclean":
            assert all(g.adjacency)


def test_dot_export_z6():
    g = build_nil_clean_graph(make_ring("Z6"))
    text = to_dot(g)
    assert text.startswith("graph G {\n")
    assert text.endswith("}\n")
    assert '  "1" -- "3";' in text
    edges = [ln for ln in text.splitlines() if "--" in ln]
    assert len(edges) == 6
    assert text == to_dot(build_nil_clean_graph(make_ring("Z6")))


def test_json_export():
    g = build_zero_divisor_graph(make_ring("Z6"))
    data = json.loads(to_json(g))
    assert data["ring"] == "Z6" and data["kind"] == "zero_divisor"
    assert [[data["vertices"][i], data["vertices"][j]] for i, j in data["edges"]] == [["2", "3"], ["3", "4"]]
    assert all(i < j for i, j in data["edges"])
    empty = json.loads(to_json(build_nil_clean_graph(make_ring("Z2"))))
    assert empty["vertices"] == [] and empty["edges"] == []
