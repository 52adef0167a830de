from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph, small_graphs
from _oracles import (
    decode_graph6_bits,
    edge_filter_subgraph,
    floyd_warshall,
    mutually_induced_scan,
    union_find_components,
)
from indminor.graphs import (
    Graph,
    ParseError,
    are_mutually_induced,
    complete_graph,
    cycle_graph,
    disjoint_union,
    encode_edgelist,
    encode_graph6,
    generate,
    gnp_random_graph,
    is_induced_path,
    parse_edgelist,
    parse_graph,
    parse_graph6,
    path_graph,
    star_graph,
)
from indminor.smallgraphs import all_graphs_up_to


def test_neighbors_basic():
    assert complete_graph(3).neighbors(0) == {1, 2}
    assert Graph(3).neighbors(0) == set()
    assert path_graph(4).neighbors(1) == {0, 2}
    with pytest.raises(ValueError):
        path_graph(4).neighbors(4)


def test_construction_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(-1)


def test_closed_neighborhood_of_set():
    p4 = path_graph(4)
    assert p4.closed_neighborhood_of_set({1}) == {0, 1, 2}
    assert p4.closed_neighborhood_of_set(set()) == set()
    assert complete_graph(4).closed_neighborhood_of_set({0}) == {0, 1, 2, 3}
    with pytest.raises(ValueError):
        p4.closed_neighborhood_of_set({9})


def test_induced_subgraph_examples():
    c5 = cycle_graph(5)
    sub, old = c5.induced_subgraph([0, 1, 2])
    assert old == (0, 1, 2)
    assert sub.edges() == [(0, 1), (1, 2)]
    k3, _ = complete_graph(5).induced_subgraph([1, 3, 4])
    assert k3.edge_count() == 3


def test_induced_subgraph_matches_edge_filter():
    for seed in range(40):
        g = random_graph(8, 0.4, seed)
        s = [v for v in range(8) if (seed >> v) & 1]
        sub, old = g.induced_subgraph(s)
        assert list(old) == sorted(s)
        assert set(sub.edges()) == edge_filter_subgraph(g, s)


def test_contract_edge_examples():
    p2 = path_graph(3).contract_edge(0, 1)
    assert (p2.n, p2.edges()) == (2, [(0, 1)])
    k2 = complete_graph(3).contract_edge(1, 2)
    assert (k2.n, k2.edge_count()) == (2, 1)
    c4 = cycle_graph(5).contract_edge(2, 3)
    assert c4.n == 4 and c4.edge_count() == 4
    assert all(c4.degree(v) == 2 for v in range(4))
    assert c4.is_connected_mask(c4.full_mask())
    with pytest.raises(ValueError):
        path_graph(4).contract_edge(0, 2)


@settings(deadline=None, max_examples=60)
@given(small_graphs(max_n=8, min_n=2), st.integers(0, 10 ** 6))
def test_contract_edge_invariants(g, pick):
    edges = g.edges()
    if not edges:
        return
    u, v = edges[pick % len(edges)]
    h = g.contract_edge(u, v)
    assert h.n == g.n - 1
    assert all(not h.has_edge(w, w) for w in range(h.n))


def test_connected_components_examples():
    g = Graph(4, [(0, 1), (2, 3)])
    assert g.connected_components() == [frozenset({0, 1}), frozenset({2, 3})]
    assert len(cycle_graph(6).connected_components()) == 1


def test_connected_components_match_union_find():
    for seed in range(40):
        g = random_graph(10, 0.18, seed)
        assert g.connected_components() == union_find_components(g)


def test_shortest_path_examples():
    p5 = path_graph(5)
    assert p5.shortest_path(0, 4) == (0, 1, 2, 3, 4)
    assert Graph(4, [(0, 1)]).shortest_path(0, 3) is None
    assert p5.shortest_path(2, 2) == (2,)


def test_shortest_path_lexicographic_tiebreak():
    g = Graph(4, [(0, 1), (1, 3), (0, 2), (2, 3)])
    assert g.shortest_path(0, 3) == (0, 1, 3)


def test_shortest_path_lengths_match_floyd_warshall():
    for seed in range(30):
        g = random_graph(10, 0.25, 100 + seed)
        dist = floyd_warshall(g)
        for a in range(g.n):
            for b in range(g.n):
                p = g.shortest_path(a, b)
                if dist[a][b] == float("inf"):
                    assert p is None
                else:
                    assert p is not None and len(p) == dist[a][b] + 1
                    assert is_induced_path(g, p)


def test_shortest_paths_are_paths():
    for seed in range(20):
        g = random_graph(9, 0.3, 500 + seed)
        for a in range(g.n):
            p = g.shortest_path(a, (a + 3) % g.n)
            if p is not None:
                assert all(g.has_edge(u, v) for u, v in zip(p, p[1:]))
                assert len(set(p)) == len(p)


def test_are_mutually_induced_examples():
    g = Graph(4, [(0, 1), (2, 3)])
    assert are_mutually_induced(g, (0, 1), (2, 3))
    g2 = path_graph(5)
    assert not are_mutually_induced(g2, (0, 1), (1, 2))
    with pytest.raises(ValueError):
        are_mutually_induced(g2, (0, 2), (3, 4))


def test_are_mutually_induced_matches_scan_and_is_symmetric():
    found = 0
    for seed in range(60):
        g = random_graph(9, 0.2, 900 + seed)
        paths = []
        for a in range(g.n):
            p = g.shortest_path(a, (a + 5) % g.n)
            if p is not None and is_induced_path(g, p):
                paths.append(p)
        for i in range(len(paths)):
            for j in range(i + 1, len(paths)):
                p, q = paths[i], paths[j]
                got = are_mutually_induced(g, p, q)
                assert got == mutually_induced_scan(g, p, q)
                assert got == are_mutually_induced(g, q, p)
                found += 1
    assert found > 50


# -- formats ---------------------------------------------------------------------


def test_graph6_known_values():
    n, edges = decode_graph6_bits("D?{")
    g = parse_graph6("D?{")
    assert g.n == n == 5
    assert set(g.edges()) == edges
    single = parse_graph6("@")
    assert (single.n, single.edge_count()) == (1, 0)
    assert parse_graph6(">>graph6<<D?{") == g


def test_graph6_roundtrip_small_classes():
    for g in all_graphs_up_to(6):
        line = encode_graph6(g)
        assert parse_graph6(line) == g
        got_n, got_edges = decode_graph6_bits(line)
        assert got_n == g.n and got_edges == set(g.edges())


def test_graph6_roundtrip_random_and_long_form():
    for seed in range(20):
        g = random_graph(8, 0.5, 40 + seed)
        assert parse_graph6(encode_graph6(g)) == g
    for n in (63, 64, 100):
        g = random_graph(n, 0.05, n)
        assert parse_graph6(encode_graph6(g)) == g


def test_graph6_errors_carry_offsets():
    with pytest.raises(ParseError):
        parse_graph6("D?")  # truncated body
    with pytest.raises(ParseError):
        parse_graph6("D?{{")  # extra byte
    err = None
    try:
        parse_graph6("D?!")
    except ParseError as exc:
        err = exc
    assert err is not None and err.offset == 2
    with pytest.raises(ParseError):
        parse_graph6(">>graphs6<<D?{")
    with pytest.raises(ParseError):
        parse_graph6("B~")  # nonzero padding bits for n=3


def test_edgelist_roundtrip_and_comments():
    assert parse_edgelist("3\n0 1\n1 2\n").edges() == [(0, 1), (1, 2)]
    text = "# comment\n4\n0 1\n# another\n2 3\n"
    g = parse_edgelist(text)
    assert g.n == 4 and g.edges() == [(0, 1), (2, 3)]
    for seed in range(10):
        g = random_graph(7, 0.4, seed)
        assert parse_edgelist(encode_edgelist(g)) == g


def test_edgelist_errors():
    with pytest.raises(ParseError):
        parse_edgelist("")
    with pytest.raises(ParseError):
        parse_edgelist("x\n")
    with pytest.raises(ParseError):
        parse_edgelist("3\n1 0\n")  # requires u < v
    with pytest.raises(ParseError):
        parse_edgelist("3\n0 3\n")
    with pytest.raises(ParseError):
        parse_edgelist("3\n0\n")


def test_parse_graph_dispatch():
    g = path_graph(3)
    assert parse_graph(encode_graph6(g) + "\n", "graph6") == g
    assert parse_graph(encode_edgelist(g), "edgelist") == g
    with pytest.raises(ValueError):
        parse_graph("AB", "dot")


# -- generators ------------------------------------------------------------------


def test_generators():
    assert (path_graph(5).n, path_graph(5).edge_count()) == (5, 4)
    assert cycle_graph(6).edge_count() == 6
    assert star_graph(5).degree(0) == 4
    assert complete_graph(4).edge_count() == 6
    h2 = generate("pattern", "h2")
    assert (h2.n, h2.edge_count()) == (7, 6)
    assert gnp_random_graph(8, 0.5, 1) == gnp_random_graph(8, 0.5, 1)
    assert generate("gnp", "8", "0.5", "1") == gnp_random_graph(8, 0.5, 1)
    du = disjoint_union(path_graph(2), path_graph(3))
    assert (du.n, du.edge_count()) == (5, 3)
    with pytest.raises(ValueError):
        generate("torus", 3)
    with pytest.raises(ValueError):
        gnp_random_graph(5, 1.5, 0)


@settings(deadline=None, max_examples=40)
@given(small_graphs(max_n=8))
def test_graph6_roundtrip_property(g):
    assert parse_graph6(encode_graph6(g)) == g
