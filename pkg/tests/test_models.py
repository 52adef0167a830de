from __future__ import annotations

import pytest

from conftest import random_graph
from indminor.detectors import detect
from indminor.graphs import Graph, disjoint_union, path_graph
from indminor.models import (
    Model,
    check_degree2_bag_is_path,
    check_leaf_lemma,
    degree2_path_violation,
    leaf_lemma_violation,
    minimize_model,
    model_from_json,
    model_to_json,
    model_violation,
    verify_model,
)
from indminor.patterns import PATTERN_NAMES, pattern
from indminor.smallgraphs import canonical_code


def identity_model(name):
    pat = pattern(name)
    return pat.graph, Model(pat, {y: {y - 1} for y in pat.labels})


def test_identity_models_verify():
    for name in PATTERN_NAMES:
        g, m = identity_model(name)
        assert model_violation(g, m) is None


def test_swapped_bags_fail_adjacency():
    g, m = identity_model("kite")
    bags = dict(m.bags)
    bags[1], bags[3] = bags[3], bags[1]
    bad = Model(m.pattern, bags)
    why = model_violation(g, bad)
    assert why is not None and "adjacency" in why


def test_shared_vertex_fails_disjointness():
    g, m = identity_model("kite")
    bags = dict(m.bags)
    bags[2] = bags[2] | bags[3]
    why = model_violation(g, Model(m.pattern, bags))
    assert why is not None and "disjointness" in why


def test_empty_and_disconnected_and_invalid():
    g, m = identity_model("h2")
    bags = dict(m.bags)
    bags[6] = frozenset()
    assert "non-emptiness" in model_violation(g, Model(m.pattern, bags))
    with pytest.raises(ValueError):
        Model(m.pattern, {**m.bags, 9: {0}})
    with pytest.raises(ValueError):
        model_violation(g, Model(m.pattern, {**m.bags, 7: {99}}))
    host = disjoint_union(pattern("h2").graph, path_graph(2))
    bags2 = {y: {y - 1} for y in m.pattern.labels}
    bags2[6] = {5, 8}  # {5,8} not connected in the union
    assert "connectivity" in model_violation(host, Model(m.pattern, bags2))


def test_minimize_fixed_point_and_padding():
    g, m = identity_model("kite")
    assert minimize_model(g, m) == m  # all-singleton: nothing removable

    # pad bag 2 with a pendant vertex hanging off it
    host = Graph(6, pattern("kite").graph.edges() + [(1, 5)])
    padded = Model(m.pattern, {1: {0}, 2: {1, 5}, 3: {2}, 4: {3}, 5: {4}})
    assert verify_model(host, padded)
    slim = minimize_model(host, padded)
    assert slim.bags[2] == frozenset({1})
    assert slim.total_size() < padded.total_size()
    assert minimize_model(host, slim) == slim  # idempotent
    with pytest.raises(ValueError):
        minimize_model(host, Model(m.pattern, {**padded.bags, 2: frozenset()}))


def test_minimize_never_grows_and_preserves_validity():
    count = 0
    for seed in range(120):
        g = random_graph(9, 0.35, 7000 + seed)
        model = detect(g, "kite")
        if model is None:
            continue
        count += 1
        small = minimize_model(g, model)
        assert verify_model(g, small)
        for y in model.pattern.labels:
            assert small.bags[y] <= model.bags[y]
    assert count >= 10


def test_leaf_lemma_on_identity_and_planted_path_bag():
    g, m = identity_model("kite")
    assert check_leaf_lemma(g, m)
    assert check_degree2_bag_is_path(g, m)

    # degree-2 pattern vertex 5 of the kite realized by a 3-vertex path bag:
    # ids 0..3 are labels 1..4, bag 5 is the path 4-5-6 with its ends attached
    edges = [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 6), (4, 5), (5, 6)]
    host = Graph(7, edges)
    m2 = Model(pattern("kite"), {1: {0}, 2: {1}, 3: {2}, 4: {3}, 5: {4, 5, 6}})
    assert verify_model(host, m2)
    m2 = minimize_model(host, m2)
    assert m2.bags[5] == frozenset({4, 5, 6})  # both ends attach uniquely: nothing drops
    assert check_leaf_lemma(host, m2)
    assert check_degree2_bag_is_path(host, m2)


def test_lemma_checks_require_minimal_models():
    g, m = identity_model("kite")
    host = Graph(6, pattern("kite").graph.edges() + [(1, 5)])
    padded = Model(m.pattern, {1: {0}, 2: {1, 5}, 3: {2}, 4: {3}, 5: {4}})
    with pytest.raises(ValueError):
        check_leaf_lemma(host, padded)
    with pytest.raises(ValueError):
        check_degree2_bag_is_path(host, padded)


def test_lemma_sweep_on_detected_models():
    hits = 0
    for seed in range(150):
        g = random_graph(9, 0.3, 3000 + seed)
        for name in ("kite", "f2"):
            model = detect(g, name)
            if model is None:
                continue
            hits += 1
            small = minimize_model(g, model)
            assert leaf_lemma_violation(g, small) is None
            assert degree2_path_violation(g, small) is None
            for y in small.pattern.labels:
                if small.pattern.degree_of_label(y) == 1:
                    assert len(small.bags[y]) == 1
    assert hits >= 20


def contract_to_pattern(g, m):
    """Contract each bag to one vertex, drop the rest, return the quotient graph."""
    labels = sorted(m.bags)
    idx = {y: i for i, y in enumerate(labels)}
    edges = set()
    for i, y in enumerate(labels):
        for z in labels[i + 1 :]:
            if any(g.has_edge(u, v) for u in m.bags[y] for v in m.bags[z]):
                edges.add((idx[y], idx[z]))
    return Graph(len(labels), sorted(edges))


def test_bag_contraction_reproduces_pattern():
    for seed in range(80):
        g = random_graph(9, 0.35, 4200 + seed)
        for name in PATTERN_NAMES:
            model = detect(g, name)
            if model is None:
                continue
            quotient = contract_to_pattern(g, model)
            assert canonical_code(quotient) == canonical_code(model.pattern.graph)


def test_model_json_roundtrip():
    g, m = identity_model("f2")
    text = model_to_json(m)
    back = model_from_json(text)
    assert back == m
    assert '"pattern": "f2"' in text
