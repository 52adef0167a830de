"""Induced-minor models: verification, greedy bag minimization, and structural checks."""

from __future__ import annotations

import json
from typing import Iterable

from .graphs import Graph, bits, mask_of
from .patterns import PatternGraph, pattern


class Model:
    """Bags X_y of host vertices, one per pattern label; treated as an immutable value."""

    __slots__ = ("pattern", "bags")

    def __init__(self, pat: PatternGraph, bags: dict[int, Iterable[int]]):
        unknown = set(bags) - set(pat.labels)
        if unknown:
            raise ValueError(f"unknown pattern vertices in bags: {sorted(unknown)}")
        self.pattern = pat
        self.bags = {y: frozenset(bags.get(y, ())) for y in pat.labels}

    def bag(self, y: int) -> frozenset[int]:
        return self.bags[y]

    def total_size(self) -> int:
        return sum(len(b) for b in self.bags.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Model)
            and self.pattern.name == other.pattern.name
            and self.bags == other.bags
        )

    def __repr__(self) -> str:
        inner = ", ".join(f"{y}:{sorted(b)}" for y, b in sorted(self.bags.items()))
        return f"Model({self.pattern.name}, {{{inner}}})"


def model_to_json(m: Model) -> str:
    payload = {
        "pattern": m.pattern.name,
        "bags": {str(y): sorted(b) for y, b in sorted(m.bags.items())},
    }
    return json.dumps(payload, sort_keys=True)


def model_from_json(text: str) -> Model:
    payload = json.loads(text)
    pat = pattern(payload["pattern"])
    bags = {int(y): vs for y, vs in payload["bags"].items()}
    return Model(pat, bags)


def model_violation(g: Graph, m: Model) -> str | None:
    """None if the model is valid, else a message naming the first violated clause."""
    masks = {}
    for y in m.pattern.labels:
        bag = m.bags[y]
        for v in bag:
            if not (0 <= v < g.n):
                raise ValueError(f"bag {y} contains invalid vertex {v}")
        if not bag:
            return f"non-emptiness: bag {y} is empty"
        masks[y] = mask_of(bag)
    labels = m.pattern.labels
    for i, y in enumerate(labels):
        for z in labels[i + 1 :]:
            if masks[y] & masks[z]:
                w = min(bits(masks[y] & masks[z]))
                return f"disjointness: bags {y} and {z} share vertex {w}"
    for y in labels:
        if not g.is_connected_mask(masks[y]):
            return f"connectivity: bag {y} is disconnected"
    for i, y in enumerate(labels):
        nb = g.nbhd_mask(masks[y])
        for z in labels[i + 1 :]:
            adjacent = bool(nb & masks[z])
            if adjacent != m.pattern.has_edge(y, z):
                kind = "missing" if m.pattern.has_edge(y, z) else "forbidden"
                return f"adjacency: {kind} adjacency between bags {y} and {z}"
    return None


def verify_model(g: Graph, m: Model) -> bool:
    return model_violation(g, m) is None


def _removal_candidates(g: Graph, m: Model):
    for y in m.pattern.labels:
        for v in sorted(m.bags[y]):
            bags = dict(m.bags)
            bags[y] = m.bags[y] - {v}
            candidate = Model(m.pattern, bags)
            if verify_model(g, candidate):
                yield candidate


def minimize_model(g: Graph, m: Model) -> Model:
    """Greedy single-vertex removal in label/id order, iterated to a fixed point.

    The result is bag-minimal in the sense the deletion arguments need: no single
    vertex can leave any bag without breaking the model. Global minimality is not
    attempted (bag-minimal models need not be minimum).
    """
    if not verify_model(g, m):
        raise ValueError("minimize_model requires a valid model")
    current = m
    changed = True
    while changed:
        changed = False
        for candidate in _removal_candidates(g, current):
            current = candidate
            changed = True
            break
    return current


def _require_minimal(g: Graph, m: Model) -> None:
    if not verify_model(g, m):
        raise ValueError("model is not valid")
    for _ in _removal_candidates(g, m):
        raise ValueError("model is not bag-minimal (a single-vertex removal survives)")


def _attachments(g: Graph, m: Model, y: int, z: int) -> frozenset[int]:
    """Vertices of bag y with a neighbor in bag z."""
    zmask = mask_of(m.bags[z])
    return frozenset(v for v in m.bags[y] if g.adj_mask(v) & zmask)


def _bfs_tree_degrees(g: Graph, bag: frozenset[int]) -> dict[int, int]:
    """Tree degrees of the BFS spanning tree of g[bag] rooted at the lowest vertex."""
    root = min(bag)
    bag_mask = mask_of(bag)
    deg = {root: 0}
    frontier = [root]
    seen = 1 << root
    while frontier:
        nxt = []
        for u in frontier:
            for v in sorted(bits(g.adj_mask(u) & bag_mask & ~seen)):
                seen |= 1 << v
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
                nxt.append(v)
        frontier = nxt
    return deg


def leaf_lemma_violation(g: Graph, m: Model) -> str | None:
    """Check every bag's deterministic spanning tree against the leaf-count bound.

    Requires a bag-minimal model: the tree of bag y must have at most deg_H(y)
    leaves, each being the unique attachment toward some pattern neighbor of y.
    """
    _require_minimal(g, m)
    for y in m.pattern.labels:
        bag = m.bags[y]
        deg = _bfs_tree_degrees(g, bag)
        leaves = [v for v, d in deg.items() if d <= 1]
        nbrs = m.pattern.neighbors_of_label(y)
        if len(leaves) > len(nbrs):
            return f"bag {y}: spanning tree has {len(leaves)} leaves > {len(nbrs)}"
        for u in leaves:
            if not any(_attachments(g, m, y, z) == {u} for z in nbrs):
                return f"bag {y}: leaf {u} is not a unique attachment vertex"
    return None


def check_leaf_lemma(g: Graph, m: Model) -> bool:
    return leaf_lemma_violation(g, m) is None


def degree2_path_violation(g: Graph, m: Model) -> str | None:
    """For degree-2 pattern vertices: the bag must induce a path whose ends are the
    unique attachments to the two neighboring bags."""
    _require_minimal(g, m)
    for y in m.pattern.labels:
        nbrs = m.pattern.neighbors_of_label(y)
        if len(nbrs) != 2:
            continue
        bag = m.bags[y]
        sub, old = g.induced_subgraph(bag)
        if sub.edge_count() != sub.n - 1 or any(sub.degree(v) > 2 for v in sub.vertices()):
            return f"bag {y}: does not induce a path"
        z1, z2 = nbrs
        a1, a2 = _attachments(g, m, y, z1), _attachments(g, m, y, z2)
        if len(bag) == 1:
            (v,) = bag
            if a1 == {v} and a2 == {v}:
                continue
            return f"bag {y}: single vertex is not the unique attachment both ways"
        ends = {old[v] for v in sub.vertices() if sub.degree(v) == 1}
        e1, e2 = sorted(ends)
        if (a1, a2) in (({e1}, {e2}), ({e2}, {e1})):
            continue
        return f"bag {y}: path ends {sorted(ends)} are not the unique attachments"
    return None


def check_degree2_bag_is_path(g: Graph, m: Model) -> bool:
    return degree2_path_violation(g, m) is None
