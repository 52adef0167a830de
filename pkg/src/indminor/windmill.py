"""Windmill machinery: hub-freeness, the definition checker, the instance builders
reducing 2-in-a-hole / induced 2-disjoint-paths to windmill detection, and hub-free
source-instance generators for experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import Graph, is_induced_path, mask_of


@dataclass(frozen=True)
class WindmillParams:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 1:
            raise ValueError("windmill parameters must be positive")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class TwoInAHoleInstance:
    graph: Graph
    x: int
    y: int

    def __post_init__(self):
        if self.x == self.y:
            raise ValueError("x and y must differ")
        for v in (self.x, self.y):
            if self.graph.degree(v) != 2:
                raise ValueError(f"prescribed vertex {v} must have degree 2")


@dataclass(frozen=True)
class I2DPInstance:
    graph: Graph
    xp: int
    xpp: int
    yp: int
    ypp: int

    def __post_init__(self):
        vs = (self.xp, self.xpp, self.yp, self.ypp)
        if len(set(vs)) != 4:
            raise ValueError("the four prescribed vertices must be distinct")
        for v in vs:
            self.graph._check_vertex(v)


@dataclass(frozen=True)
class ReductionResult:
    graph: Graph
    z: int
    pendants: dict[str, tuple[int, ...]]
    attachments: dict[str, int]
    vertex_map: dict[int, int]


def is_hub_free(g: Graph) -> bool:
    """True iff no vertex has three or more neighbors of degree at least three."""
    degs = [g.degree(v) for v in range(g.n)]
    for v in range(g.n):
        heavy = sum(1 for w in g.neighbors(v) if degs[w] >= 3)
        if heavy >= 3:
            return False
    return True


def verify_windmill(g: Graph, params: WindmillParams, p, q, z: int) -> bool:
    """Check the full windmill definition for the witness (p, q, z)."""
    a, b, c, d = params.as_tuple()
    p, q = tuple(p), tuple(q)
    if len(p) < a + b + 2 or len(q) < c + d + 2:
        return False
    if not (is_induced_path(g, p) and is_induced_path(g, q)):
        return False
    pm, qm = mask_of(p), mask_of(q)
    if pm & qm or g.nbhd_mask(pm) & qm:
        return False
    if (pm | qm) >> z & 1:
        return False
    excluded = mask_of(p[:a]) | mask_of(p[len(p) - b :]) | mask_of(q[:c]) | mask_of(q[len(q) - d :])
    rest = (pm | qm) & ~excluded
    nz = g.adj_mask(z)
    return nz & excluded == 0 and nz & rest == rest


def _reject_three_equal(params: WindmillParams) -> None:
    vals = params.as_tuple()
    if max(vals.count(v) for v in vals) >= 3:
        raise ValueError("parameter multisets with three equal values are not supported")


def _attach_pendants(base: Graph, universal: bool, attach: list[tuple[str, int, int]]):
    """Append z (adjacent to all base vertices when universal) and the pendant paths."""
    n0 = base.n
    edges = base.edges()
    z = n0
    if universal:
        edges += [(w, z) for w in range(n0)]
    nxt = n0 + 1
    pendants = {}
    for name, w, length in attach:
        ids = tuple(range(nxt, nxt + length))
        nxt += length
        edges += [(ids[i], ids[i + 1]) for i in range(length - 1)]
        edges.append((w, ids[-1]))
        pendants[name] = ids
    return Graph(nxt, edges), z, pendants


def reduce_2iah_to_windmill(inst: TwoInAHoleInstance, params: WindmillParams) -> ReductionResult:
    """Build the windmill instance for a 2-in-a-hole source: drop x and y, add a
    vertex adjacent to every remaining source vertex, and hang pendant paths of
    lengths a, b, c, d off the four old neighbors of x and y."""
    a, b, c, d = params.as_tuple()
    _reject_three_equal(params)
    if not (a == c and b == d and a != b):
        raise ValueError("the 2-in-a-hole reduction needs a=c, b=d and a != b")
    g, x, y = inst.graph, inst.x, inst.y
    if g.has_edge(x, y):
        raise ValueError("x and y must be non-adjacent")
    xp, xpp = sorted(g.neighbors(x))
    yp, ypp = sorted(g.neighbors(y))
    if {xp, xpp} & {yp, ypp}:
        raise ValueError("x and y must not share neighbors")
    keep = [v for v in range(g.n) if v not in (x, y)]
    base, old = g.induced_subgraph(keep)
    vmap = {o: i for i, o in enumerate(old)}
    attach = [
        ("xp", vmap[xp], a),
        ("yp", vmap[yp], b),
        ("xpp", vmap[xpp], c),
        ("ypp", vmap[ypp], d),
    ]
    out, z, pendants = _attach_pendants(base, True, attach)
    attachments = {name: vmap[v] for name, v in (("xp", xp), ("xpp", xpp), ("yp", yp), ("ypp", ypp))}
    return ReductionResult(out, z, pendants, attachments, vmap)


def _hub_free_with(edges, n: int) -> bool:
    deg = [0] * n
    adj = [[] for _ in range(n)]
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    return all(sum(1 for w in adj[v] if deg[w] >= 3) < 3 for v in range(n))


def random_hub_free_graph(n: int, density: float, seed: int) -> Graph:
    """Random graph kept hub-free by discarding any edge that would create a hub."""
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    edges: list[tuple[int, int]] = []
    for pair in pairs:
        if rng.random() < density and _hub_free_with(edges + [pair], n):
            edges.append(pair)
    return Graph(n, edges)


def _two_planted_paths(n_base: int, seed: int, anchors, n_total: int):
    """Path 0..k-1 and path k..k+l-1 on a base of n_base vertices, plus noise to the
    leftover vertices only; every noise edge is vetted for hub-freeness together
    with the fixed ``anchors`` so the finished instance stays hub-free."""
    rng = random.Random(seed)
    k = rng.randrange(2, 4)
    l = rng.randrange(2, 4)
    if k + l > n_base:
        raise ValueError("host too small for the planted paths")
    edges = [(i, i + 1) for i in range(k - 1)] + [(k + i, k + i + 1) for i in range(l - 1)]
    anchors = list(anchors(k, l)) if callable(anchors) else list(anchors)
    for e in range(k + l, n_base):
        for w in range(e):
            if rng.random() >= 0.25:
                continue
            cand = edges + [(w, e)]
            if _hub_free_with(cand + anchors, n_total):
                edges = cand
    return edges + anchors, k, l


def random_2iah_instance(n: int, seed: int, planted: bool = False) -> TwoInAHoleInstance:
    """Random hub-free 2-in-a-hole instance; with ``planted`` a chordless cycle
    through x and y is built in, so the answer is yes by construction."""
    if n < 8:
        raise ValueError("need at least 8 vertices")
    x, y = n - 2, n - 1
    if planted:
        anchors = lambda k, l: [(0, x), (k, x), (k - 1, y), (k + l - 1, y)]
        edges, _, _ = _two_planted_paths(n - 2, seed, anchors, n)
        return TwoInAHoleInstance(Graph(n, edges), x, y)
    rng = random.Random(seed)
    for bump in range(100):
        base = random_hub_free_graph(n - 2, 0.3, seed * 97 + bump)
        for _ in range(50):
            xp, xpp, yp, ypp = rng.sample(range(n - 2), 4)
            g = Graph(n, base.edges() + [(xp, x), (xpp, x), (yp, y), (ypp, y)])
            if is_hub_free(g):
                return TwoInAHoleInstance(g, x, y)
    raise RuntimeError("could not build a hub-free instance")


def random_i2dp_instance(n: int, seed: int, planted: bool = False) -> I2DPInstance:
    """Random hub-free induced-2-disjoint-paths instance; ``planted`` builds the
    two mutually induced paths in, so the answer is yes by construction."""
    if n < 6:
        raise ValueError("need at least 6 vertices")
    if planted:
        edges, k, l = _two_planted_paths(n, seed, [], n)
        return I2DPInstance(Graph(n, edges), 0, k, k - 1, k + l - 1)
    rng = random.Random(seed)
    g = random_hub_free_graph(n, 0.25, seed * 89 + 1)
    xp, xpp, yp, ypp = rng.sample(range(n), 4)
    return I2DPInstance(g, xp, xpp, yp, ypp)


def reduce_i2dp_to_windmill(inst: I2DPInstance, params: WindmillParams) -> ReductionResult:
    """Same construction from an induced-2-disjoint-paths source: the source keeps all
    its vertices, z is adjacent to every one of them, pendants of lengths a and b go
    on x' and y', pendants of lengths c and d on x'' and y''."""
    a, b, c, d = params.as_tuple()
    _reject_three_equal(params)
    if not (a == b and c == d and a != c):
        raise ValueError("the induced-2-disjoint-paths reduction needs a=b, c=d and a != c")
    g = inst.graph
    attach = [
        ("xp", inst.xp, a),
        ("yp", inst.yp, b),
        ("xpp", inst.xpp, c),
        ("ypp", inst.ypp, d),
    ]
    out, z, pendants = _attach_pendants(g, True, attach)
    attachments = {"xp": inst.xp, "xpp": inst.xpp, "yp": inst.yp, "ypp": inst.ypp}
    return ReductionResult(out, z, pendants, attachments, {v: v for v in range(g.n)})
