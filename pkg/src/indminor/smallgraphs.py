"""Exhaustive small-graph corpora: one representative per isomorphism class."""

from __future__ import annotations

from itertools import permutations, product

from .graphs import Graph, bits

# number of isomorphism classes of simple graphs on n vertices
CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def _stable_colors(g: Graph) -> list[int]:
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in bits(g.adj_mask(v)))))
            for v in range(g.n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_code(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant code: minimum adjacency bitstring over all permutations
    respecting the stable vertex coloring."""
    n = g.n
    if n <= 1:
        return (n, 0)
    colors = _stable_colors(g)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    grouped = [tuple(classes[c]) for c in sorted(classes)]
    best = None
    for parts in product(*(permutations(cls) for cls in grouped)):
        perm = [v for part in parts for v in part]
        code = 0
        for i in range(n):
            ai = g.adj_mask(perm[i])
            for j in range(i + 1, n):
                code = code << 1 | (ai >> perm[j] & 1)
        if best is None or code < best:
            best = code
    return (n, best)


_cache: dict[int, list[Graph]] = {}


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """All isomorphism classes on n vertices, built by vertex extension, in code order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n in _cache:
        return _cache[n]
    if n == 1:
        out = [Graph(1)]
    else:
        found: dict[tuple[int, int], Graph] = {}
        for g in nonisomorphic_graphs(n - 1):
            base = [g.adj_mask(v) for v in range(n - 1)]
            for nb in range(1 << (n - 1)):
                masks = [m | ((nb >> v & 1) << (n - 1)) for v, m in enumerate(base)]
                masks.append(nb)
                cand = Graph.from_masks(masks)
                found.setdefault(canonical_code(cand), cand)
        out = [found[k] for k in sorted(found)]
    _cache[n] = out
    return out


def all_graphs_up_to(max_n: int) -> list[Graph]:
    out = []
    for n in range(1, max_n + 1):
        out.extend(nonisomorphic_graphs(n))
    return out
