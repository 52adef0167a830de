"""Fixed pattern graphs with the vertex labelling every detector and test speaks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph

# Label conventions: kite = diamond on {2,3,4,5} (K4 minus 25) plus pendant 1 on 2;
# F1 = K4 on {2,3,4,5} plus pendant 1 on 2; F2 = K4 on {2,3,4,5} with 25 subdivided
# by 1; H2 = path 1-2-4-6-7 with pendants 3 on 2 and 5 on 6.
_EDGE_SETS: dict[str, tuple[tuple[int, int], ...]] = {
    "kite": ((1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)),
    "f1": ((1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)),
    "f2": ((1, 2), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)),
    "h2": ((1, 2), (2, 3), (2, 4), (4, 6), (5, 6), (6, 7)),
}

_SIZES = {"kite": 5, "f1": 5, "f2": 5, "h2": 7}

PATTERN_NAMES = tuple(_EDGE_SETS)


@dataclass(frozen=True)
class PatternGraph:
    """A fixed target pattern; ``graph`` is the 0-indexed companion (label i -> i-1)."""

    name: str
    labels: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    graph: Graph = field(compare=False)

    def neighbors_of_label(self, y: int) -> tuple[int, ...]:
        return tuple(v + 1 for v in sorted(self.graph.neighbors(y - 1)))

    def degree_of_label(self, y: int) -> int:
        return self.graph.degree(y - 1)

    def has_edge(self, y: int, z: int) -> bool:
        return self.graph.has_edge(y - 1, z - 1)


def degree_sequence(p: PatternGraph) -> list[int]:
    """Multiset of degrees, sorted ascending."""
    return sorted(p.graph.degree(v) for v in p.graph.vertices())


def normalize_pattern_name(name: str) -> str:
    key = name.strip().lower()
    if key in ("k", "kite"):
        key = "kite"
    if key not in _EDGE_SETS:
        raise ValueError(f"unknown pattern {name!r}; expected one of {PATTERN_NAMES}")
    return key


def pattern(name: str) -> PatternGraph:
    key = normalize_pattern_name(name)
    return _CATALOG[key]


def pattern_from_graph(name: str, g: Graph) -> PatternGraph:
    """Ad-hoc pattern for arbitrary targets (labels 1..n); used by the brute-force oracle."""
    edges = tuple((u + 1, v + 1) for u, v in g.edges())
    return PatternGraph(name, tuple(range(1, g.n + 1)), edges, g)


def _build(name: str) -> PatternGraph:
    n = _SIZES[name]
    edges = _EDGE_SETS[name]
    g = Graph(n, [(u - 1, v - 1) for u, v in edges])
    return PatternGraph(name, tuple(range(1, n + 1)), edges, g)


_CATALOG = {name: _build(name) for name in _EDGE_SETS}


def _sanity() -> None:
    for name, p in _CATALOG.items():
        g = p.graph
        assert g.is_connected_mask(g.full_mask()), name
    h2 = _CATALOG["h2"].graph
    assert h2.n == 7 and h2.edge_count() == 6  # connected with n-1 edges: a tree
    assert sorted(h2.degree(v) for v in h2.vertices()) == [1, 1, 1, 1, 2, 3, 3]
    # contracting the subdividing vertex of f2 into label 2 restores K4
    f2 = _CATALOG["f2"].graph
    k4 = f2.contract_edge(0, 1)
    assert k4.n == 4 and k4.edge_count() == 6


_sanity()
