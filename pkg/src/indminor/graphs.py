"""Immutable bitset-backed simple graphs plus the traversals and I/O every solver shares."""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Malformed graph input; ``offset`` is the byte position of the fault when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph on vertices 0..n-1, adjacency stored as one bitmask per vertex.

    Instances are immutable values: every mutating-style operation returns a new
    graph, so graphs can be shared freely across branching searches and workers.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        g = object.__new__(cls)
        g.n = len(masks)
        g._adj = tuple(masks)
        return g

    # -- basic queries ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def vertices(self) -> range:
        return range(self.n)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def adj_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> set[int]:
        return set(bits(self.adj_mask(v)))

    def degree(self, v: int) -> int:
        return self.adj_mask(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self._adj[u] >> (u + 1) << (u + 1)
            for v in bits(m):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    # -- neighborhoods over sets ------------------------------------------------

    def set_mask(self, s: Iterable[int]) -> int:
        m = 0
        for v in s:
            self._check_vertex(v)
            m |= 1 << v
        return m

    def nbhd_mask(self, mask: int) -> int:
        """Union of adjacency masks over the vertices of ``mask`` (open neighborhood)."""
        out = 0
        for v in bits(mask):
            out |= self._adj[v]
        return out

    def closed_neighborhood_of_set(self, s: Iterable[int]) -> set[int]:
        m = self.set_mask(s)
        return set(bits(m | self.nbhd_mask(m)))

    # -- subgraphs and contraction ----------------------------------------------

    def induced_subgraph(self, s: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Return (subgraph, old_ids) where new vertex i corresponds to old_ids[i]."""
        m = self.set_mask(s)
        return self.induced_subgraph_mask(m)

    def induced_subgraph_mask(self, mask: int) -> tuple["Graph", tuple[int, ...]]:
        old = tuple(bits(mask))
        pos = {v: i for i, v in enumerate(old)}
        masks = []
        for v in old:
            sub = self._adj[v] & mask
            masks.append(mask_of(pos[w] for w in bits(sub)))
        return Graph.from_masks(masks), old

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Merge the endpoints of edge uv; min(u,v) keeps its id, ids above max(u,v) shift down."""
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        keep, gone = min(u, v), max(u, v)
        merged = (self._adj[u] | self._adj[v]) & ~(1 << u) & ~(1 << v)
        masks = []
        for w in range(self.n):
            if w == gone:
                continue
            m = merged if w == keep else self._adj[w]
            if m >> gone & 1:
                m = (m & ~(1 << gone)) | (1 << keep)
            low = m & ((1 << gone) - 1)
            masks.append(low | (m >> (gone + 1)) << gone)
        return Graph.from_masks(masks)

    # -- connectivity -----------------------------------------------------------

    def reach_mask(self, start: int, allowed: int) -> int:
        """Vertices reachable from ``start`` inside ``allowed`` (start must be allowed)."""
        seen = start & allowed
        frontier = seen
        while frontier:
            grown = self.nbhd_mask(frontier) & allowed & ~seen
            seen |= grown
            frontier = grown
        return seen

    def is_connected_mask(self, mask: int) -> bool:
        if mask == 0:
            return False
        return self.reach_mask(mask & -mask, mask) == mask

    def components_of_mask(self, mask: int) -> list[int]:
        """Connected components of the induced subgraph on ``mask``, ordered by lowest vertex."""
        comps = []
        rest = mask
        while rest:
            comp = self.reach_mask(rest & -rest, rest)
            comps.append(comp)
            rest &= ~comp
        return comps

    def connected_components(self) -> list[frozenset[int]]:
        return [frozenset(bits(c)) for c in self.components_of_mask(self.full_mask())]

    # -- shortest paths -----------------------------------------------------------

    def distances_within(self, src: int, allowed: int) -> dict[int, int]:
        dist = {src: 0}
        frontier = 1 << src
        seen = frontier
        d = 0
        while frontier:
            d += 1
            grown = self.nbhd_mask(frontier) & allowed & ~seen
            for v in bits(grown):
                dist[v] = d
            seen |= grown
            frontier = grown
        return dist

    def shortest_path_within(self, a: int, b: int, allowed: int) -> tuple[int, ...] | None:
        """Lexicographically smallest shortest a-b path inside ``allowed``, or None."""
        self._check_vertex(a)
        self._check_vertex(b)
        if not (allowed >> a & 1 and allowed >> b & 1):
            return None
        if a == b:
            return (a,)
        dist = self.distances_within(b, allowed)
        if a not in dist:
            return None
        # greedy walk: min-id neighbor one step closer to b extends to the lex-min path
        path = [a]
        cur, d = a, dist[a]
        while cur != b:
            step = self._adj[cur] & allowed
            cur = min(v for v in bits(step) if dist.get(v) == d - 1)
            d -= 1
            path.append(cur)
        return tuple(path)

    def shortest_path(self, a: int, b: int) -> tuple[int, ...] | None:
        return self.shortest_path_within(a, b, self.full_mask())


# -- paths ------------------------------------------------------------------------


def is_path(g: Graph, seq: Sequence[int]) -> bool:
    """True iff seq is a sequence of distinct vertices with consecutive vertices adjacent."""
    if len(seq) == 0 or len(set(seq)) != len(seq):
        return False
    for v in seq:
        if not (0 <= v < g.n):
            return False
    return all(g.has_edge(u, v) for u, v in zip(seq, seq[1:]))


def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    if not is_path(g, seq):
        return False
    for i, u in enumerate(seq):
        for v in seq[i + 2 :]:
            if g.has_edge(u, v):
                return False
    return True


def are_mutually_induced(g: Graph, p: Sequence[int], q: Sequence[int]) -> bool:
    """True iff the induced paths p and q are disjoint with no edge between them."""
    for name, seq in (("p", p), ("q", q)):
        if not is_induced_path(g, seq):
            raise ValueError(f"{name} is not an induced path")
    pm, qm = mask_of(p), mask_of(q)
    if pm & qm:
        return False
    return g.nbhd_mask(pm) & qm == 0


# -- graph6 -------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_check_byte(ch: str, offset: int) -> int:
    x = ord(ch)
    if not 63 <= x <= 126:
        raise ParseError(f"invalid graph6 character {ch!r}", offset)
    return x - 63


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    base = 0
    if s.startswith(">>"):
        if not s.startswith(_G6_HEADER):
            raise ParseError("malformed graph6 header", 0)
        s = s[len(_G6_HEADER) :]
        base = len(_G6_HEADER)
    if not s:
        raise ParseError("empty graph6 input", base)
    if ord(s[0]) == 126:
        if len(s) < 4 or ord(s[1]) == 126:
            raise ParseError("unsupported or truncated graph6 size field", base)
        n = 0
        for i in (1, 2, 3):
            n = n << 6 | _g6_check_byte(s[i], base + i)
        body, body_off = s[4:], base + 4
    else:
        n = _g6_check_byte(s[0], base)
        body, body_off = s[1:], base + 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}", body_off
        )
    acc = 0
    for i, ch in enumerate(body):
        acc = acc << 6 | _g6_check_byte(ch, body_off + i)
    pad = nbytes * 6 - nbits
    if pad and acc & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits in graph6 body", body_off + nbytes - 1)
    acc >>= pad
    edges = []
    # bits run x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ... ; the first emitted bit is the highest
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if acc >> k & 1:
                edges.append((i, j))
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + "".join(chr((n >> s & 0x3F) + 63) for s in (12, 6, 0))
    else:
        raise ValueError("graph6 encoding supports n <= 258047")
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj_mask(j)
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
    pad = (-nbits) % 6
    acc <<= pad
    nbits += pad
    body = "".join(chr((acc >> s & 0x3F) + 63) for s in range(nbits - 6, -1, -6))
    return head + body


# -- edgelist -------------------------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.strip()
        if line and not line.startswith("#"):
            fields = line.split()
            if n is None:
                if len(fields) != 1 or not fields[0].isdigit():
                    raise ParseError("edgelist must start with a vertex count line", offset)
                n = int(fields[0])
            else:
                if len(fields) != 2:
                    raise ParseError(f"expected 'u v', got {line!r}", offset)
                try:
                    u, v = int(fields[0]), int(fields[1])
                except ValueError:
                    raise ParseError(f"non-integer endpoint in {line!r}", offset) from None
                if not 0 <= u < v < n:
                    raise ParseError(f"edge ({u},{v}) violates 0 <= u < v < n={n}", offset)
                edges.append((u, v))
        offset += len(raw)
    if n is None:
        raise ParseError("empty edgelist input", 0)
    return Graph(n, edges)


def encode_edgelist(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        for line in text.splitlines():
            if line.strip():
                return parse_graph6(line)
        raise ParseError("no graph6 line found", 0)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown format {fmt!r}")


def encode_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return encode_graph6(g)
    if fmt == "edgelist":
        return encode_edgelist(g)
    raise ValueError(f"unknown format {fmt!r}")


# -- generators ------------------------------------------------------------------------


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        return path_graph(k)
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star_graph(k: int) -> Graph:
    return Graph(k, [(0, i) for i in range(1, k)])


def gnp_random_graph(n: int, p: float, seed: int) -> Graph:
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0,1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()]
    return Graph(a.n + b.n, edges)


def generate(kind: str, *params) -> Graph:
    """Dispatch for the CLI's gen subcommand: path/cycle/clique/star/pattern/gnp."""
    makers = {
        "path": path_graph,
        "cycle": cycle_graph,
        "clique": complete_graph,
        "star": star_graph,
    }
    if kind in makers:
        (k,) = params
        return makers[kind](int(k))
    if kind == "gnp":
        n, p, seed = params
        return gnp_random_graph(int(n), float(p), int(seed))
    if kind == "pattern":
        from . import patterns

        (name,) = params
        return patterns.pattern(str(name)).graph
    raise ValueError(f"unknown generator kind {kind!r}")
