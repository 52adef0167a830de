"""The H2 detection pipeline: small models, frames, reduced graphs and centre search."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, are_mutually_induced, bits, is_induced_path, mask_of
from .models import Model, verify_model
from .patterns import pattern

FRAME_FIELDS = ("x1", "a1", "a2", "x3", "x5", "b1", "b2", "x7")


@dataclass(frozen=True)
class Frame:
    """Eight anchor vertices inducing exactly the edges x1a1, a2x3, x5b1, b2x7."""

    x1: int
    a1: int
    a2: int
    x3: int
    x5: int
    b1: int
    b2: int
    x7: int

    def vertices(self) -> tuple[int, ...]:
        return (self.x1, self.a1, self.a2, self.x3, self.x5, self.b1, self.b2, self.x7)


def frame_violation(g: Graph, f: Frame) -> str | None:
    vs = f.vertices()
    for v in vs:
        if not (0 <= v < g.n):
            return f"vertex {v} out of range"
    if len(set(vs)) != 8:
        return "frame vertices are not distinct"
    want = {
        frozenset((f.x1, f.a1)),
        frozenset((f.a2, f.x3)),
        frozenset((f.x5, f.b1)),
        frozenset((f.b2, f.x7)),
    }
    have = {
        frozenset((u, v))
        for i, u in enumerate(vs)
        for v in vs[i + 1 :]
        if g.has_edge(u, v)
    }
    if have != want:
        return "frame does not induce exactly the four anchor edges"
    return None


def _check_frame(g: Graph, f: Frame) -> None:
    msg = frame_violation(g, f)
    if msg is not None:
        raise ValueError(msg)


def _reduction_keep_mask(g: Graph, f: Frame, reverse: bool) -> int:
    if reverse:
        closed = (f.x1, f.x3, f.x5, f.a1, f.a2, f.x7)
        survivors = 1 << f.b1 | 1 << f.b2
    else:
        closed = (f.x1, f.x3, f.x5, f.b1, f.b2, f.x7)
        survivors = 1 << f.a1 | 1 << f.a2
    removed = 0
    for v in closed:
        removed |= g.adj_mask(v) | 1 << v
    return g.full_mask() & ~(removed & ~survivors)


def f_reduced(g: Graph, f: Frame) -> tuple[Graph, tuple[int, ...]]:
    """The host minus N[x1,x3,x5,b1,b2,x7] except a1 and a2, with the id mapping."""
    _check_frame(g, f)
    return g.induced_subgraph_mask(_reduction_keep_mask(g, f, reverse=False))


def reversed_f_reduced(g: Graph, f: Frame) -> tuple[Graph, tuple[int, ...]]:
    """As f_reduced with the roles of {a1,a2} and {b1,b2} swapped."""
    _check_frame(g, f)
    return g.induced_subgraph_mask(_reduction_keep_mask(g, f, reverse=True))


def find_centre(g: Graph, p, q) -> int | None:
    """Least vertex complete to both path interiors and anti-complete to the four ends."""
    if len(p) < 5 or len(q) < 5:
        raise ValueError("paths must have at least five vertices")
    if not are_mutually_induced(g, p, q):
        raise ValueError("paths are not mutually induced")
    pm, qm = mask_of(p), mask_of(q)
    ends = 1 << p[0] | 1 << p[-1] | 1 << q[0] | 1 << q[-1]
    interior = (pm | qm) & ~ends
    for c in range(g.n):
        if (pm | qm) >> c & 1:
            continue
        nc = g.adj_mask(c)
        if nc & interior == interior and not nc & ends:
            return c
    return None


def detect_small_h2_model(g: Graph) -> Model | None:
    """Search for an H2-model in which one branch bag has at most two vertices.

    Guesses the five singleton bags and the two-vertex bag, then looks for a whole
    component serving as the opposite branch bag. The pattern's mirror symmetry
    (1 5)(2 6)(3 7) makes one orientation of the search cover both small sides.
    """
    if g.n < 7:
        return None
    pat = pattern("h2")
    adjm = tuple(g.adj_mask(v) for v in range(g.n))
    full = g.full_mask()
    for x1 in range(g.n):
        nx1 = adjm[x1]
        for a1 in bits(nx1):
            for a2 in [a1, *bits(adjm[a1] & ~(1 << x1))]:
                wmask = 1 << a1 | 1 << a2
                nw = adjm[a1] | adjm[a2]
                x3_pool = nw & ~(nx1 | 1 << x1) & ~wmask
                if not x3_pool:
                    continue
                for x3 in bits(x3_pool):
                    nx3 = adjm[x3]
                    x4_pool = x3_pool & ~(nx3 | 1 << x3)
                    if not x4_pool:
                        continue
                    avail = full & ~(nx1 | nx3 | nw | wmask | 1 << x1 | 1 << x3)
                    for comp in g.components_of_mask(avail):
                        for x5 in bits(comp):
                            nx5 = adjm[x5]
                            for x7 in bits(comp & ~(nx5 | 1 << x5)):
                                x4_cands = x4_pool & ~(nx5 | 1 << x5) & ~(adjm[x7] | 1 << x7)
                                if not x4_cands:
                                    continue
                                sub = comp & ~(1 << x5 | 1 << x7)
                                for d in g.components_of_mask(sub):
                                    if not (d & nx5 and d & adjm[x7]):
                                        continue
                                    for x4 in bits(x4_cands):
                                        if not d & adjm[x4]:
                                            continue
                                        model = Model(
                                            pat,
                                            {
                                                1: {x1},
                                                2: set(bits(wmask)),
                                                3: {x3},
                                                4: {x4},
                                                5: {x5},
                                                6: set(bits(d)),
                                                7: {x7},
                                            },
                                        )
                                        if verify_model(g, model):
                                            return model
    return None


def _frames(g: Graph, prune: bool):
    """All frames in lexicographic order of their four directed anchor edges."""
    dir_edges = []
    for u, v in g.edges():
        dir_edges.append((u, v))
        dir_edges.append((v, u))
    dir_edges.sort()
    closed = {}
    for u, v in dir_edges:
        closed[(u, v)] = g.adj_mask(u) | g.adj_mask(v) | 1 << u | 1 << v

    if prune:
        for e1 in dir_edges:
            f1 = closed[e1]
            for e2 in dir_edges:
                if f1 & (1 << e2[0] | 1 << e2[1]):
                    continue
                f2 = f1 | closed[e2]
                for e3 in dir_edges:
                    if f2 & (1 << e3[0] | 1 << e3[1]):
                        continue
                    f3 = f2 | closed[e3]
                    for e4 in dir_edges:
                        if f3 & (1 << e4[0] | 1 << e4[1]):
                            continue
                        yield Frame(*e1, *e2, *e3, *e4)
    else:
        for e1 in dir_edges:
            for e2 in dir_edges:
                for e3 in dir_edges:
                    for e4 in dir_edges:
                        f = Frame(*e1, *e2, *e3, *e4)
                        if frame_violation(g, f) is None:
                            yield f


def detect_h2(g: Graph, *, prune: bool = True, stage: str = "full") -> Model | None:
    """Decide whether g contains H2 as an induced minor, returning a verified model.

    Stage 1 finds small models outright. Stage 2 enumerates frames, replaces each
    branch path by a shortest path in the (reversed) reduced graph, and scans for a
    vertex with neighbors on both paths; every candidate model is re-verified before
    being returned, and a failing candidate just continues the search.
    """
    if stage not in ("small", "full"):
        raise ValueError("stage must be 'small' or 'full'")
    small = detect_small_h2_model(g)
    if small is not None or stage == "small":
        return small
    pat = pattern("h2")
    adjm = tuple(g.adj_mask(v) for v in range(g.n))
    full = g.full_mask()
    for frame in _frames(g, prune):
        keep_p = _reduction_keep_mask(g, frame, reverse=False)
        r = g.shortest_path_within(frame.a1, frame.a2, keep_p)
        if r is None:
            continue
        keep_q = _reduction_keep_mask(g, frame, reverse=True)
        rr = g.shortest_path_within(frame.b1, frame.b2, keep_q)
        if rr is None:
            continue
        p = (frame.x1, *r, frame.x3)
        q = (frame.x5, *rr, frame.x7)
        pm, qm = mask_of(p), mask_of(q)
        if pm & qm or g.nbhd_mask(pm) & qm:
            continue
        if not (is_induced_path(g, p) and is_induced_path(g, q)):
            continue
        rmask, rrmask = mask_of(r), mask_of(rr)
        banned = pm | qm
        for v in (frame.x1, frame.x3, frame.x5, frame.x7):
            banned |= adjm[v] | 1 << v
        for c in bits(full & ~banned):
            if not (adjm[c] & rmask and adjm[c] & rrmask):
                continue
            model = Model(
                pat,
                {
                    1: {frame.x1},
                    2: set(r),
                    3: {frame.x3},
                    4: {c},
                    5: {frame.x5},
                    6: set(rr),
                    7: {frame.x7},
                },
            )
            if verify_model(g, model):
                assert len(r) >= 3 and len(rr) >= 3  # else stage 1 would have found it
                return model
    return None
