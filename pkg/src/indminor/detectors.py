"""Polynomial detectors for the kite, F1 and F2: anchor-tuple enumeration feeding
bounded disjoint-connected-subgraph instances, plus the H+P_t extension operator."""

from __future__ import annotations

from itertools import combinations
from typing import Callable

from .dcs import DCSInstance, solve_dcs
from .graphs import Graph, bits, mask_of
from .h2 import detect_h2
from .models import Model, verify_model
from .patterns import normalize_pattern_name, pattern


def _subsets(pool: int, max_size: int):
    """Non-empty subsets of a vertex mask, sizes ascending, lexicographic within size."""
    verts = list(bits(pool))
    for size in range(1, min(max_size, len(verts)) + 1):
        for combo in combinations(verts, size):
            yield mask_of(combo)


def _dcs_bags(g: Graph, keep: int, zmasks, node_limit) -> list[frozenset[int]] | None:
    """Solve the DCS instance induced on ``keep`` and map bags back to host ids."""
    sub, old = g.induced_subgraph_mask(keep)
    pos = {v: i for i, v in enumerate(old)}
    terminals = tuple(frozenset(pos[v] for v in bits(z)) for z in zmasks)
    sol = solve_dcs(DCSInstance(sub, terminals), node_limit)
    if sol is None:
        return None
    return [frozenset(old[i] for i in s) for s in sol.sets]


def detect_kite(g: Graph, *, prune: bool = True, dcs_node_limit: int | None = None) -> Model | None:
    """Kite detection: guess the pendant u, the degree-2 vertex v, the bounded
    attachment sets and three connecting edges, then solve a 5-bounded 3-group
    DCS instance on the host minus the unguessed closed neighborhoods of u and v."""
    if g.n < 5:
        return None
    pat = pattern("kite")
    adjm = tuple(g.adj_mask(v) for v in range(g.n))
    full = g.full_mask()
    seen: set[tuple] = set()
    for u in range(g.n):
        nu = adjm[u]
        for v in range(g.n):
            if v == u or nu >> v & 1:
                continue
            nv = adjm[v]
            elig2 = full & ~(nv | 1 << v | 1 << u)
            elig34 = full & ~(nu | 1 << u | 1 << v)
            pool_a = nu & elig2
            pool_bc = nv & elig34
            if not pool_a or pool_bc.bit_count() < 2:
                continue
            base_keep = full & ~(nu | nv | 1 << u | 1 << v)
            for amask in _subsets(pool_a, 3):
                a_pool = ((elig2 & ~nu) | amask) if prune else elig2
                for bmask in _subsets(pool_bc, 2):
                    for cmask in _subsets(pool_bc & ~bmask, 2):
                        b_extra = (elig34 & ~nv) | bmask if prune else elig34
                        c_extra = (elig34 & ~nv) | cmask if prune else elig34
                        for a4 in bits(a_pool & ~(bmask | cmask)):
                            for b3 in bits(adjm[a4] & b_extra & ~(amask | 1 << a4 | cmask)):
                                for a5 in bits(a_pool & ~(bmask | 1 << b3 | cmask)):
                                    for c3 in bits(
                                        adjm[a5] & c_extra & ~(amask | 1 << a4 | 1 << a5 | bmask | 1 << b3)
                                    ):
                                        for b4 in bits(
                                            b_extra & ~(amask | 1 << a4 | 1 << a5 | cmask | 1 << c3)
                                        ):
                                            for c4 in bits(
                                                adjm[b4]
                                                & c_extra
                                                & ~(amask | 1 << a4 | 1 << a5 | bmask | 1 << b3 | 1 << b4)
                                            ):
                                                z1 = amask | 1 << a4 | 1 << a5
                                                z2 = bmask | 1 << b3 | 1 << b4
                                                z3 = cmask | 1 << c3 | 1 << c4
                                                if prune:
                                                    key = (u, v, z1, z2, z3)
                                                    if key in seen:
                                                        continue
                                                    seen.add(key)
                                                bags = _dcs_bags(
                                                    g, base_keep | z1 | z2 | z3, (z1, z2, z3), dcs_node_limit
                                                )
                                                if bags is None:
                                                    continue
                                                model = Model(
                                                    pat,
                                                    {1: {u}, 2: bags[0], 3: bags[1], 4: bags[2], 5: {v}},
                                                )
                                                if verify_model(g, model):
                                                    return model
    return None


def detect_f2(g: Graph, *, prune: bool = True, dcs_node_limit: int | None = None) -> Model | None:
    """F2 detection: guess the adjacent pair u, r, bounded attachment sets into
    X_5/X_3/X_4 and three connecting edges, then a 4-bounded 3-group DCS instance."""
    if g.n < 5:
        return None
    pat = pattern("f2")
    adjm = tuple(g.adj_mask(v) for v in range(g.n))
    full = g.full_mask()
    seen: set[tuple] = set()
    for u in range(g.n):
        nu = adjm[u]
        for r in bits(nu):
            nr = adjm[r]
            elig5 = full & ~(nr | 1 << r | 1 << u)
            elig34 = full & ~(nu | 1 << u | 1 << r)
            pool_s = nu & elig5
            pool_ab = nr & elig34
            if not pool_s or pool_ab.bit_count() < 2:
                continue
            base_keep = full & ~(nu | nr | 1 << u | 1 << r)
            for smask in _subsets(pool_s, 2):
                s_pool = ((elig5 & ~nu) | smask) if prune else elig5
                for amask in _subsets(pool_ab, 2):
                    a_pool = ((elig34 & ~nr) | amask) if prune else elig34
                    for bmask in _subsets(pool_ab & ~amask, 2):
                        b_pool = ((elig34 & ~nr) | bmask) if prune else elig34
                        for a3 in bits(a_pool & ~(bmask | smask)):
                            for s3 in bits(adjm[a3] & s_pool & ~(amask | 1 << a3 | bmask)):
                                for b3 in bits(b_pool & ~(amask | 1 << a3 | smask | 1 << s3)):
                                    for s4 in bits(
                                        adjm[b3] & s_pool & ~(amask | 1 << a3 | bmask | 1 << b3)
                                    ):
                                        for a4 in bits(
                                            a_pool & ~(bmask | 1 << b3 | smask | 1 << s3 | 1 << s4)
                                        ):
                                            for b4 in bits(
                                                adjm[a4]
                                                & b_pool
                                                & ~(amask | 1 << a3 | 1 << a4 | smask | 1 << s3 | 1 << s4)
                                            ):
                                                z1 = amask | 1 << a3 | 1 << a4
                                                z2 = bmask | 1 << b3 | 1 << b4
                                                z3 = smask | 1 << s3 | 1 << s4
                                                if prune:
                                                    key = (u, r, z1, z2, z3)
                                                    if key in seen:
                                                        continue
                                                    seen.add(key)
                                                bags = _dcs_bags(
                                                    g, base_keep | z1 | z2 | z3, (z1, z2, z3), dcs_node_limit
                                                )
                                                if bags is None:
                                                    continue
                                                model = Model(
                                                    pat,
                                                    {1: {u}, 2: {r}, 3: bags[0], 4: bags[1], 5: bags[2]},
                                                )
                                                if verify_model(g, model):
                                                    return model
    return None


def _contract_components(g: Graph, dmasks: list[int]):
    """Contract each (pairwise non-adjacent) component mask to one appended vertex.

    Returns the contracted graph, the survivor id list (new id -> old id) and the
    number of survivors; contracted vertex i sits at new id len(survivors)+i.
    """
    union_d = 0
    for dm in dmasks:
        union_d |= dm
    survivors = [w for w in range(g.n) if not union_d >> w & 1]
    pos = {w: i for i, w in enumerate(survivors)}
    t = len(survivors)
    masks = []
    for w in survivors:
        aw = g.adj_mask(w)
        m = mask_of(pos[x] for x in bits(aw & ~union_d))
        for i, dm in enumerate(dmasks):
            if aw & dm:
                m |= 1 << (t + i)
        masks.append(m)
    for dm in dmasks:
        nbrs = g.nbhd_mask(dm) & ~union_d
        masks.append(mask_of(pos[x] for x in bits(nbrs)))
    return Graph.from_masks(masks), survivors, t


def detect_f1(g: Graph, *, prune: bool = True, dcs_node_limit: int | None = None) -> Model | None:
    """F1 detection: guess the pendant u and up to seven components of G[N(u)] to be
    swallowed by X_2, contract them, guess six connecting edges, then a 4-group DCS
    instance on the contracted host minus the unguessed neighbors of u."""
    if g.n < 5:
        return None
    pat = pattern("f1")
    full = g.full_mask()
    seen: set[tuple] = set()
    for u in range(g.n):
        nu = g.adj_mask(u)
        comps = g.components_of_mask(nu)
        for size in range(1, min(7, len(comps)) + 1):
            for combo in combinations(range(len(comps)), size):
                dmasks = [comps[i] for i in combo]
                g1, survivors, t = _contract_components(g, dmasks)
                adj1 = tuple(g1.adj_mask(x) for x in range(g1.n))
                full1 = g1.full_mask()
                u1 = survivors.index(u)
                fmask = ((1 << size) - 1) << t
                nu1 = adj1[u1]
                elig = full1 & ~(nu1 | 1 << u1)
                a_pool = (fmask | elig) if prune else (full1 & ~(1 << u1))
                base_keep = elig
                for a1 in bits(a_pool):
                    for b1 in bits(adj1[a1] & elig & ~(1 << a1)):
                        for a2 in bits(a_pool & ~(1 << b1)):
                            for c1 in bits(adj1[a2] & elig & ~(1 << a1 | 1 << a2 | 1 << b1)):
                                for a3 in bits(a_pool & ~(1 << b1 | 1 << c1)):
                                    agroup = fmask | 1 << a1 | 1 << a2 | 1 << a3
                                    for d1 in bits(adj1[a3] & elig & ~(agroup | 1 << b1 | 1 << c1)):
                                        for b2 in bits(elig & ~(agroup | 1 << c1 | 1 << d1)):
                                            for c2 in bits(
                                                adj1[b2] & elig & ~(agroup | 1 << b1 | 1 << b2 | 1 << d1)
                                            ):
                                                cgroup = 1 << c1 | 1 << c2
                                                for b3 in bits(elig & ~(agroup | cgroup | 1 << d1)):
                                                    bgroup = 1 << b1 | 1 << b2 | 1 << b3
                                                    for d2 in bits(
                                                        adj1[b3] & elig & ~(agroup | bgroup | cgroup)
                                                    ):
                                                        for c3 in bits(
                                                            elig & ~(agroup | bgroup | 1 << d1 | 1 << d2)
                                                        ):
                                                            for d3 in bits(
                                                                adj1[c3]
                                                                & elig
                                                                & ~(agroup | bgroup | cgroup | 1 << c3)
                                                            ):
                                                                z1 = agroup
                                                                z2 = bgroup
                                                                z3 = cgroup | 1 << c3
                                                                z4 = 1 << d1 | 1 << d2 | 1 << d3
                                                                if prune:
                                                                    key = (u, combo, z1, z2, z3, z4)
                                                                    if key in seen:
                                                                        continue
                                                                    seen.add(key)
                                                                bags1 = _dcs_bags(
                                                                    g1,
                                                                    base_keep | z1 | z2 | z3 | z4,
                                                                    (z1, z2, z3, z4),
                                                                    dcs_node_limit,
                                                                )
                                                                if bags1 is None:
                                                                    continue
                                                                x2 = set()
                                                                for w in bags1[0]:
                                                                    if w >= t:
                                                                        x2 |= set(bits(dmasks[w - t]))
                                                                    else:
                                                                        x2.add(survivors[w])
                                                                model = Model(
                                                                    pat,
                                                                    {
                                                                        1: {u},
                                                                        2: x2,
                                                                        3: {survivors[w] for w in bags1[1]},
                                                                        4: {survivors[w] for w in bags1[2]},
                                                                        5: {survivors[w] for w in bags1[3]},
                                                                    },
                                                                )
                                                                if verify_model(g, model):
                                                                    return model
    return None


def _induced_path_masks(g: Graph, t: int):
    """Vertex masks of induced paths on t vertices, each set yielded once."""
    if t == 1:
        for v in range(g.n):
            yield 1 << v
        return
    adjm = tuple(g.adj_mask(v) for v in range(g.n))

    def extend(seq, smask, blocked):
        if len(seq) == t:
            if seq[0] < seq[-1]:
                yield smask
            return
        last = seq[-1]
        for w in bits(adjm[last] & ~blocked):
            seq.append(w)
            yield from extend(seq, smask | 1 << w, blocked | 1 << w | adjm[last])
            seq.pop()

    for v in range(g.n):
        yield from extend([v], 1 << v, 1 << v)


def detect_h_plus_path(g: Graph, base_detector: Callable[[Graph], object], t: int) -> bool:
    """Decide (H + P_t)-containment by branching over induced P_t's and testing
    H-containment of the host minus the closed neighborhood of each."""
    if t < 1:
        raise ValueError("t must be positive")
    full = g.full_mask()
    for smask in _induced_path_masks(g, t):
        keep = full & ~(smask | g.nbhd_mask(smask))
        sub, _ = g.induced_subgraph_mask(keep)
        if base_detector(sub):
            return True
    return False


def detect(g: Graph, name: str, *, prune: bool = True, dcs_node_limit: int | None = None,
           h2_stage: str = "full") -> Model | None:
    """Dispatch to the detector for a catalog pattern (name is case-insensitive)."""
    key = normalize_pattern_name(name)
    if key == "kite":
        return detect_kite(g, prune=prune, dcs_node_limit=dcs_node_limit)
    if key == "f1":
        return detect_f1(g, prune=prune, dcs_node_limit=dcs_node_limit)
    if key == "f2":
        return detect_f2(g, prune=prune, dcs_node_limit=dcs_node_limit)
    return detect_h2(g, prune=prune, stage=h2_stage)
