"""Exhaustive brute-force deciders used as ground truth for every polynomial detector."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits
from .models import Model
from .patterns import PatternGraph, pattern_from_graph

YES = "yes"
NO = "no"
BUDGET_EXCEEDED = "budget_exceeded"


class BudgetError(ValueError):
    """Input exceeds the oracle's hard host-size cap."""


@dataclass(frozen=True)
class OracleBudget:
    max_host_vertices: int = 12
    node_limit: int | None = 5_000_000

    def __post_init__(self):
        if self.max_host_vertices <= 0:
            raise ValueError("max_host_vertices must be positive")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")


@dataclass
class MinorAnswer:
    status: str
    model: Model | None = None
    nodes: int = 0


@dataclass
class WindmillAnswer:
    status: str
    p: tuple[int, ...] | None = None
    q: tuple[int, ...] | None = None
    centre: int | None = None
    nodes: int = 0


@dataclass
class HoleAnswer:
    status: str
    cycle: tuple[int, ...] | None = None


@dataclass
class PathPairAnswer:
    status: str
    p: tuple[int, ...] | None = None
    q: tuple[int, ...] | None = None


class _BudgetHit(Exception):
    pass


def brute_force_induced_minor(
    g: Graph, h: Graph | PatternGraph, budget: OracleBudget | None = None
) -> MinorAnswer:
    """Exhaustive search for an induced-minor model of h in g.

    Branches on assigning each host vertex to a bag or deleting it, pruning on
    adjacency violations, bag connectivity and bag supply. A "no" is authoritative;
    "budget_exceeded" is not evidence either way.
    """
    budget = budget or OracleBudget()
    if g.n > budget.max_host_vertices:
        raise BudgetError(f"host has {g.n} > {budget.max_host_vertices} vertices")
    pat = h if isinstance(h, PatternGraph) else pattern_from_graph("target", h)
    hg = pat.graph
    k = hg.n
    if k == 0:
        return MinorAnswer(YES, Model(pat, {}))
    if k > g.n:
        return MinorAnswer(NO)

    adjm = tuple(g.adj_mask(v) for v in range(g.n))
    full = g.full_mask()
    order = sorted(range(g.n), key=lambda v: (-adjm[v].bit_count(), v))
    suffix = [0] * (g.n + 1)
    for i in range(g.n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | 1 << order[i]

    non_nbrs = [
        [j for j in range(k) if j != i and not hg.has_edge(i, j)] for i in range(k)
    ]
    req_pairs = [(i, j) for i in range(k) for j in range(i + 1, k) if hg.has_edge(i, j)]
    req_index = {p: x for x, p in enumerate(req_pairs)}
    all_sat = (1 << len(req_pairs)) - 1

    limit = budget.node_limit
    state = {"nodes": 0, "best": None}

    def feasible(bags, comps, allowed, sat, rem):
        empties = 0
        for i in range(k):
            if not bags[i]:
                empties += 1
                if not allowed[i] & rem:
                    return False
            elif len(comps[i]) > 1:
                region = bags[i] | (allowed[i] & rem)
                if g.reach_mask(comps[i][0] & -comps[i][0], region) & bags[i] != bags[i]:
                    return False
        if empties > rem.bit_count():
            return False
        for x, (i, j) in enumerate(req_pairs):
            if sat >> x & 1:
                continue
            ai = allowed[i] & rem
            aj = allowed[j] & rem
            # the missing adjacency must come from a future vertex on one side
            # seeing the other side's bag or future candidates
            pot_j = bags[j] | aj
            hit = False
            m = ai
            while m:
                low = m & -m
                if adjm[low.bit_length() - 1] & pot_j:
                    hit = True
                    break
                m ^= low
            if not hit:
                pot_i = bags[i]
                m = aj
                while m:
                    low = m & -m
                    if adjm[low.bit_length() - 1] & pot_i:
                        hit = True
                        break
                    m ^= low
            if not hit:
                return False
        return True

    def rec(idx, bags, comps, allowed, sat):
        state["nodes"] += 1
        if limit is not None and state["nodes"] > limit:
            raise _BudgetHit
        if sat == all_sat and all(bags) and all(len(c) == 1 for c in comps):
            state["best"] = list(bags)
            return True
        if idx == g.n:
            return False
        if not feasible(bags, comps, allowed, sat, suffix[idx]):
            return False
        v = order[idx]
        vbit = 1 << v
        nb = adjm[v]
        for i in range(k):
            if not allowed[i] & vbit:
                continue
            new_bags = list(bags)
            new_bags[i] = bags[i] | vbit
            merged = vbit
            new_comp = []
            for c in comps[i]:
                if c & nb:
                    merged |= c
                else:
                    new_comp.append(c)
            new_comp.append(merged)
            new_comps = list(comps)
            new_comps[i] = new_comp
            new_allowed = [a & ~vbit for a in allowed]
            for j in non_nbrs[i]:
                new_allowed[j] &= ~nb
            new_sat = sat
            for j in range(k):
                if j != i and bags[j] & nb:
                    new_sat |= 1 << req_index[(min(i, j), max(i, j))]
            if rec(idx + 1, new_bags, new_comps, new_allowed, new_sat):
                return True
        return rec(idx + 1, bags, comps, [a & ~vbit for a in allowed], sat)

    try:
        found = rec(0, [0] * k, [[] for _ in range(k)], [full] * k, 0)
    except _BudgetHit:
        return MinorAnswer(BUDGET_EXCEEDED, nodes=state["nodes"])
    if not found:
        return MinorAnswer(NO, nodes=state["nodes"])
    bags = {i + 1: set(bits(m)) for i, m in enumerate(state["best"])}
    return MinorAnswer(YES, Model(pat, bags), nodes=state["nodes"])


# -- windmills ---------------------------------------------------------------------


def _segmented_paths(adjm, full, head, tail, end_ok, mid_ok, counter, limit):
    """Yield induced paths: ``head`` end-class vertices, >=2 mid-class, ``tail`` end-class.

    Candidate masks already exclude globally forbidden vertices.
    """

    def extend(seq, blocked, mids, tail_used):
        counter["nodes"] += 1
        if limit is not None and counter["nodes"] > limit:
            raise _BudgetHit
        length = len(seq)
        last = seq[-1]
        if tail_used == tail:
            yield tuple(seq)
            return
        base = adjm[last] & ~blocked & full
        if length < head:
            cands = base & end_ok
            for w in bits(cands):
                seq.append(w)
                yield from extend(seq, blocked | 1 << w | adjm[last], mids, 0)
                seq.pop()
            return
        if tail_used == 0:
            for w in bits(base & mid_ok):
                seq.append(w)
                yield from extend(seq, blocked | 1 << w | adjm[last], mids + 1, 0)
                seq.pop()
        if mids >= 2 or tail_used > 0:
            for w in bits(base & end_ok):
                seq.append(w)
                yield from extend(seq, blocked | 1 << w | adjm[last], mids, tail_used + 1)
                seq.pop()

    for v in bits(end_ok & full):
        yield from extend([v], 1 << v, 0, 0)


def brute_force_windmill(
    g: Graph, a: int, b: int, c: int, d: int, budget: OracleBudget | None = None
) -> WindmillAnswer:
    """Exhaustive search for an (a,b,c,d)-windmill: mutually induced paths P, Q plus a
    centre complete to their interiors and anti-complete to the four end segments."""
    if min(a, b, c, d) < 1:
        raise ValueError("windmill parameters must be positive")
    budget = budget or OracleBudget(max_host_vertices=30)
    if g.n > budget.max_host_vertices:
        raise BudgetError(f"host has {g.n} > {budget.max_host_vertices} vertices")
    adjm = tuple(g.adj_mask(v) for v in range(g.n))
    full = g.full_mask()
    counter = {"nodes": 0}
    limit = budget.node_limit
    try:
        for z in range(g.n):
            mid_ok = adjm[z]
            end_ok = full & ~(adjm[z] | 1 << z)
            for p in _segmented_paths(adjm, full, a, b, end_ok, mid_ok, counter, limit):
                if a == b and p[0] > p[-1]:
                    continue
                pmask = 0
                for v in p:
                    pmask |= 1 << v
                avoid = pmask | g.nbhd_mask(pmask)
                if (a, b) == (c, d):
                    avoid |= (2 << min(p)) - 1
                sub = full & ~avoid
                for q in _segmented_paths(adjm, sub, c, d, end_ok & sub, mid_ok & sub, counter, limit):
                    if c == d and q[0] > q[-1]:
                        continue
                    return WindmillAnswer(YES, p, q, z, nodes=counter["nodes"])
    except _BudgetHit:
        return WindmillAnswer(BUDGET_EXCEEDED, nodes=counter["nodes"])
    return WindmillAnswer(NO, nodes=counter["nodes"])


# -- holes and induced disjoint paths ------------------------------------------------


def brute_force_hole_through(g: Graph, x: int, y: int) -> HoleAnswer:
    """Decide whether some induced cycle of g passes through both x and y."""
    if x == y:
        raise ValueError("x and y must differ")
    g._check_vertex(x)
    g._check_vertex(y)
    adjm = tuple(g.adj_mask(v) for v in range(g.n))
    full = g.full_mask()
    ybit = 1 << y

    # Grow induced paths x, s, ... whose inner vertices avoid N(x); a candidate
    # adjacent to x can only close the cycle. blocked = seq plus the neighborhoods
    # of all vertices before the current last (sans x, whose adjacency closes).
    def extend(seq, seq_mask, blocked):
        last = seq[-1]
        for w in bits(adjm[last] & ~blocked & ~seq_mask):
            if adjm[x] >> w & 1:
                if (seq_mask | 1 << w) & ybit:
                    return tuple(seq) + (w,)
                continue
            if not ybit & seq_mask:
                region = (full & ~blocked & ~seq_mask) | 1 << w
                if not g.reach_mask(1 << w, region) & ybit:
                    continue
            seq.append(w)
            got = extend(seq, seq_mask | 1 << w, blocked | adjm[last])
            seq.pop()
            if got:
                return got
        return None

    for s in sorted(bits(adjm[x])):
        got = extend([x, s], 1 << x | 1 << s, 0)
        if got:
            return HoleAnswer(YES, got)
    return HoleAnswer(NO)


def brute_force_induced_disjoint_paths(
    g: Graph, x1: int, y1: int, x2: int, y2: int, budget: OracleBudget | None = None
) -> PathPairAnswer:
    """Decide whether g has mutually induced paths x1..y1 and x2..y2."""
    if len({x1, y1, x2, y2}) != 4:
        raise ValueError("the four terminals must be distinct")
    budget = budget or OracleBudget(max_host_vertices=30)
    if g.n > budget.max_host_vertices:
        raise BudgetError(f"host has {g.n} > {budget.max_host_vertices} vertices")
    adjm = tuple(g.adj_mask(v) for v in range(g.n))
    full = g.full_mask()
    counter = {"nodes": 0}
    limit = budget.node_limit

    def paths(src, dst, allowed):
        def extend(seq, blocked):
            counter["nodes"] += 1
            if limit is not None and counter["nodes"] > limit:
                raise _BudgetHit
            last = seq[-1]
            if last == dst:
                yield tuple(seq)
                return
            for w in bits(adjm[last] & allowed & ~blocked):
                seq.append(w)
                yield from extend(seq, blocked | 1 << w | adjm[last])
                seq.pop()

        if allowed >> src & 1 and allowed >> dst & 1:
            yield from extend([src], 1 << src)

    try:
        for p in paths(x1, y1, full):
            pmask = 0
            for v in p:
                pmask |= 1 << v
            region = full & ~(pmask | g.nbhd_mask(pmask))
            if region >> x2 & 1 and region >> y2 & 1:
                q = g.shortest_path_within(x2, y2, region)
                if q is not None:
                    return PathPairAnswer(YES, p, q)
    except _BudgetHit:
        return PathPairAnswer(BUDGET_EXCEEDED)
    return PathPairAnswer(NO)
