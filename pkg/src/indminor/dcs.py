"""Exact solver for k-Disjoint Connected Subgraphs, tuned for few small terminal sets."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits


class ResourceLimitError(RuntimeError):
    """Search exceeded its node limit; no answer is implied."""


@dataclass(frozen=True)
class DCSInstance:
    graph: Graph
    terminals: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.terminals) < 2:
            raise ValueError("need at least two terminal sets")
        seen = 0
        for z in self.terminals:
            if not z:
                raise ValueError("terminal sets must be non-empty")
            m = self.graph.set_mask(z)
            if m & seen:
                raise ValueError("terminal sets must be pairwise disjoint")
            seen |= m

    @property
    def k(self) -> int:
        return len(self.terminals)

    def bound(self) -> int:
        """The c in c-bounded: the largest terminal-set size."""
        return max(len(z) for z in self.terminals)


@dataclass(frozen=True)
class DCSSolution:
    sets: tuple[frozenset[int], ...]


def check_solution(inst: DCSInstance, sol: DCSSolution) -> bool:
    if len(sol.sets) != inst.k:
        return False
    seen = 0
    for z, s in zip(inst.terminals, sol.sets):
        if not z <= s:
            return False
        m = inst.graph.set_mask(s)
        if m & seen or not inst.graph.is_connected_mask(m):
            return False
        seen |= m
    return True


def _connectors(g: Graph, zmask: int, banned: int, state: tuple[list, int | None]):
    """Yield connected supersets of zmask avoiding ``banned``.

    Branches the lowest frontier vertex of the first component in/out; every
    inclusion-minimal connector is reached, which suffices for existence.
    """
    counter, limit = state
    full = g.full_mask()

    def rec(inmask, outmask):
        counter[0] += 1
        if limit is not None and counter[0] > limit:
            raise ResourceLimitError("dcs node limit exceeded")
        comps = g.components_of_mask(inmask)
        if len(comps) == 1:
            yield inmask
            return
        region = full & ~banned & ~outmask
        reach = g.reach_mask(comps[0] & -comps[0], region)
        for c in comps[1:]:
            if not reach & c:
                return
        frontier = g.nbhd_mask(comps[0]) & region & ~inmask
        w = frontier & -frontier
        yield from rec(inmask | w, outmask)
        yield from rec(inmask, outmask | w)

    yield from rec(zmask, 0)


def solve_dcs(inst: DCSInstance, node_limit: int | None = None) -> DCSSolution | None:
    """Find pairwise disjoint connected S_i containing the terminal sets, or None.

    Deterministic: groups are processed by index and branching picks lowest vertex
    ids first. "None" is an exhaustive answer; a node limit raises instead of lying.
    """
    g = inst.graph
    k = inst.k
    tmasks = [g.set_mask(z) for z in inst.terminals]
    later = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        later[i] = later[i + 1] | tmasks[i]
    full = g.full_mask()
    counter = [0]
    state = (counter, node_limit)

    def group_feasible(i, used):
        for j in range(i, k):
            region = full & ~used & ~(later[i] & ~tmasks[j])
            reach = g.reach_mask(tmasks[j] & -tmasks[j], region)
            if reach & tmasks[j] != tmasks[j]:
                return False
        return True

    def solve(i, used):
        if i == k:
            return []
        if not group_feasible(i, used):
            return None
        banned = used | (later[i + 1])
        for s in _connectors(g, tmasks[i], banned, state):
            rest = solve(i + 1, used | s)
            if rest is not None:
                return [s] + rest
        return None

    masks = solve(0, 0)
    if masks is None:
        return None
    return DCSSolution(tuple(frozenset(bits(m)) for m in masks))


def solve_dcs_minimal(inst: DCSInstance, node_limit: int | None = None) -> DCSSolution | None:
    """solve_dcs followed by greedy per-group vertex removal to an irredundant solution."""
    sol = solve_dcs(inst, node_limit)
    if sol is None:
        return None
    g = inst.graph
    out = []
    for z, s in zip(inst.terminals, sol.sets):
        zmask = g.set_mask(z)
        smask = g.set_mask(s)
        changed = True
        while changed:
            changed = False
            for v in sorted(bits(smask & ~zmask)):
                trial = smask & ~(1 << v)
                if g.is_connected_mask(trial):
                    smask = trial
                    changed = True
        out.append(frozenset(bits(smask)))
    return DCSSolution(tuple(out))
