"""Planted instances, random corpora and the detector-vs-oracle differential driver."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from .detectors import detect
from .graphs import Graph, encode_graph6, gnp_random_graph
from .models import Model, verify_model
from .oracle import BUDGET_EXCEEDED, OracleBudget, brute_force_induced_minor
from .patterns import normalize_pattern_name, pattern
from .smallgraphs import nonisomorphic_graphs


@dataclass(frozen=True)
class PlantSpec:
    pattern: str
    n: int
    bag_sizes: tuple[int, ...]
    noise: float = 0.0
    seed: int = 0


def _spread(size: int, count: int) -> list[int]:
    if count <= 1 or size == 1:
        return [0] * count
    return [round(i * (size - 1) / (count - 1)) for i in range(count)]


def plant_model(spec: PlantSpec) -> tuple[Graph, Model]:
    """Build a host containing a known model: bags are induced paths, bag pairs are
    wired exactly along pattern edges, and noise never joins non-adjacent bags."""
    pat = pattern(spec.pattern)
    k = len(pat.labels)
    if len(spec.bag_sizes) != k:
        raise ValueError(f"need {k} bag sizes for {pat.name}")
    if any(s < 1 for s in spec.bag_sizes):
        raise ValueError("bag sizes must be at least 1")
    if sum(spec.bag_sizes) > spec.n:
        raise ValueError("bag sizes exceed the host size")
    if not 0 <= spec.noise <= 1:
        raise ValueError("noise must be a probability")

    bags: dict[int, list[int]] = {}
    label_of: dict[int, int] = {}
    nxt = 0
    for y, size in zip(pat.labels, spec.bag_sizes):
        bags[y] = list(range(nxt, nxt + size))
        for v in bags[y]:
            label_of[v] = y
        nxt += size

    edges = set()
    for y in pat.labels:
        vs = bags[y]
        edges.update((vs[i], vs[i + 1]) for i in range(len(vs) - 1))
    for y in pat.labels:
        zs = sorted(pat.neighbors_of_label(y))
        spots = _spread(len(bags[y]), len(zs))
        for z, pos in zip(zs, spots):
            if z < y:
                continue
            back = sorted(pat.neighbors_of_label(z))
            zpos = _spread(len(bags[z]), len(back))[back.index(y)]
            a, b = bags[y][pos], bags[z][zpos]
            edges.add((min(a, b), max(a, b)))

    rng = random.Random(spec.seed)
    for i in range(spec.n):
        for j in range(i + 1, spec.n):
            yi, yj = label_of.get(i), label_of.get(j)
            if yi is not None and yj is not None and yi != yj and not pat.has_edge(yi, yj):
                continue
            if (i, j) not in edges and rng.random() < spec.noise:
                edges.add((i, j))

    g = Graph(spec.n, sorted(edges))
    model = Model(pat, {y: set(vs) for y, vs in bags.items()})
    if not verify_model(g, model):
        raise AssertionError("planted model failed verification")
    return g, model


def exhaustive_corpus(max_n: int) -> list[Graph]:
    out = []
    for n in range(1, max_n + 1):
        out.extend(nonisomorphic_graphs(n))
    return out


def gnp_corpus(count: int, sizes, densities, seed: int) -> list[Graph]:
    """Deterministic list of G(n,p) samples cycling over the given sizes/densities."""
    sizes = list(sizes)
    densities = list(densities)
    out = []
    for i in range(count):
        n = sizes[i % len(sizes)]
        p = densities[i % len(densities)]
        out.append(gnp_random_graph(n, p, seed + i))
    return out


@dataclass
class RunReport:
    pattern: str
    records: list[dict] = field(default_factory=list)
    timings: list[float] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def mismatches(self) -> int:
        return sum(1 for r in self.records if r["agree"] is False)

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.records if r["oracle"] == "skipped")

    @property
    def passes(self) -> int:
        return sum(1 for r in self.records if r["agree"] is True)

    def summary(self) -> dict:
        return {
            "pattern": self.pattern,
            "total": self.total,
            "pass": self.passes,
            "mismatch": self.mismatches,
            "skipped": self.skipped,
        }

    def canonical_text(self) -> str:
        """Reproducible serialization: per-instance lines plus a summary, no timings."""
        lines = [json.dumps(r, sort_keys=True) for r in self.records]
        lines.append(json.dumps({"summary": self.summary()}, sort_keys=True))
        return "\n".join(lines) + "\n"


def _diff_record(pattern_name, idx, g, budget, prune):
    pat = pattern(pattern_name)
    start = time.perf_counter()
    model = detect(g, pattern_name, prune=prune)
    det = "yes" if model is not None else "no"
    model_ok = verify_model(g, model) if model is not None else None
    if g.n > budget.max_host_vertices:
        orc = "skipped"
    else:
        ans = brute_force_induced_minor(g, pat, budget)
        orc = "skipped" if ans.status == BUDGET_EXCEEDED else ans.status
    agree = None if orc == "skipped" else (det == orc)
    elapsed = time.perf_counter() - start
    record = {
        "pattern": pattern_name,
        "index": idx,
        "n": g.n,
        "graph6": encode_graph6(g),
        "detector": det,
        "model_ok": model_ok,
        "model": None if model is None else {str(y): sorted(b) for y, b in sorted(model.bags.items())},
        "oracle": orc,
        "agree": agree,
    }
    return record, elapsed


def _diff_worker(args):
    pattern_name, idx, g6, max_n, node_limit, prune = args
    from .graphs import parse_graph6

    budget = OracleBudget(max_host_vertices=max_n, node_limit=node_limit)
    return _diff_record(pattern_name, idx, parse_graph6(g6), budget, prune)


def run_differential(
    pattern_name: str,
    graphs: list[Graph],
    *,
    budget: OracleBudget | None = None,
    prune: bool = True,
    jobs: int = 1,
) -> RunReport:
    """Run detector and oracle over a corpus; oracle blowups count as skips, never passes."""
    pattern_name = normalize_pattern_name(pattern_name)
    budget = budget or OracleBudget()
    report = RunReport(pattern_name)
    if jobs > 1:
        import multiprocessing

        args = [
            (pattern_name, i, encode_graph6(g), budget.max_host_vertices, budget.node_limit, prune)
            for i, g in enumerate(graphs)
        ]
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            results = pool.map(_diff_worker, args)
    else:
        results = [_diff_record(pattern_name, i, g, budget, prune) for i, g in enumerate(graphs)]
    for record, elapsed in results:
        report.records.append(record)
        report.timings.append(elapsed)
    return report
