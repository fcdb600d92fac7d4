"""Exhaustive small-instance campaigns over connected graphs.

Enumerates connected graphs up to isomorphism (canonical form = minimal
adjacency bitstring over relabelings), runs the selected invariant checks,
and tabulates per-dimension results.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import dual, faces, oracle, symmetric, venkov
from .zgraph import ZGraph, dimension, min_label_perm

EXHAUSTIVE_MAX_N = 8
# connected graphs up to isomorphism on 1..8 vertices, used as a self-test
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853, 11117]

ALL_CHECKS = ("belt_bound", "dual_bound", "oracle_equiv", "leaves_iff", "belt_size")


def canonical_key(g: ZGraph) -> tuple[int, int]:
    code = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        code[i][j] = code[j][i] = 1
    key, _ = min_label_perm(g.n, code)
    return (g.n, key)


def canonical_form(g: ZGraph) -> ZGraph:
    """The relabeling of g realizing its canonical key."""
    code = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        code[i][j] = code[j][i] = 1
    _, perm = min_label_perm(g.n, code)
    slot = {v: k for k, v in enumerate(perm)}
    return ZGraph(g.n, [(slot[i], slot[j]) for i, j in g.edges])


def enumerate_connected_graphs(n: int) -> list[ZGraph]:
    """Connected graphs on n vertices up to isomorphism, canonical forms.

    Grown by attaching one vertex at a time to every smaller graph (every
    connected graph has a non-cut vertex, so this reaches everything) and
    deduplicating by canonical key.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > EXHAUSTIVE_MAX_N:
        raise ValueError("use sampled mode")
    reps = {ZGraph(1, [])}
    for k in range(1, n):
        grown = {}
        for g in reps:
            base = list(g.edges)
            for nbrs in range(1, 1 << k):
                edges = base + [(v, k) for v in range(k) if nbrs & (1 << v)]
                h = ZGraph(k + 1, edges)
                key = canonical_key(h)
                if key not in grown:
                    grown[key] = canonical_form(h)
        reps = set(grown.values())
    return sorted(reps, key=canonical_key)


def sample_connected_graphs(n: int, count: int, seed: int) -> list[ZGraph]:
    """Distinct random connected labeled graphs, edge probability 1/2."""
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = set()
    out = []
    while len(out) < count:
        edges = frozenset(e for e in pairs if rng.random() < 0.5)
        g = ZGraph(n, edges)
        if edges in seen or dimension(g) != n - 1:
            continue
        seen.add(edges)
        out.append(g)
    return out


def facet_support(g: ZGraph, pair) -> frozenset:
    """Edges internal to the two parts of a facet pair."""
    a, b = pair
    return frozenset(
        (i, j) for i, j in g.edges
        if ((1 << i) | (1 << j)) & ~a == 0 or ((1 << i) | (1 << j)) & ~b == 0
    )


def oracle_agrees(g: ZGraph) -> bool:
    """Facet sets and same-belt relations: partition calculus vs oracle."""
    pairs = [f for f in faces.enumerate_facets(g) if f[0] & 1]
    supports = [facet_support(g, f) for f in pairs]
    if sorted(supports, key=sorted) != oracle.oracle_facets(g):
        return False
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            combinatorial = faces.in_same_belt(g, pairs[i], pairs[j])
            if combinatorial != oracle.oracle_same_belt(g, supports[i], supports[j]):
                return False
    return True


@dataclass
class SweepRow:
    d: int
    instances: int = 0
    max_belt_diameter: int = 0
    max_dual_diameter: int = 0
    violations: int = 0
    witness: list = field(default_factory=list)  # edges of a belt-extremal graph
    runtime: float = 0.0


@dataclass
class SweepReport:
    max_n: int
    checks: tuple
    rows: list
    violations: list
    oracle_samples: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_graph(g: ZGraph, checks, row: SweepRow, violations: list):
    d = dimension(g)
    label = "n=%d %r" % (g.n, g.sorted_edges())
    vg = venkov.build_venkov(g)
    belt = (
        max(venkov.eccentricity(vg.adj, i) for i in range(len(vg.nodes)))
        if len(vg.nodes) > 1
        else 0
    )
    if belt > row.max_belt_diameter:
        row.max_belt_diameter = belt
        row.witness = g.sorted_edges()
    if "belt_bound" in checks:
        if belt > d - 1:
            violations.append("%s: belt diameter %d > d-1" % (label, belt))
        if 3 <= d <= 6 and belt > 2:
            violations.append("%s: belt diameter %d > 2" % (label, belt))
        if d >= 7 and belt > 3:
            violations.append("%s: belt diameter %d > 3" % (label, belt))
    dd = dual.dual_diameter(g)  # reported for every row, checked on demand
    row.max_dual_diameter = max(row.max_dual_diameter, dd)
    if "dual_bound" in checks:
        if dd > belt + 1:
            violations.append("%s: dual %d > belt %d + 1" % (label, dd, belt))
        if d <= 6 and dd > 3:
            violations.append("%s: dual diameter %d > 3" % (label, dd))
        if d >= 7 and dd > 4:
            violations.append("%s: dual diameter %d > 4" % (label, dd))
    if "belt_size" in checks:
        for belt_obj in faces.enumerate_codim2(g):
            size = len(belt_obj.members)
            if size not in (4, 6) or belt_obj.directions not in (2, 3):
                violations.append("%s: belt size %d/dirs %d" % (label, size, belt_obj.directions))
            elif (size == 6) != (belt_obj.directions == 3):
                violations.append("%s: size %d with %d directions" % (label, size, belt_obj.directions))


def run_sweep(max_n: int, checks=ALL_CHECKS, oracle_samples: int = 200,
              seed: int = 20260815, progress=None) -> SweepReport:
    checks = tuple(checks)
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise ValueError("unknown checks: %s" % ", ".join(sorted(unknown)))
    if max_n < 4:
        raise ValueError("need max_n >= 4 (dimension at least 3)")
    rows = []
    violations: list[str] = []
    for n in range(4, max_n + 1):
        start = time.monotonic()
        row = SweepRow(d=n - 1)
        for g in enumerate_connected_graphs(n):
            row.instances += 1
            _check_graph(g, checks, row, violations)
        if "oracle_equiv" in checks:
            if n <= 6:
                for g in enumerate_connected_graphs(n):
                    if not oracle_agrees(g):
                        violations.append("n=%d %r: oracle mismatch" % (n, g.sorted_edges()))
            elif n in (7, 8):
                for g in sample_connected_graphs(n, oracle_samples, seed + n):
                    if not oracle_agrees(g):
                        violations.append("n=%d %r: oracle mismatch" % (n, g.sorted_edges()))
        if "leaves_iff" in checks and 4 <= n <= 7:
            for cg in symmetric.enumerate_conjugate_classes(n):
                has_leaf = symmetric.find_common_leaf(cg) is not None
                dist = symmetric.red_blue_distance(cg)
                if (dist == 2) != has_leaf:
                    violations.append(
                        "n=%d conjugate %r/%r: distance %d, common leaf %s"
                        % (n, sorted(cg.red), sorted(cg.blue), dist, has_leaf)
                    )
        row.runtime = time.monotonic() - start
        rows.append(row)
        if progress:
            progress(row)
    return SweepReport(
        max_n=max_n,
        checks=checks,
        rows=rows,
        violations=violations,
        oracle_samples=oracle_samples if "oracle_equiv" in checks else 0,
    )


CSV_HEADER = "d,instances,max_belt_diameter,max_dual_diameter,violations"


def report_csv(report: SweepReport) -> str:
    lines = [CSV_HEADER]
    for row in report.rows:
        count = sum(1 for v in report.violations if v.startswith("n=%d " % (row.d + 1)))
        lines.append(
            "%d,%d,%d,%d,%d"
            % (row.d, row.instances, row.max_belt_diameter, row.max_dual_diameter, count)
        )
    return "\n".join(lines) + "\n"


def report_json(report: SweepReport) -> dict:
    return {
        "max_n": report.max_n,
        "checks": list(report.checks),
        "rows": [
            {
                "d": r.d,
                "instances": r.instances,
                "max_belt_diameter": r.max_belt_diameter,
                "max_dual_diameter": r.max_dual_diameter,
                "witness_edges": [list(e) for e in r.witness],
                "runtime_sec": round(r.runtime, 3),
            }
            for r in report.rows
        ],
        "violations": report.violations,
    }
