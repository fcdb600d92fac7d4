"""Face calculus on connected-part partitions.

A codimension-k face of the zonotope of a connected graph is an ordered
partition of the vertex set into k+1 parts, each inducing a connected
subgraph.  Facets are the 2-part case; a belt collects the 4 or 6 facets
parallel to a codimension-2 face, whose core is the unordered 3-partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .zgraph import ZGraph, bits, components

# A facet is an ordered pair of vertex bitmasks (a, b); (b, a) is the
# opposite facet.  Ordered partitions in general are tuples of bitmasks.
FacetId = tuple[int, int]


def opposite(f: FacetId) -> FacetId:
    return (f[1], f[0])


def unordered_pair(f: FacetId) -> FacetId:
    """Canonical representative of {A,B}: the part with vertex 0 first."""
    return f if f[0] & 1 else (f[1], f[0])


def partition_key(parts: tuple[int, ...]):
    """Deterministic sort key: (size of the part holding vertex 0, masks)."""
    zero_part = next(p for p in parts if p & 1)
    return (zero_part.bit_count(), parts)


def validate_partition(g: ZGraph, parts) -> tuple[int, ...]:
    """Check disjoint nonempty connected parts covering all vertices."""
    acc = 0
    for p in parts:
        if p == 0:
            raise ValueError("empty part")
        if p & acc:
            raise ValueError("parts not disjoint")
        acc |= p
        if not g.connected_in(p):
            raise ValueError("part does not induce a connected subgraph")
    if acc != g.full_mask:
        raise ValueError("parts do not cover the vertex set")
    return tuple(parts)


def _require_connected(g: ZGraph):
    if len(components(g)) != 1:
        raise ValueError("graph must be connected")


def enumerate_facets(g: ZGraph) -> list[FacetId]:
    """All ordered 2-partitions with both parts connected, sorted."""
    _require_connected(g)
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    full = g.full_mask
    out = []
    for a in range(1, full):
        b = full ^ a
        if g.connected_in(a) and g.connected_in(b):
            out.append((a, b))
    out.sort(key=partition_key)
    return out


def has_cross(g: ZGraph, a: int, b: int) -> bool:
    """Is there an edge with one endpoint in a and the other in b?"""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    return any(g.adj[v] & b for v in bits(a))


@dataclass(frozen=True)
class Belt:
    core: tuple[int, int, int]      # unordered 3-partition, masks ascending
    members: tuple[FacetId, ...]    # the 4 or 6 facets parallel to the core
    directions: int                 # nonempty crossing-edge classes, 2 or 3


def belt_of(g: ZGraph, core) -> Belt:
    """The belt of a codimension-2 core: every facet it refines."""
    p, q, r = sorted(core)
    validate_partition(g, (p, q, r))
    members = []
    for merged, rest in ((p | q, r), (p | r, q), (q | r, p)):
        if g.connected_in(merged):
            members.append((merged, rest))
            members.append((rest, merged))
    directions = sum(
        1 for x, y in ((p, q), (p, r), (q, r)) if has_cross(g, x, y)
    )
    return Belt((p, q, r), tuple(members), directions)


def enumerate_codim2(g: ZGraph) -> list[Belt]:
    """All belts, one per unordered 3-partition with connected parts."""
    _require_connected(g)
    if g.n < 3:
        raise ValueError("need at least 3 vertices")
    full = g.full_mask
    cores = []
    rest0 = full ^ 1
    # p holds vertex 0; q holds the least vertex outside p.
    sub = rest0
    while True:
        p = sub | 1
        rest = full ^ p
        if rest and g.connected_in(p):
            low = rest & -rest
            rest2 = rest ^ low
            sub2 = rest2
            while True:
                q = sub2 | low
                r = rest ^ q
                if r and g.connected_in(q) and g.connected_in(r):
                    cores.append(tuple(sorted((p, q, r))))
                if sub2 == 0:
                    break
                sub2 = (sub2 - 1) & rest2
        if sub == 0:
            break
        sub = (sub - 1) & rest0
    cores.sort(key=partition_key)
    return [belt_of(g, c) for c in cores]


def in_same_belt(g: ZGraph, f1: FacetId, f2: FacetId) -> bool:
    """Do the facet pairs {A,B} and {C,D} lie in a common belt?

    True iff exactly one of the four intersections is empty and the other
    three induce connected subgraphs.  Orientation-insensitive.
    """
    a, b = f1
    c, d = f2
    if {a, b} == {c, d}:
        raise ValueError("same facet pair")
    parts = (a & c, a & d, b & c, b & d)
    live = [p for p in parts if p]
    if len(live) != 3:
        return False
    return all(g.connected_in(p) for p in live)


def is_face_of(fine, coarse) -> bool:
    """Order-respecting incidence: coarse merges consecutive runs of fine."""
    k = 0
    for cpart in coarse:
        acc = 0
        while acc != cpart:
            if k >= len(fine) or fine[k] & ~cpart:
                return False
            acc |= fine[k]
            k += 1
    return k == len(fine)


def is_refinement(fine, coarse) -> bool:
    """Unordered family-level incidence: every fine part sits in a coarse one."""
    for fpart in fine:
        if not any(fpart & ~cpart == 0 for cpart in coarse):
            return False
    return True
