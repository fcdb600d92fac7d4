"""Venkov graph: opposite-facet pairs joined when they share a belt."""

from __future__ import annotations

from .faces import FacetId, enumerate_facets, in_same_belt, unordered_pair
from .zgraph import ZGraph


class VenkovGraph:
    """Nodes are unordered facet pairs (stored with vertex 0's part first)."""

    def __init__(self, nodes: list[FacetId], adj: list[int]):
        self.nodes = nodes
        self.adj = adj                      # bitmask over node indices
        self.index = {f: i for i, f in enumerate(nodes)}

    def node_of(self, f: FacetId) -> int:
        key = unordered_pair(f)
        if key not in self.index:
            raise ValueError("not a facet of this graph: %r" % (f,))
        return self.index[key]


def build_venkov(g: ZGraph) -> VenkovGraph:
    if g.n < 3:
        raise ValueError("need at least 3 vertices")
    nodes = [f for f in enumerate_facets(g) if f[0] & 1]
    adj = [0] * len(nodes)
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if in_same_belt(g, nodes[i], nodes[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return VenkovGraph(nodes, adj)


def _bfs_masks(adj: list[int], src: int):
    """Yield (frontier mask, depth) layers of a bitmask BFS."""
    seen = 1 << src
    frontier = seen
    depth = 0
    while frontier:
        yield frontier, depth
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            m ^= low
            nxt |= adj[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
        depth += 1


def eccentricity(adj: list[int], src: int) -> int:
    return farthest(adj, src)[0]


def farthest(adj: list[int], src: int) -> tuple[int, int]:
    """(eccentricity of src, lowest-index node realizing it)."""
    last = 0
    node = src
    seen = 0
    for frontier, depth in _bfs_masks(adj, src):
        last = depth
        node = (frontier & -frontier).bit_length() - 1
        seen |= frontier
    if seen != (1 << len(adj)) - 1:
        raise RuntimeError("graph is disconnected")
    return last, node


def diameter_witness(adj: list[int]) -> tuple[int, tuple[int, int]]:
    """(diameter, first node pair realizing it)."""
    best = -1
    pair = (0, 0)
    for i in range(len(adj)):
        ecc, j = farthest(adj, i)
        if ecc > best:
            best = ecc
            pair = (i, j)
    return best, pair


def belt_distance(g: ZGraph, f1: FacetId, f2: FacetId):
    """(BFS distance between the facet pairs, one shortest belt path).

    Neighbors are computed lazily so a short distance never pays for the
    full Venkov adjacency of a large instance.
    """
    nodes = [f for f in enumerate_facets(g) if f[0] & 1]
    index = {f: i for i, f in enumerate(nodes)}
    key1, key2 = unordered_pair(f1), unordered_pair(f2)
    if key1 not in index or key2 not in index:
        raise ValueError("not a facet of this graph")
    src, dst = index[key1], index[key2]
    if src == dst:
        return 0, [nodes[src]]
    parent = {src: -1}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            fu = nodes[u]
            for v, fv in enumerate(nodes):
                if v in parent or not in_same_belt(g, fu, fv):
                    continue
                parent[v] = u
                if v == dst:
                    path = [v]
                    while path[-1] != src:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return len(path) - 1, [nodes[x] for x in path]
                nxt.append(v)
        frontier = nxt
    raise RuntimeError("facet pairs not connected in the Venkov graph")


def belt_diameter(g: ZGraph) -> int:
    vg = build_venkov(g)
    if len(vg.nodes) == 1:
        return 0
    return max(eccentricity(vg.adj, i) for i in range(len(vg.nodes)))
