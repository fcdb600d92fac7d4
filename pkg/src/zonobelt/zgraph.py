"""Labeled simple graphs standing for zone-vector sets e_i - e_j.

A graph on n vertices (labels 0..n-1) encodes which vectors e_i - e_j are
present; a connected graph on n vertices encodes an (n-1)-dimensional
zonotope.  Vertex sets are int bitmasks throughout, so n <= 16 everywhere
(bitmasks would carry to 64, but nothing here needs more than 16).
"""

from __future__ import annotations

from typing import Iterable

MAX_N = 16


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Vertices of a bitmask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def as_mask(s) -> int:
    """Accept either a bitmask or an iterable of vertex labels."""
    if isinstance(s, int):
        return s
    return mask_of(s)


class ZGraph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "_conn")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not 1 <= n <= MAX_N:
            raise ValueError("vertex count must be in 1..%d" % MAX_N)
        adj = [0] * n
        es = set()
        for i, j in edges:
            if i == j:
                raise ValueError("loop edge (%d,%d)" % (i, j))
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError("edge endpoint out of range: (%d,%d)" % (i, j))
            if i > j:
                i, j = j, i
            es.add((i, j))
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.n = n
        self.edges = frozenset(es)
        self.adj = tuple(adj)
        self._conn: dict[int, bool] = {}

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return ((i, j) if i < j else (j, i)) in self.edges

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def connected_in(self, mask: int) -> bool:
        """Is the subgraph induced on the (nonempty) mask connected?

        Memoized per graph: partition enumeration asks this for the same
        masks over and over.
        """
        hit = self._conn.get(mask)
        if hit is not None:
            return hit
        seen = mask & -mask
        frontier = seen
        adj = self.adj
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & mask & ~seen
            seen |= frontier
        ok = seen == mask
        self._conn[mask] = ok
        return ok

    def __eq__(self, other):
        return (
            isinstance(other, ZGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "ZGraph(%d, %r)" % (self.n, self.sorted_edges())


def components(g: ZGraph) -> list[int]:
    """Connected components as bitmasks, ordered by least vertex."""
    out = []
    seen = 0
    for v in range(g.n):
        bit = 1 << v
        if seen & bit:
            continue
        comp = bit
        frontier = bit
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= g.adj[low.bit_length() - 1]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        seen |= comp
    return out


def is_connected_induced(g: ZGraph, s) -> bool:
    m = as_mask(s)
    if m == 0:
        raise ValueError("empty part")
    if m & ~g.full_mask:
        raise ValueError("vertex out of range")
    return g.connected_in(m)


def dimension(g: ZGraph) -> int:
    return g.n - len(components(g))


def _compact(v: int, hi: int, lo: int) -> int:
    if v == hi:
        return lo
    return v - 1 if v > hi else v


def contract(g: ZGraph, i: int, j: int) -> ZGraph:
    """Glue vertices i and j (an i-j edge need not exist).

    The merged vertex lands in min(i,j)'s slot, remaining labels compact
    down preserving relative order; parallel edges collapse, loops drop.
    """
    if i == j:
        raise ValueError("cannot contract a vertex with itself")
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise ValueError("vertex out of range")
    lo, hi = (i, j) if i < j else (j, i)
    new_edges = set()
    for a, b in g.edges:
        a = _compact(a, hi, lo)
        b = _compact(b, hi, lo)
        if a != b:
            new_edges.add((a, b) if a < b else (b, a))
    return ZGraph(g.n - 1, new_edges)


def contract_map(g: ZGraph, i: int, j: int) -> tuple[ZGraph, list[int]]:
    """contract() plus the old-label -> new-label map."""
    h = contract(g, i, j)
    lo, hi = (i, j) if i < j else (j, i)
    return h, [_compact(v, hi, lo) for v in range(g.n)]


def delete_edge(g: ZGraph, i: int, j: int) -> ZGraph:
    e = (i, j) if i < j else (j, i)
    if e not in g.edges:
        raise ValueError("edge (%d,%d) not present" % (i, j))
    return ZGraph(g.n, g.edges - {e})


def reduce_connected(g: ZGraph) -> ZGraph:
    """Glue components together until connected; dimension is preserved."""
    while True:
        comps = components(g)
        if len(comps) == 1:
            return g
        a = bits(comps[0])[0]
        b = bits(comps[1])[0]
        g = contract(g, a, b)


def min_label_perm(n: int, code) -> tuple[int, tuple[int, ...]]:
    """Lexicographically minimal relabeling of a symmetric code matrix.

    code[i][j] is a small int (0..3, 0 on the diagonal).  The key packs the
    cells (p0,p1), (p0,p2), (p1,p2), (p0,p3), ... two bits each, so placing
    one more vertex appends bits; branch-and-bound compares prefixes against
    the best key found so far.  Returns (key, placement) with placement[k]
    the original vertex in slot k.
    """
    if n == 1:
        return 0, (0,)
    total_bits = n * (n - 1)
    # interchangeable vertices: identical code rows away from each other
    twin = [[False] * n for _ in range(n)]
    for u in range(n):
        for w in range(u + 1, n):
            if all(code[u][x] == code[w][x] for x in range(n) if x != u and x != w):
                twin[u][w] = True

    best_key = None
    best_perm = None
    placed = []

    def dfs(key: int, used: int):
        nonlocal best_key, best_perm
        k = len(placed)
        if k == n:
            if best_key is None or key < best_key:
                best_key = key
                best_perm = tuple(placed)
            return
        cands = []
        for v in range(n):
            if used & (1 << v):
                continue
            col = 0
            for p in placed:
                col = (col << 2) | code[p][v]
            cands.append((col, v))
        cands.sort()
        tried = []
        for col, v in cands:
            if any(twin[min(u, v)][max(u, v)] for u in tried):
                tried.append(v)
                continue
            tried.append(v)
            new_key = (key << (2 * k)) | col
            if best_key is not None:
                shift = total_bits - (k + 1) * k
                if new_key > (best_key >> shift):
                    break  # cands sorted: the rest are no better
            placed.append(v)
            dfs(new_key, used | (1 << v))
            placed.pop()

    dfs(0, 0)
    return best_key, best_perm
