"""Dual graph adjacency and the dual-vs-belt diameter bound."""

import random

import pytest

from zonobelt.dual import build_dual, check_diameter_bound, dual_diameter, facet_adjacent
from zonobelt.faces import enumerate_codim2, enumerate_facets, in_same_belt, opposite
from zonobelt.venkov import belt_diameter
from zonobelt.zgraph import ZGraph


def path(n):
    return ZGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return ZGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def connected_random_graphs(n, count, seed, p=0.6):
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    while len(out) < count:
        g = ZGraph(n, [e for e in pairs if rng.random() < p])
        if g.connected_in(g.full_mask):
            out.append(g)
    return out


def test_cube_dual_is_octahedron():
    # the path-graph zonotope on 4 vertices is the cube
    dg = build_dual(path(4))
    assert len(dg.nodes) == 6
    assert all(adj.bit_count() == 4 for adj in dg.adj)
    # opposite facets are the unique non-neighbors
    for idx, f in enumerate(dg.nodes):
        opp = dg.nodes.index(opposite(f))
        assert not dg.adj[idx] >> opp & 1
    assert dual_diameter(path(4)) == 2


def test_dual_diameters_frozen():
    assert dual_diameter(complete(3)) == 3   # hexagon
    assert dual_diameter(complete(4)) == 3
    assert dual_diameter(path(5)) == 2


def test_facet_adjacent_basics():
    g = path(4)
    # ({0}, {123}) and ({01}, {23}): containment slot, no extra condition
    assert facet_adjacent(g, (0b0001, 0b1110), (0b0011, 0b1100))
    # a facet is never adjacent to itself or its opposite
    with pytest.raises(ValueError, match="identical"):
        facet_adjacent(g, (0b0001, 0b1110), (0b0001, 0b1110))
    assert not facet_adjacent(g, (0b0001, 0b1110), (0b1110, 0b0001))


def test_facet_adjacent_crossing_condition():
    g = complete(4)
    # K_4: {01|23} vs {23|01} both disjoint slots carry crossing edges
    assert not facet_adjacent(g, (0b0011, 0b1100), (0b1100, 0b0011))
    assert facet_adjacent(g, (0b0011, 0b1100), (0b0111, 0b1000))


def test_adjacent_facets_share_exactly_one_belt():
    for g in connected_random_graphs(5, 25, seed=21):
        belts = enumerate_codim2(g)
        dg = build_dual(g)
        for i, f1 in enumerate(dg.nodes):
            for j in range(i + 1, len(dg.nodes)):
                if not dg.adj[i] >> j & 1:
                    continue
                f2 = dg.nodes[j]
                shared = [
                    b for b in belts
                    if f1 in b.members and f2 in b.members
                ]
                assert len(shared) == 1


def test_venkov_is_dual_with_opposites_glued():
    # unordered pairs share a belt iff some orientation combo is dual-adjacent
    for g in connected_random_graphs(5, 25, seed=22):
        facets = [f for f in enumerate_facets(g) if f[0] & 1]
        for i in range(len(facets)):
            for j in range(i + 1, len(facets)):
                f1, f2 = facets[i], facets[j]
                combos = [
                    facet_adjacent(g, x, y)
                    for x in (f1, opposite(f1))
                    for y in (f2, opposite(f2))
                ]
                assert in_same_belt(g, f1, f2) == any(combos)


def test_dual_connected_on_random_graphs():
    for g in connected_random_graphs(6, 15, seed=23):
        d = dual_diameter(g)  # raises RuntimeError if the dual is disconnected
        assert d >= 1


def test_check_diameter_bound_k4():
    rep = check_diameter_bound(complete(4))
    assert rep["belt_diameter"] == 2
    assert rep["dual_diameter"] == 3
    assert rep["bound_holds"]
    w1, w2 = rep["belt_witness"]
    assert w1 in enumerate_facets(complete(4))
    assert w2 in enumerate_facets(complete(4))


def test_bound_holds_on_random_graphs():
    for g in connected_random_graphs(6, 15, seed=24):
        assert dual_diameter(g) <= belt_diameter(g) + 1
