"""Facet and belt combinatorics against set-based reference enumerators."""

import random
from itertools import permutations

import pytest

from zonobelt.faces import (
    belt_of,
    enumerate_codim2,
    enumerate_facets,
    has_cross,
    in_same_belt,
    is_face_of,
    is_refinement,
    opposite,
    unordered_pair,
    validate_partition,
)
from zonobelt.zgraph import ZGraph, bits, mask_of


def path(n):
    return ZGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return ZGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# reference connectivity on plain vertex sets, independent of the bitmask code
def ref_connected(edges, part):
    part = set(part)
    if not part:
        return False
    seen = {min(part)}
    frontier = [min(part)]
    while frontier:
        u = frontier.pop()
        for a, b in edges:
            if a == u and b in part and b not in seen:
                seen.add(b)
                frontier.append(b)
            elif b == u and a in part and a not in seen:
                seen.add(a)
                frontier.append(a)
    return seen == part


def ref_facets(n, edges):
    out = set()
    verts = set(range(n))
    for m in range(1, 2 ** n - 1):
        a = {v for v in range(n) if m >> v & 1}
        b = verts - a
        if ref_connected(edges, a) and ref_connected(edges, b):
            out.add((frozenset(a), frozenset(b)))
    return out


def ref_cores(n, edges):
    # unordered partitions into three connected parts
    out = set()
    for m1 in range(1, 2 ** n):
        for m2 in range(1, 2 ** n):
            if m1 & m2 or not (m1 | m2) < 2 ** n - 1:
                continue
            m3 = (2 ** n - 1) ^ m1 ^ m2
            parts = [
                {v for v in range(n) if m >> v & 1} for m in (m1, m2, m3)
            ]
            if all(ref_connected(edges, p) for p in parts):
                out.add(frozenset(frozenset(p) for p in parts))
    return out


def to_sets(f):
    return (frozenset(bits(f[0])), frozenset(bits(f[1])))


def test_opposite_and_unordered():
    f = (0b0001, 0b1110)
    assert opposite(f) == (0b1110, 0b0001)
    assert unordered_pair(f) == f
    assert unordered_pair(opposite(f)) == f


def test_validate_partition_errors():
    g = path(4)
    with pytest.raises(ValueError, match="empty part"):
        validate_partition(g, (0, 0b1111))
    with pytest.raises(ValueError, match="disjoint"):
        validate_partition(g, (0b0011, 0b0110))
    with pytest.raises(ValueError, match="cover"):
        validate_partition(g, (0b0001, 0b0110))
    with pytest.raises(ValueError, match="connected"):
        validate_partition(g, (0b1001, 0b0110))


def test_path_facets_frozen():
    assert enumerate_facets(path(4)) == [
        (1, 14), (14, 1), (3, 12), (12, 3), (7, 8), (8, 7),
    ]


def test_facet_counts():
    assert len(enumerate_facets(complete(4))) == 14
    assert len(enumerate_facets(ZGraph(4, [(0, 1), (0, 2), (0, 3)]))) == 6


def test_facets_match_reference():
    rng = random.Random(3)
    for n in (4, 5, 6):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for _ in range(30):
            edges = [p for p in pairs if rng.random() < 0.6]
            g = ZGraph(n, edges)
            try:
                ours = enumerate_facets(g)
            except ValueError:
                assert not ref_connected(edges, range(n))
                continue
            assert {to_sets(f) for f in ours} == {
                (a, b) for a, b in ref_facets(n, edges)
            }


def test_cores_match_reference():
    rng = random.Random(4)
    for n in (4, 5):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for _ in range(30):
            edges = [p for p in pairs if rng.random() < 0.6]
            g = ZGraph(n, edges)
            if not ref_connected(edges, range(n)):
                continue
            belts = enumerate_codim2(g)
            got = {
                frozenset(frozenset(bits(m)) for m in b.core) for b in belts
            }
            assert got == ref_cores(n, edges)


def test_path_cores_frozen():
    got = [(b.core, len(b.members), b.directions) for b in enumerate_codim2(path(4))]
    assert got == [
        ((1, 2, 12), 4, 2),
        ((1, 6, 8), 4, 2),
        ((3, 4, 8), 4, 2),
    ]


def test_k4_belts_all_hexagonal():
    belts = enumerate_codim2(complete(4))
    assert len(belts) == 6
    assert all(len(b.members) == 6 and b.directions == 3 for b in belts)


def test_triangle_belt():
    belts = enumerate_codim2(complete(3))
    assert len(belts) == 1
    assert belts[0].core == (1, 2, 4)
    assert len(belts[0].members) == 6
    assert belts[0].directions == 3


def test_belt_members_are_core_merges():
    g = path(5)
    for belt in enumerate_codim2(g):
        p, q, r = belt.core
        for a, b in belt.members:
            assert a | b == g.full_mask
            assert {a, b} <= {p | q, p | r, q | r, p, q, r}


def test_has_cross():
    g = path(4)
    assert has_cross(g, 0b0011, 0b1100)
    assert not has_cross(g, 0b0001, 0b0100)


def test_in_same_belt_k4():
    g = complete(4)
    assert in_same_belt(g, (0b0001, 0b1110), (0b0011, 0b1100))
    assert not in_same_belt(g, (0b0011, 0b1100), (0b0101, 0b1010))
    with pytest.raises(ValueError, match="same facet pair"):
        in_same_belt(g, (0b0011, 0b1100), (0b1100, 0b0011))


def test_in_same_belt_matches_belt_membership():
    # two facets share a belt iff some enumerated belt contains both
    rng = random.Random(5)
    pairs5 = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    for _ in range(40):
        edges = [p for p in pairs5 if rng.random() < 0.6]
        g = ZGraph(5, edges)
        if not ref_connected(edges, range(5)):
            continue
        belts = enumerate_codim2(g)
        facets = [f for f in enumerate_facets(g) if f[0] & 1]
        for i in range(len(facets)):
            for j in range(i + 1, len(facets)):
                f1, f2 = facets[i], facets[j]
                members = set()
                for b in belts:
                    got = {unordered_pair(m) for m in b.members}
                    if f1 in got and f2 in got:
                        members.add(b.core)
                assert in_same_belt(g, f1, f2) == bool(members)


def test_is_face_of_and_refinement():
    fine = (0b0001, 0b0010, 0b1100)
    assert is_face_of(fine, (0b0011, 0b1100))
    assert not is_face_of(fine, (0b0010, 0b1101))
    assert is_refinement(fine, (0b1101, 0b0010)) == is_refinement(fine, (0b0010, 0b1101))
