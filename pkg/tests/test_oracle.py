"""Rank-based facet oracle: exact arithmetic route, independent of faces."""

import random

import pytest

from zonobelt.oracle import (
    OracleBudgetError,
    exact_rank,
    oracle_facets,
    oracle_same_belt,
    zone_matrix,
)
from zonobelt.zgraph import ZGraph, dimension


def path(n):
    return ZGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return ZGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_zone_matrix_entries():
    rows = zone_matrix(path(3))
    assert [list(r) for r in rows] == [[1, -1, 0], [0, 1, -1]]


def test_exact_rank_small():
    assert exact_rank([[1, -1, 0], [0, 1, -1], [1, 0, -1]]) == 2
    assert exact_rank([]) == 0
    assert exact_rank([[0, 0]]) == 0


def test_rank_equals_dimension_random():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randrange(2, 9)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        g = ZGraph(n, [p for p in pairs if rng.random() < 0.5])
        assert exact_rank(zone_matrix(g)) == dimension(g)


def test_oracle_facets_path():
    got = oracle_facets(path(4))
    assert got == [
        frozenset({(0, 1), (1, 2)}),
        frozenset({(0, 1), (2, 3)}),
        frozenset({(1, 2), (2, 3)}),
    ]


def test_oracle_facets_k4_count():
    assert len(oracle_facets(complete(4))) == 7


def test_oracle_facets_star():
    g = ZGraph(4, [(0, 1), (0, 2), (0, 3)])
    got = oracle_facets(g)
    assert got == [
        frozenset({(0, 1), (0, 2)}),
        frozenset({(0, 1), (0, 3)}),
        frozenset({(0, 2), (0, 3)}),
    ]


def test_oracle_same_belt_path():
    g = path(4)
    s1 = frozenset({(0, 1), (1, 2)})   # internal edges of {012 | 3}
    s2 = frozenset({(0, 1), (2, 3)})   # internal edges of {01 | 23}
    assert oracle_same_belt(g, s1, s2)
    with pytest.raises(ValueError, match="identical"):
        oracle_same_belt(g, s1, frozenset(s1))


def test_oracle_same_belt_k4_disjoint_supports():
    g = complete(4)
    s1 = frozenset({(0, 1), (2, 3)})
    s2 = frozenset({(0, 2), (1, 3)})
    assert not oracle_same_belt(g, s1, s2)


def test_budget_cap():
    with pytest.raises(OracleBudgetError):
        oracle_facets(complete(16))
