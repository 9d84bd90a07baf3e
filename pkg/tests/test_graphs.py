"""Graph powers and exact shortest-path matrices."""

import random

import pytest

from elimord import (
    Graph,
    SymmetricMatrix,
    WeightedGraph,
    bfs_distances,
    graph_distance_matrix,
    graph_power,
    shortest_path_matrix,
)

from conftest import all_pairs, random_graph


def test_power_of_path():
    assert graph_power(Graph.path(4), 2) == Graph(
        4, [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4)])


def test_power_beyond_diameter_is_component_clique():
    g = Graph(6, [(1, 2), (2, 3), (4, 5)])  # components {1,2,3}, {4,5}, {6}
    p = graph_power(g, 10)
    assert p == Graph(6, [(1, 2), (1, 3), (2, 3), (4, 5)])


def test_power_c5_squared_is_complete():
    c5 = Graph.cycle(5)
    # independent oracle: brute-force BFS distances
    dist = {v: bfs_distances(c5, v) for v in c5.vertices}
    expected = Graph(5, [(u, v) for u, v in all_pairs(5) if dist[u][v] <= 2])
    assert expected == Graph.complete(5)
    assert graph_power(c5, 2) == expected


def test_power_monotone():
    rng = random.Random(5)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 9), 0.3)
        prev = graph_power(g, 1)
        for k in range(2, 5):
            cur = graph_power(g, k)
            assert prev.edges <= cur.edges
            prev = cur


def test_shortest_paths_unweighted_path():
    d = shortest_path_matrix(WeightedGraph.unit(Graph.path(4)))
    assert d[1, 4] == 3 and d[1, 3] == 2 and d[2, 3] == 1


def test_shortest_paths_relaxation():
    wg = WeightedGraph(Graph.complete(3), {(1, 2): 1, (2, 3): 1, (1, 3): 5})
    assert shortest_path_matrix(wg)[1, 3] == 2


def test_shortest_paths_sentinel():
    wg = WeightedGraph(Graph(4, [(1, 2)]), {(1, 2): 3})
    d = shortest_path_matrix(wg)
    assert d[1, 2] == 3
    assert d[1, 3] == d[3, 4] == 1 + 4 * 3


def test_negative_weight_rejected():
    with pytest.raises(ValueError, match="negative"):
        WeightedGraph(Graph(2, [(1, 2)]), {(1, 2): -1})


def test_shortest_paths_match_bfs_and_triangle_inequality():
    rng = random.Random(6)
    for _ in range(100):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, 0.4)
        d = graph_distance_matrix(g)
        dist = {v: bfs_distances(g, v) for v in g.vertices}
        for u, v in all_pairs(n):
            if v in dist[u]:
                assert d[u, v] == dist[u][v]
            else:
                assert d[u, v] == n + 1
        for x, y in all_pairs(n):
            for z in g.vertices:
                if z != x and z != y:
                    assert d[x, y] <= d[x, z] + d[z, y]


def test_fig_c_shift_is_shortest_path_matrix(fig_c):
    """D = 3 - A for the six-vertex golden matrix satisfies the triangle
    inequality, so the complete graph weighted by D reproduces D."""
    d = SymmetricMatrix(6, {(x, y): 3 - fig_c[x, y] for x, y in all_pairs(6)})
    wg = WeightedGraph(Graph.complete(6), {p: d[p] for p in all_pairs(6)})
    assert shortest_path_matrix(wg) == d
