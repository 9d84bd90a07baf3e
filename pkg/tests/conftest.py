"""Shared fixtures: the four golden matrices and random generators.

The golden matrices are {0,1,2}-valued weighted graphs on 4..6 vertices:

  fig_a  n=5: no simplicial element, no weighted chordless cycle, no PEO;
         (1,4,5,3,1,2,5) is a self-contained weighted chordless walk.
  fig_b  n=5: all level graphs chordal, but (1,2,3,4,5,1) is a weighted
         chordless cycle, so no PEO.
  fig_c  n=6: no simplicial element and no single self-contained walk; the
         pair ((6,2,1,3,6), (1,4,6,5,1)) is self-contained.
  fig_d  n=4: 4 is the unique simplicial element; (4,2,1,3) is a PEO.
"""

import random

import pytest

from elimord import Graph, SymmetricMatrix, WeightedGraph


def weighted_fixture(n, weight2, weight1):
    values = {p: 2 for p in weight2}
    values.update({p: 1 for p in weight1})
    return SymmetricMatrix(n, values, default=0)


@pytest.fixture
def fig_a():
    return weighted_fixture(
        5, [(1, 2), (1, 3), (3, 5), (4, 5)],
        [(1, 4), (2, 4), (2, 3), (3, 4), (2, 5)])


@pytest.fixture
def fig_b():
    return weighted_fixture(
        5, [(1, 2), (2, 3), (4, 5), (1, 5)],
        [(1, 3), (1, 4), (3, 4)])


@pytest.fixture
def fig_c():
    return weighted_fixture(
        6, [(1, 2), (1, 3), (4, 6), (5, 6)],
        [(1, 4), (1, 5), (2, 6), (3, 6), (2, 3), (3, 4), (4, 5), (2, 4), (2, 5), (3, 5)])


@pytest.fixture
def fig_d():
    return weighted_fixture(4, [(1, 2), (1, 3)], [(2, 3), (2, 4), (3, 4)])


def all_pairs(n):
    return [(x, y) for x in range(1, n + 1) for y in range(x + 1, n + 1)]


def random_matrix(rng: random.Random, n: int, values=(0, 1, 2)) -> SymmetricMatrix:
    return SymmetricMatrix(n, {p: rng.choice(values) for p in all_pairs(n)})


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [e for e in all_pairs(n) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        edges.add((min(verts[i], verts[j]), max(verts[i], verts[j])))
    edges.update(e for e in all_pairs(n) if rng.random() < p)
    return Graph(n, edges)


def random_weighted_graph(rng: random.Random, n: int, p: float, wmax: int = 4) -> WeightedGraph:
    g = random_connected_graph(rng, n, p)
    return WeightedGraph(g, {e: rng.randint(0, wmax) for e in g.edges})


def random_ultrametric(rng: random.Random, n: int) -> SymmetricMatrix:
    """Distance matrix of a random merge tree: clusters merge at strictly
    increasing heights, giving an ultrametric by construction."""
    clusters = [[v] for v in range(1, n + 1)]
    values = {}
    height = 0
    while len(clusters) > 1:
        height += rng.randint(1, 3)
        i, j = sorted(rng.sample(range(len(clusters)), 2))
        for u in clusters[i]:
            for v in clusters[j]:
                values[(min(u, v), max(u, v))] = height
        clusters[i] = clusters[i] + clusters[j]
        del clusters[j]
    return SymmetricMatrix(n, values)


def random_line_similarity(rng: random.Random, n: int):
    """Similarity matrix from points on a line: A_xy = C - |pos x - pos y|
    under a hidden permutation; the permutation is a Robinson ordering by
    construction.  Returns (matrix, robinson order as a tuple)."""
    pos = sorted(rng.randint(0, 3 * n) for _ in range(n))
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    spread = max(pos) - min(pos)
    values = {}
    for i in range(n):
        for j in range(i + 1, n):
            u, v = perm[i], perm[j]
            values[(min(u, v), max(u, v))] = spread - abs(pos[i] - pos[j])
    return SymmetricMatrix(n, values), tuple(perm)
