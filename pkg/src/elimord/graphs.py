"""Simple undirected graphs, weighted graphs, and graph powers."""

from collections import deque
from fractions import Fraction


class Graph:
    """Simple undirected graph on vertices 1..n (no loops, no multi-edges).

    Immutable after construction; edges are stored as (u, v) tuples with
    u < v and an adjacency map is prebuilt.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise ValueError(f"graph size must be positive, got {n}")
        self.n = n
        adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
        norm = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"loop at {u} is not allowed")
            norm.add((min(u, v), max(u, v)))
            adj[u].add(v)
            adj[v].add(u)
        self.edges = frozenset(norm)
        self._adj = adj

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    # small constructors used all over the tests

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    """Hop distances from ``source``; unreachable vertices are absent."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def connected_components(g: Graph, within=None) -> list[frozenset[int]]:
    """Components as vertex sets, ordered by smallest member."""
    todo = set(g.vertices if within is None else within)
    comps = []
    while todo:
        start = min(todo)
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in todo and w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(frozenset(seen))
        todo -= seen
    comps.sort(key=min)
    return comps


def is_connected(g: Graph) -> bool:
    return len(bfs_distances(g, 1)) == g.n


def graph_power(g: Graph, k: int) -> Graph:
    """k-th power: join pairs at hop distance <= k (never across components)."""
    if k < 1:
        raise ValueError(f"power must be at least 1, got {k}")
    edges = []
    for u in g.vertices:
        for v, d in bfs_distances(g, u).items():
            if u < v and d <= k:
                edges.append((u, v))
    return Graph(g.n, edges)


class WeightedGraph:
    """Graph with nonnegative exact edge weights.

    The associated weight matrix W carries w_xy on edges and a large value M
    on non-edges, with M = 1 + n * (max edge weight) so that M strictly
    exceeds every finite shortest-path distance.
    """

    __slots__ = ("graph", "weights")

    def __init__(self, graph: Graph, weights: dict):
        self.graph = graph
        norm = {}
        for (u, v), w in weights.items():
            if w < 0:
                raise ValueError(f"negative weight {w} on edge ({u},{v})")
            norm[(min(u, v), max(u, v))] = w
        if set(norm) != set(graph.edges):
            raise ValueError("weights must be given for exactly the edges of the graph")
        self.weights = norm

    @property
    def n(self) -> int:
        return self.graph.n

    def weight(self, u: int, v: int):
        return self.weights[(min(u, v), max(u, v))]

    @property
    def big_m(self):
        maxw = max(self.weights.values(), default=0)
        return 1 + self.n * maxw

    @classmethod
    def unit(cls, graph: Graph) -> "WeightedGraph":
        return cls(graph, {e: 1 for e in graph.edges})


def weighted_distances(wg: WeightedGraph, within=None) -> dict[tuple[int, int], object]:
    """All-pairs shortest-path distances by exact Floyd-Warshall relaxation.

    Returns {(u, v): distance} for u < v over ``within`` (default: all
    vertices), with None for pairs in different components.
    """
    verts = sorted(wg.graph.vertices if within is None else within)
    dist: dict[tuple[int, int], object] = {}
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            key = (u, v)
            dist[key] = wg.weights.get(key)
    for k in verts:
        for i, u in enumerate(verts):
            if u == k:
                continue
            duk = dist.get((min(u, k), max(u, k)))
            if duk is None:
                continue
            for v in verts[i + 1:]:
                if v == k:
                    continue
                dkv = dist.get((min(k, v), max(k, v)))
                if dkv is None:
                    continue
                through = duk + dkv
                cur = dist[(u, v)]
                if cur is None or through < cur:
                    dist[(u, v)] = through
    return dist
