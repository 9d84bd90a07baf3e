"""Checkers for the ordering classes around perfect elimination orderings:
ultrametrics, Robinson / interval / cocomparability orderings, chordality by
maximum cardinality search, chordal graph powers, and distance-preserving
elimination orderings.

The three-point conditions, for x before y before z under the order:

    Robinson         A_xz <= min(A_xy, A_yz)
    interval         A_xz <= A_yz
    cocomparability  A_xz <= max(A_xy, A_yz)
    PEO              A_yz >= min(A_xy, A_xz)

Robinson implies interval implies both PEO and cocomparability, which is the
matrix shadow of: unit interval graphs are interval graphs are chordal and
cocomparability graphs.
"""

import itertools
from collections import deque
from dataclasses import dataclass

from .graphs import Graph, WeightedGraph, graph_power, weighted_distances
from .matrix import (
    SymmetricMatrix,
    adjacency_matrix,
    disconnected_sentinel,
    graph_distance_matrix,
    level_decomposition,
)
from .orderings import (
    BRUTEFORCE_CAP,
    LinearOrder,
    TripleViolation,
    every_order_is_peo,
    find_peo_violation,
    find_simplicial,
    greedy_peo,
    is_peo,
)
from .walks import find_weighted_chordless_cycle


# ---------------------------------------------------------------------------
# ultrametrics


def find_ultrametric_violation(d: SymmetricMatrix) -> tuple[int, int, int] | None:
    """A triple (x, y, z) with D_yz > max(D_xy, D_xz), scanning all three
    rotations of every unordered triple; None when D is an ultrametric."""
    rows = d._rows
    for _, _, v in d.pairs():
        if v < 0:
            raise ValueError("distance matrices must be nonnegative")
    for x in range(1, d.n + 1):
        rx = rows[x]
        for y in range(1, d.n + 1):
            if y == x:
                continue
            ry = rows[y]
            dxy = rx[y]
            for z in range(y + 1, d.n + 1):
                if z == x:
                    continue
                if ry[z] > dxy and ry[z] > rx[z]:
                    return (x, y, z)
    return None


def is_ultrametric(d: SymmetricMatrix) -> bool:
    return find_ultrametric_violation(d) is None


# ---------------------------------------------------------------------------
# ordered three-point classes


def _scan_order(a: SymmetricMatrix, pi: LinearOrder, bad) -> TripleViolation | None:
    if pi.n != a.n:
        raise ValueError(f"order over {pi.n} indices does not match matrix size {a.n}")
    seq, rows = pi.seq, a._rows
    n = len(seq)
    for i in range(n - 2):
        x = seq[i]
        rx = rows[x]
        for j in range(i + 1, n - 1):
            y = seq[j]
            ry = rows[y]
            axy = rx[y]
            for k in range(j + 1, n):
                z = seq[k]
                if bad(rx[z], axy, ry[z]):
                    return TripleViolation(x, y, z)
    return None


def find_robinson_violation(a: SymmetricMatrix, pi: LinearOrder) -> TripleViolation | None:
    return _scan_order(a, pi, lambda axz, axy, ayz: axz > axy or axz > ayz)


def is_robinson_ordering(a: SymmetricMatrix, pi: LinearOrder) -> bool:
    return find_robinson_violation(a, pi) is None


def find_interval_violation(a: SymmetricMatrix, pi: LinearOrder) -> TripleViolation | None:
    return _scan_order(a, pi, lambda axz, axy, ayz: axz > ayz)


def is_interval_ordering(a: SymmetricMatrix, pi: LinearOrder) -> bool:
    return find_interval_violation(a, pi) is None


def find_cocomparability_violation(a: SymmetricMatrix, pi: LinearOrder) -> TripleViolation | None:
    return _scan_order(a, pi, lambda axz, axy, ayz: axz > axy and axz > ayz)


def is_cocomparability_ordering(a: SymmetricMatrix, pi: LinearOrder) -> bool:
    return find_cocomparability_violation(a, pi) is None


_CLASS_CHECKS = {
    "robinson": is_robinson_ordering,
    "interval": is_interval_ordering,
    "cocomparability": is_cocomparability_ordering,
    "peo": is_peo,
}


def brute_force_class_recognition(a: SymmetricMatrix, cls: str) -> LinearOrder | None:
    """Some order passing the class check, by n! enumeration (n <= 9)."""
    if cls not in ("robinson", "interval", "cocomparability"):
        raise ValueError(f"unknown ordering class {cls!r}")
    if a.n > BRUTEFORCE_CAP:
        raise ValueError(f"brute-force recognition capped at n <= {BRUTEFORCE_CAP}, got {a.n}")
    check = _CLASS_CHECKS[cls]
    for perm in itertools.permutations(range(1, a.n + 1)):
        pi = LinearOrder(perm)
        if check(a, pi):
            return pi
    return None


# ---------------------------------------------------------------------------
# chordality by maximum cardinality search


def mcs_order(g: Graph) -> LinearOrder:
    """Maximum cardinality search, smallest index on ties; the reversed
    visit order is a perfect elimination ordering iff the graph is chordal."""
    weight = {v: 0 for v in g.vertices}
    unnumbered = set(g.vertices)
    visit = []
    for _ in range(g.n):
        z = min(unnumbered, key=lambda v: (-weight[v], v))
        unnumbered.discard(z)
        visit.append(z)
        for y in g.neighbors(z):
            if y in unnumbered:
                weight[y] += 1
    return LinearOrder(reversed(visit))


def _grow_chordless_cycle(g: Graph, x: int, y: int, z: int) -> tuple[int, ...] | None:
    """Shortest y-z path avoiding N[x] away from y, z; with the edges xy and
    xz this closes into a chordless cycle of length >= 4."""
    blocked = (g.neighbors(x) | {x}) - {y, z}
    parent = {y: None}
    queue = deque([y])
    while queue:
        u = queue.popleft()
        if u == z:
            path = []
            while u is not None:
                path.append(u)
                u = parent[u]
            return (x,) + tuple(reversed(path))
        for w in sorted(g.neighbors(u)):
            if w not in blocked and w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def _cycle_is_chordless(g: Graph, cyc: tuple[int, ...]) -> bool:
    p = len(cyc)
    if p < 4 or len(set(cyc)) != p:
        return False
    for i in range(p):
        for j in range(i + 1, p):
            adjacent = j - i == 1 or (i == 0 and j == p - 1)
            if g.has_edge(cyc[i], cyc[j]) != adjacent:
                return False
    return True


def find_chordless_cycle(g: Graph) -> tuple[int, ...] | None:
    """A chordless cycle of length >= 4, or None iff the graph is chordal.

    One MCS sweep produces an order; if it verifies as a PEO the graph is
    chordal.  Otherwise the violating triple (or, failing that, some triple
    x with nonadjacent neighbours y, z) grows into an explicit cycle.
    """
    if g.n < 4:
        return None
    viol = find_peo_violation(adjacency_matrix(g), mcs_order(g))
    if viol is None:
        return None
    cyc = _grow_chordless_cycle(g, viol.x, viol.y, viol.z)
    if cyc is not None and _cycle_is_chordless(g, cyc):
        return cyc
    for x in g.vertices:
        nbrs = sorted(g.neighbors(x))
        for i, y in enumerate(nbrs):
            for z in nbrs[i + 1:]:
                if not g.has_edge(y, z):
                    cyc = _grow_chordless_cycle(g, x, y, z)
                    if cyc is not None and _cycle_is_chordless(g, cyc):
                        return cyc
    raise RuntimeError("MCS order failed verification but no chordless cycle found")


def is_chordal(g: Graph) -> bool:
    return find_chordless_cycle(g) is None


# ---------------------------------------------------------------------------
# chordal powers


@dataclass(frozen=True)
class PowerCorollaryReport:
    """The four equivalent statements about -D_G for a graph G: a PEO
    exists, no weighted chordless cycle exists, all level graphs are
    chordal, and G together with G^2 is chordal."""

    peo_exists: bool
    no_weighted_chordless_cycle: bool
    levels_chordal: bool
    g_and_g2_chordal: bool

    @property
    def consistent(self) -> bool:
        return (self.peo_exists == self.no_weighted_chordless_cycle
                == self.levels_chordal == self.g_and_g2_chordal)


def check_power_corollary(g: Graph) -> PowerCorollaryReport:
    if g.n < 2:
        raise ValueError("power corollary needs at least two vertices")
    neg = graph_distance_matrix(g).negated()
    dec = level_decomposition(neg)
    return PowerCorollaryReport(
        peo_exists=greedy_peo(neg) is not None,
        no_weighted_chordless_cycle=find_weighted_chordless_cycle(neg) is None,
        levels_chordal=all(is_chordal(lvl) for lvl in dec.levels),
        g_and_g2_chordal=is_chordal(g) and is_chordal(graph_power(g, 2)),
    )


@dataclass(frozen=True)
class PowerChordalityReport:
    """Chordality of G^k for k = 1..k_max; once chordal, every second power
    after stays chordal, and ``consistent`` flags whether that held."""

    chordal_by_power: tuple[bool, ...]

    @property
    def consistent(self) -> bool:
        seq = self.chordal_by_power
        return not any(seq[k] and not seq[k + 2] for k in range(len(seq) - 2))


def duchet_power_check(g: Graph, k_max: int) -> PowerChordalityReport:
    if k_max < 3:
        raise ValueError(f"k_max must be at least 3, got {k_max}")
    flags = tuple(is_chordal(graph_power(g, k)) for k in range(1, k_max + 1))
    return PowerChordalityReport(flags)


# ---------------------------------------------------------------------------
# distance-preserving elimination orderings


def find_distance_preservation_failure(wg: WeightedGraph, pi: LinearOrder) -> int | None:
    """Smallest i >= 1 such that after eliminating the first i vertices of
    the order, the induced weighted subgraph is no longer isometric in the
    full shortest-path metric; None when the order is distance-preserving."""
    if pi.n != wg.n:
        raise ValueError(f"order over {pi.n} indices does not match graph size {wg.n}")
    sentinel = disconnected_sentinel(wg)
    full = weighted_distances(wg)
    for i in range(1, pi.n - 1):
        suffix = pi.seq[i:]
        sub = weighted_distances(wg, within=suffix)
        for key, dsub in sub.items():
            dfull = full[key]
            if (sentinel if dsub is None else dsub) != (sentinel if dfull is None else dfull):
                return i
    return None


def is_distance_preserving_order(wg: WeightedGraph, pi: LinearOrder) -> bool:
    return find_distance_preservation_failure(wg, pi) is None


# ---------------------------------------------------------------------------
# combined classification report


@dataclass(frozen=True)
class OrderingClassReport:
    """Flags for one similarity matrix: whether every order works (the
    ultrametric case for the negated matrix), per-level chordality,
    weighted-chordless-cycle presence, PEO existence, a simplicial element,
    plus brute-force ordering-class existence flags on small instances."""

    n: int
    ultrametric: bool
    levels_chordal: tuple[bool, ...]
    has_weighted_chordless_cycle: bool
    peo: LinearOrder | None
    simplicial: int | None
    single_walk_certificate: bool | None = None
    robinson_exists: bool | None = None
    interval_exists: bool | None = None
    cocomparability_exists: bool | None = None

    def __post_init__(self):
        flags = (self.robinson_exists, self.interval_exists, self.cocomparability_exists)
        if None not in flags:
            peo_exists = self.peo is not None
            chain_ok = ((not self.robinson_exists or self.interval_exists)
                        and (not self.interval_exists or (peo_exists and self.cocomparability_exists)))
            if not chain_ok:
                raise RuntimeError("ordering-class implication chain violated")

    @property
    def peo_exists(self) -> bool:
        return self.peo is not None


def classify(a: SymmetricMatrix, oracle_cap: int = 7,
             max_len: int | None = None) -> OrderingClassReport:
    """Classification of a similarity matrix; brute-force flags are filled
    only up to ``oracle_cap`` indices and left None beyond it."""
    from .walks import find_self_contained_walk_bruteforce

    dec = level_decomposition(a) if a.n >= 2 else None
    small = a.n <= oracle_cap
    return OrderingClassReport(
        n=a.n,
        ultrametric=every_order_is_peo(a),
        levels_chordal=tuple(is_chordal(lvl) for lvl in dec.levels[1:]) if dec else (),
        has_weighted_chordless_cycle=find_weighted_chordless_cycle(a) is not None,
        peo=greedy_peo(a),
        simplicial=find_simplicial(a),
        single_walk_certificate=(
            find_self_contained_walk_bruteforce(a, max_len) is not None if small else None),
        robinson_exists=(
            brute_force_class_recognition(a, "robinson") is not None if small else None),
        interval_exists=(
            brute_force_class_recognition(a, "interval") is not None if small else None),
        cocomparability_exists=(
            brute_force_class_recognition(a, "cocomparability") is not None if small else None),
    )
