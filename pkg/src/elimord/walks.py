"""Weighted chordless walks, cycles, and self-contained families.

A walk (v0, ..., vp) is weighted chordless in A when every consecutive
triple satisfies A_{v(i-1)v(i+1)} < min(A_{v(i-1)vi}, A_{vi v(i+1)}), i.e.
each internal element is the midpoint of a violated three-points condition
and so can never be eliminated while both neighbours remain.  A family of
walks is self-contained when every vertex it uses also appears internally
somewhere; such a family rules out any perfect elimination ordering, and a
single pair of walks of this kind is the canonical no-certificate.
"""

from dataclasses import dataclass

from .matrix import SymmetricMatrix, min_offdiag
from .orderings import is_simplicial

PAIR_BRUTEFORCE_CAP = 7


@dataclass(frozen=True)
class Walk:
    """Ordered vertex sequence, repeats allowed, at least one edge."""

    seq: tuple[int, ...]

    def __init__(self, seq):
        object.__setattr__(self, "seq", tuple(seq))
        if len(self.seq) < 2:
            raise ValueError(f"a walk needs at least two entries, got {self.seq}")

    @property
    def edge_count(self) -> int:
        return len(self.seq) - 1

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.seq[0], self.seq[-1])

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.seq)

    @property
    def internal_set(self) -> frozenset[int]:
        return frozenset(self.seq[1:-1])

    @property
    def is_closed(self) -> bool:
        return self.seq[0] == self.seq[-1]

    @property
    def is_self_contained(self) -> bool:
        return self.vertex_set == self.internal_set

    def reversed(self) -> "Walk":
        return Walk(tuple(reversed(self.seq)))

    def serialize(self) -> str:
        return " ".join(str(v) for v in self.seq)

    def __iter__(self):
        return iter(self.seq)

    def __len__(self) -> int:
        return len(self.seq)


def _as_seq(w) -> tuple[int, ...]:
    return w.seq if isinstance(w, Walk) else tuple(w)


def _triple_chordless(rows, p: int, c: int, nxt: int) -> bool:
    """Eq-style check for the triple (p, c, nxt); triples touching the
    diagonal (p == nxt, or a consecutive repeat) count as failing."""
    if p == nxt or p == c or c == nxt:
        return False
    a = rows[p][nxt]
    return a < rows[p][c] and a < rows[c][nxt]


def find_chordless_failure(a: SymmetricMatrix, walk) -> int | None:
    """Smallest internal position i at which the walk fails the weighted
    chordless condition, or None if the walk is weighted chordless."""
    seq = _as_seq(walk)
    if len(seq) < 2:
        raise ValueError("walk of length 0")
    rows = a._rows
    for i in range(1, len(seq) - 1):
        if not _triple_chordless(rows, seq[i - 1], seq[i], seq[i + 1]):
            return i
    return None


def is_weighted_chordless(a: SymmetricMatrix, walk) -> bool:
    return find_chordless_failure(a, walk) is None


def is_weighted_chordless_cycle(a: SymmetricMatrix, walk) -> bool:
    """True iff the walk is a cycle (closed, v0..v(p-1) distinct) that is
    weighted chordless including the two wrap-around triples."""
    seq = _as_seq(walk)
    if len(seq) < 2 or seq[0] != seq[-1]:
        raise ValueError(f"not a cycle: {seq}")
    body = seq[:-1]
    if len(set(body)) != len(body):
        raise ValueError(f"not a cycle: {seq}")
    if len(body) < 3:
        return False
    if find_chordless_failure(a, walk) is not None:
        return False
    # wrap-around triple (v_{p-1}, v0, v1)
    rows = a._rows
    return _triple_chordless(rows, seq[-2], seq[0], seq[1])


def is_self_contained_family(walks) -> bool:
    """True iff the union of vertex sets equals the union of internal sets."""
    walks = [w if isinstance(w, Walk) else Walk(w) for w in walks]
    if not walks:
        raise ValueError("empty walk family")
    all_vertices = frozenset().union(*(w.vertex_set for w in walks))
    all_internal = frozenset().union(*(w.internal_set for w in walks))
    return all_vertices == all_internal


def is_rooted(walk, s) -> bool:
    """True iff both end points lie in s and the (nonempty) interior avoids s."""
    seq = _as_seq(walk)
    s = frozenset(s)
    if len(seq) < 3:
        return False
    return (seq[0] in s and seq[-1] in s
            and all(v not in s for v in seq[1:-1]))


def is_critical_walk(a: SymmetricMatrix, walk, within=None) -> bool:
    """A critical walk is closed, weighted chordless, has a simplicial end
    point v0, and touches the minimum value from v0 at some internal
    element."""
    seq = _as_seq(walk)
    if len(seq) < 2 or seq[0] != seq[-1]:
        return False
    if find_chordless_failure(a, seq) is not None:
        return False
    v0 = seq[0]
    if not is_simplicial(a, v0, within=within):
        return False
    m = min_offdiag(a, within=within)
    rows = a._rows
    return any(u != v0 and rows[v0][u] == m for u in seq[1:-1])


def find_weighted_chordless_cycle(a: SymmetricMatrix, within=None) -> Walk | None:
    """Search for a weighted chordless cycle by DFS over sequences of
    distinct vertices, extending only while the chordless condition holds.

    Exponential in the worst case; intended for small matrices.  The search
    is canonicalized (smallest vertex first, direction fixed) so the result
    is deterministic.
    """
    elems = sorted(range(1, a.n + 1) if within is None else within)
    if len(elems) < 3:
        return None
    rows = a._rows

    def extend(path: list[int]) -> tuple[int, ...] | None:
        v0 = path[0]
        if len(path) >= 3:
            # try to close: wrap triples at v_{p-1} and at v0
            if (path[1] < path[-1]
                    and _triple_chordless(rows, path[-2], path[-1], v0)
                    and _triple_chordless(rows, path[-1], v0, path[1])):
                return tuple(path) + (v0,)
        for nxt in elems:
            if nxt <= v0 or nxt in seen:
                continue
            if len(path) >= 2 and not _triple_chordless(rows, path[-2], path[-1], nxt):
                continue
            path.append(nxt)
            seen.add(nxt)
            out = extend(path)
            if out is not None:
                return out
            seen.discard(nxt)
            path.pop()
        return None

    for start in elems:
        seen = {start}
        found = extend([start])
        if found is not None:
            return Walk(found)
    return None


# ---------------------------------------------------------------------------
# brute-force searches for self-contained certificates
#
# Weighted chordless walks are exactly the paths of the "extension" relation
# (prev, cur) -> (cur, nxt); the searches below run a BFS over states
# (start, prev, cur, internal-vertex-bitmask), keeping only Pareto-optimal
# masks per state so the frontier stays small.  Walk length is counted in
# edges.


def _transition_table(a: SymmetricMatrix, verts) -> dict[tuple[int, int], list[int]]:
    rows = a._rows
    table = {}
    for p in verts:
        for c in verts:
            if p == c:
                continue
            table[(p, c)] = [w for w in verts if _triple_chordless(rows, p, c, w)]
    return table


def _walk_summaries(a: SymmetricMatrix, max_edges: int):
    """All weighted chordless walks of <= max_edges edges, summarized as
    (start, end, internal-mask) with a shortest witness walk per summary.
    Dominated summaries (same endpoints, smaller mask, not shorter) are
    dropped; dominance never loses a certificate because a larger internal
    set at no extra length covers strictly more."""
    verts = list(range(1, a.n + 1))
    table = _transition_table(a, verts)
    bit = {v: 1 << v for v in verts}

    # state: (start, prev, cur) -> list of (mask, walk)
    frontier: dict[tuple[int, int, int], list[tuple[int, tuple[int, ...]]]] = {}
    for s in verts:
        for c in verts:
            if s != c:
                frontier[(s, s, c)] = [(0, (s, c))]

    summaries: dict[tuple[int, int], list[tuple[int, tuple[int, ...]]]] = {}
    best_masks: dict[tuple[int, int, int], list[int]] = {}

    def record(store, key, mask, walk) -> bool:
        kept = store.setdefault(key, [])
        for m, _ in kept:
            if m & mask == mask:  # existing superset mask, not longer (BFS order)
                return False
        kept.append((mask, walk))
        return True

    edges = 1
    while frontier and edges <= max_edges:
        for (s, p, c), items in frontier.items():
            for mask, walk in items:
                record(summaries, (s, c), mask, walk)
        if edges == max_edges:
            break
        nxt_frontier: dict[tuple[int, int, int], list[tuple[int, tuple[int, ...]]]] = {}
        for (s, p, c), items in frontier.items():
            for w in table[(p, c)]:
                key = (s, c, w)
                for mask, walk in items:
                    m2 = mask | bit[c]
                    kept = best_masks.setdefault(key, [])
                    if any(km & m2 == m2 for km in kept):
                        continue
                    kept.append(m2)
                    nxt_frontier.setdefault(key, []).append((m2, walk + (w,)))
        frontier = nxt_frontier
        edges += 1
    return summaries


def find_self_contained_walk_bruteforce(
        a: SymmetricMatrix, max_len: int | None = None) -> Walk | None:
    """A single self-contained weighted chordless walk of <= max_len edges,
    or None.  Default cap 2n + 2."""
    if a.n > PAIR_BRUTEFORCE_CAP:
        raise ValueError(f"walk search capped at n <= {PAIR_BRUTEFORCE_CAP}, got {a.n}")
    if max_len is None:
        max_len = 2 * a.n + 2
    if max_len < 3:
        raise ValueError(f"max_len must be at least 3, got {max_len}")
    summaries = _walk_summaries(a, max_len)
    best = None
    for (s, e), items in summaries.items():
        need = (1 << s) | (1 << e)
        for mask, walk in items:
            if mask & need == need:
                cand = (len(walk), walk)
                if best is None or cand < best:
                    best = cand
    return Walk(best[1]) if best else None


def find_self_contained_pair_bruteforce(
        a: SymmetricMatrix, max_len: int | None = None) -> tuple[Walk, Walk] | None:
    """A self-contained pair of weighted chordless walks of total length
    <= max_len edges, or None.  Default cap 2n + 2.

    A single self-contained walk within the cap is returned as the pair
    (W, W); a one-walk family is just a special case of the pair form.
    """
    if a.n > PAIR_BRUTEFORCE_CAP:
        raise ValueError(f"pair search capped at n <= {PAIR_BRUTEFORCE_CAP}, got {a.n}")
    if max_len is None:
        max_len = 2 * a.n + 2
    if max_len < 3:
        raise ValueError(f"max_len must be at least 3, got {max_len}")

    single = find_self_contained_walk_bruteforce(a, max_len)
    if single is not None:
        return (single, single)

    summaries = _walk_summaries(a, max_len - 1)
    flat = []
    for (s, e), items in summaries.items():
        ends = (1 << s) | (1 << e)
        for mask, walk in items:
            flat.append((len(walk) - 1, ends, mask, walk))
    flat.sort(key=lambda t: (t[0], t[3]))
    best = None
    for i, (l1, ends1, m1, w1) in enumerate(flat):
        if best is not None and 2 * l1 > best[0]:
            break  # flat is sorted by length; no shorter total can follow
        for l2, ends2, m2, w2 in flat[i:]:
            total = l1 + l2
            if total > max_len or (best is not None and total >= best[0]):
                break
            need = ends1 | ends2
            if (m1 | m2) & need == need:
                best = (total, w1, w2)
                break
    if best is None:
        return None
    return (Walk(best[1]), Walk(best[2]))


def find_self_contained_family_bruteforce(
        a: SymmetricMatrix, max_walk_len: int | None = None) -> list[Walk] | None:
    """A self-contained family of weighted chordless walks (each of at most
    max_walk_len edges), or None.  Found by a greatest-fixpoint pruning:
    repeatedly discard walks whose endpoints are not internally covered by
    the remaining ones."""
    if a.n > PAIR_BRUTEFORCE_CAP:
        raise ValueError(f"family search capped at n <= {PAIR_BRUTEFORCE_CAP}, got {a.n}")
    if max_walk_len is None:
        max_walk_len = 2 * a.n + 2
    summaries = _walk_summaries(a, max_walk_len)
    entries = []
    for (s, e), items in summaries.items():
        ends = (1 << s) | (1 << e)
        for mask, walk in items:
            entries.append((ends, mask, walk))
    while True:
        covered = 0
        for _, mask, _ in entries:
            covered |= mask
        kept = [e for e in entries if e[0] & covered == e[0]]
        if len(kept) == len(entries):
            break
        entries = kept
    if not entries:
        return None
    # greedy shrink: drop walks that are not needed for coverage
    entries.sort(key=lambda t: (len(t[2]), t[2]))
    result = list(entries)
    for e in list(result):
        trial = [f for f in result if f is not e]
        if trial and is_self_contained_family([Walk(f[2]) for f in trial]):
            result = trial
    return [Walk(w) for _, _, w in result]
