"""Separations of a symmetric matrix.

A pair (X, Y) of subsets covering the index set is a separation of A when
X \\ Y and Y \\ X are nonempty and every cross pair takes the minimum
off-diagonal value.  Separations are found through the auxiliary graph H
whose edges are the pairs with value strictly above the minimum: components
of H, or components after removing a minimal vertex separator of H, give
the two sides.

Each separation produced here comes with the walk property (P): from any
element u of one side to any element s of the intersection, either A_us
exceeds the minimum or there is a weighted chordless walk from u to s inside
that side whose interior avoids the intersection.  (For the (a, b) form the
property is guaranteed for u in the components of a and b.)
"""

from collections import deque
from dataclasses import dataclass

from .matrix import SymmetricMatrix, min_offdiag


@dataclass(frozen=True)
class Separation:
    x: frozenset[int]
    y: frozenset[int]

    @property
    def intersection(self) -> frozenset[int]:
        return self.x & self.y

    @property
    def x_only(self) -> frozenset[int]:
        return self.x - self.y

    @property
    def y_only(self) -> frozenset[int]:
        return self.y - self.x

    def sides(self):
        return (self.x, self.y)


def h_adjacency(a: SymmetricMatrix, within, minval) -> dict[int, set[int]]:
    """Adjacency of the graph H on ``within`` with edges where A > minval."""
    elems = sorted(within)
    rows = a._rows
    adj: dict[int, set[int]] = {v: set() for v in elems}
    for i, u in enumerate(elems):
        ru = rows[u]
        for v in elems[i + 1:]:
            if ru[v] > minval:
                adj[u].add(v)
                adj[v].add(u)
    return adj


def _components(adj: dict[int, set[int]], removed=frozenset()) -> list[frozenset[int]]:
    todo = {v for v in adj if v not in removed}
    comps = []
    while todo:
        start = min(todo)
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w in todo and w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(frozenset(seen))
        todo -= seen
    comps.sort(key=min)
    return comps


def _component_of(adj, v, removed=frozenset()) -> frozenset[int]:
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def minimal_ab_separator(adj: dict[int, set[int]], a: int, b: int) -> frozenset[int]:
    """Minimal (a, b)-vertex separator: the neighbours of a adjacent to the
    component of b in H minus the closed neighbourhood of a.  Every element
    of the result has neighbours in both the a-side and the b-side, and the
    result is empty exactly when a and b sit in different components."""
    if b in adj[a]:
        raise ValueError(f"{a} and {b} are adjacent in H; no separator exists")
    closed = adj[a] | {a}
    comp_b = _component_of(adj, b, removed=closed)
    return frozenset(s for s in adj[a] if adj[s] & comp_b)


def _prune_to_stable(adj, sep: frozenset[int]) -> frozenset[int]:
    """Shrink a separator until removing any single element reconnects H.
    At that point every separator element has a neighbour in every component
    of H minus the separator, which is what the walk property (P) needs."""
    sep = set(sep)
    changed = True
    while changed:
        changed = False
        for s in sorted(sep):
            smaller = frozenset(sep - {s})
            if len(_components(adj, removed=smaller)) > 1:
                sep.discard(s)
                changed = True
                break
    return frozenset(sep)


def find_separation(a: SymmetricMatrix, sep_a: int | None = None,
                    sep_b: int | None = None, within=None) -> Separation | None:
    """A separation of A (restricted to ``within``), with property (P).

    With ``sep_a``/``sep_b`` given (a pair realizing the minimum value), the
    separation puts them on opposite sides via a minimal (a, b)-separator of
    H.  Without them, H's structure decides: a component split if H is
    disconnected, otherwise a fully pruned minimal separator seeded at the
    lexicographically smallest minimum pair.

    Returns None only in the degenerate case that no separation exists,
    which cannot happen for two or more indices.
    """
    elems = frozenset(range(1, a.n + 1) if within is None else within)
    if len(elems) < 2:
        raise ValueError("a separation needs at least two indices")
    minval = min_offdiag(a, within=elems)
    if (sep_a is None) != (sep_b is None):
        raise ValueError("give both endpoints or neither")
    adj = h_adjacency(a, elems, minval)

    if sep_a is not None:
        if sep_a not in elems or sep_b not in elems or sep_a == sep_b:
            raise ValueError(f"bad separation pair ({sep_a},{sep_b})")
        if a._rows[sep_a][sep_b] != minval:
            raise ValueError(
                f"pair ({sep_a},{sep_b}) does not realize the minimum value {minval}")
        sep = minimal_ab_separator(adj, sep_a, sep_b)
        comp = _component_of(adj, sep_a, removed=sep)
        return Separation(x=comp | sep, y=elems - comp)

    comps = _components(adj)
    if len(comps) > 1:
        first = comps[0]
        return Separation(x=first, y=elems - first)
    # H connected: it cannot be complete, since a minimum pair is a non-edge.
    pa, pb = min((x, y) for x in sorted(elems) for y in sorted(elems)
                 if x < y and a._rows[x][y] == minval)
    sep = _prune_to_stable(adj, minimal_ab_separator(adj, pa, pb))
    if not sep:
        return None  # unreachable for a connected H; kept as a guard
    comp = _component_of(adj, pa, removed=sep)
    return Separation(x=comp | sep, y=elems - comp)


def separation_is_valid(a: SymmetricMatrix, sep: Separation, within=None) -> bool:
    """Type invariants: both proper parts nonempty, the two sides cover the
    index set, and every cross pair attains the minimum value."""
    elems = frozenset(range(1, a.n + 1) if within is None else within)
    if sep.x | sep.y != elems:
        return False
    xo, yo = sep.x_only, sep.y_only
    if not xo or not yo:
        return False
    minval = min_offdiag(a, within=elems)
    rows = a._rows
    return all(rows[x][y] == minval for x in xo for y in yo)


def property_p_walk(a: SymmetricMatrix, side, inter, u: int, s: int,
                    minval, adj=None) -> tuple[int, ...] | None:
    """The walk promised by property (P): from u (in side minus inter) to s
    (in inter), inside the side, interior avoiding inter.

    Returns (u, s) directly when A_us > minval; otherwise a shortest H-path,
    which is weighted chordless because its edges exceed the minimum and its
    two-apart pairs do not.  None when no such walk exists.
    """
    if a._rows[u][s] > minval:
        return (u, s)
    if adj is None:
        adj = h_adjacency(a, side, minval)
    allowed = (frozenset(side) - frozenset(inter)) | {s}
    parent = {u: None}
    queue = deque([u])
    while queue:
        v = queue.popleft()
        if v == s:
            path = []
            while v is not None:
                path.append(v)
                v = parent[v]
            return tuple(reversed(path))
        for w in sorted(adj[v]):
            if w in allowed and w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def property_p_holds(a: SymmetricMatrix, sep: Separation, within=None,
                     only_u=None) -> bool:
    """Verify property (P), searching for each promised walk and checking it
    really is weighted chordless with interior disjoint from X cap Y."""
    from .walks import is_weighted_chordless

    elems = frozenset(range(1, a.n + 1) if within is None else within)
    minval = min_offdiag(a, within=elems)
    inter = sep.intersection
    for side in sep.sides():
        adj = h_adjacency(a, side, minval)
        us = sorted(side - inter) if only_u is None else sorted(set(only_u) & (side - inter))
        for u in us:
            for s in sorted(inter):
                if a._rows[u][s] > minval:
                    continue
                walk = property_p_walk(a, side, inter, u, s, minval, adj)
                if walk is None or len(walk) < 3:
                    return False
                if not is_weighted_chordless(a, walk):
                    return False
                if any(v in inter for v in walk[1:-1]):
                    return False
    return True
