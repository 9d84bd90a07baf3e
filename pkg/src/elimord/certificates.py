"""Certificates: a perfect elimination ordering, or a self-contained pair of
weighted chordless walks proving that none exists.

The extractor runs greedy elimination first.  When that stalls, the
remaining principal submatrix has no simplicial element, and a recursive
argument over separations produces an explicit self-contained pair:

  * split the current index set by a separation (X, Y) with the walk
    property (P);
  * establish on each side either (P1) a simplicial element outside
    X cap Y, or (P2) a weighted chordless walk rooted in X cap Y, by
    shrinking the side along nested sub-separations;
  * combine: two (P1)s give two simplicial elements at minimum value, a
    (P1) with a (P2) gives a critical walk (both impossible at the top
    level, where no simplicial element exists), and two (P2)s concatenate
    into the self-contained pair.

Every intermediate witness is re-checked; a failure raises
CertificateError, never a silently wrong certificate.
"""

from dataclasses import dataclass

from .matrix import SymmetricMatrix, min_offdiag
from .orderings import LinearOrder, find_simplicial, greedy_peo, is_peo, is_simplicial
from .separation import Separation, find_separation, h_adjacency, property_p_walk
from .walks import (
    Walk,
    is_critical_walk,
    is_rooted,
    is_self_contained_family,
    is_weighted_chordless,
)


class CertificateError(RuntimeError):
    """Internal consistency failure while building a certificate."""


@dataclass(frozen=True)
class Ordering:
    order: LinearOrder


@dataclass(frozen=True)
class Forbidden:
    walks: tuple[Walk, Walk]


Certificate = Ordering | Forbidden


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise CertificateError(msg)


# result tags for the recursion: ("B", (u, v)) two simplicial elements at the
# minimum value; ("A", walk) a critical walk; ("PAIR", (w1, w2)) a
# self-contained pair of weighted chordless walks.


def _theorem_c(a: SymmetricMatrix, zset: frozenset) -> tuple:
    elems = sorted(zset)
    _require(len(elems) >= 2, "recursion reached a singleton")
    if len(elems) == 2:
        return _checked(a, zset, min_offdiag(a, within=zset),
                        ("B", (elems[0], elems[1])))

    sep = find_separation(a, within=zset)
    _require(sep is not None, "no separation found")
    inter = sep.intersection
    minval = min_offdiag(a, within=zset)

    if not inter:
        u = _side_simplicial(a, sep.x)
        if isinstance(u, tuple):
            return u  # propagated pair
        v = _side_simplicial(a, sep.y)
        if isinstance(v, tuple):
            return v
        res = ("B", (min(u, v), max(u, v)))
        return _checked(a, zset, minval, res)

    adj = h_adjacency(a, zset, minval)
    resx = _p1_or_p2(a, sep.x, inter)
    if resx[0] == "PAIR":
        return resx
    resy = _p1_or_p2(a, sep.y, inter)
    if resy[0] == "PAIR":
        return resy

    if resx[0] == "P1" and resy[0] == "P1":
        u, v = resx[1], resy[1]
        return _checked(a, zset, minval, ("B", (min(u, v), max(u, v))))
    if resx[0] == "P1" and resy[0] == "P2":
        return _checked(a, zset, minval,
                        _case_critical(a, sep.x, inter, resx[1], resy[1], minval, adj))
    if resx[0] == "P2" and resy[0] == "P1":
        return _checked(a, zset, minval,
                        _case_critical(a, sep.y, inter, resy[1], resx[1], minval, adj))
    return _checked(a, zset, minval,
                    _case_pair(a, sep, resx[1], resy[1], minval, adj))


def _checked(a: SymmetricMatrix, zset, minval, res: tuple) -> tuple:
    """Re-verify a recursion result before handing it upward."""
    tag, payload = res
    if tag == "B":
        u, v = payload
        _require(u != v and u in zset and v in zset, "bad simplicial pair")
        _require(a._rows[u][v] == minval, "simplicial pair misses the minimum value")
        _require(is_simplicial(a, u, within=zset) and is_simplicial(a, v, within=zset),
                 "claimed simplicial element is not simplicial")
    elif tag == "A":
        walk = payload
        _require(set(walk) <= zset, "critical walk leaves the index set")
        _require(is_critical_walk(a, walk, within=zset), "constructed walk is not critical")
    elif tag == "PAIR":
        w1, w2 = payload
        _require(set(w1) | set(w2) <= zset, "pair leaves the index set")
        _require(is_weighted_chordless(a, w1) and is_weighted_chordless(a, w2),
                 "pair walk is not weighted chordless")
        _require(is_self_contained_family([Walk(w1), Walk(w2)]),
                 "constructed pair is not self-contained")
    else:
        raise CertificateError(f"unknown result tag {tag!r}")
    return res


def _side_simplicial(a: SymmetricMatrix, side: frozenset):
    """A simplicial element of A[side]; also simplicial in the full set when
    the side comes from a disjoint separation.  Returns the propagated
    ("PAIR", ...) tuple if the recursion finds one instead."""
    if len(side) == 1:
        return next(iter(side))
    res = _theorem_c(a, side)
    if res[0] == "PAIR":
        return res
    if res[0] == "B":
        return res[1][0]
    return res[1][0]  # ("A", walk): the end point is simplicial


def _rooted_subwalk(walk: tuple, tset: frozenset, must_contain: int) -> tuple:
    """Contiguous subwalk with end points in tset, interior outside tset,
    containing ``must_contain`` (which is not in tset) internally."""
    j = walk.index(must_contain)
    i1 = max(i for i in range(j) if walk[i] in tset)
    i2 = min(i for i in range(j + 1, len(walk)) if walk[i] in tset)
    return walk[i1:i2 + 1]


def _p1_or_p2(a: SymmetricMatrix, side: frozenset, inter: frozenset) -> tuple:
    """Establish (P1) or (P2) for one side of a separation with property (P).

    Shrinks the side along nested separations seeded at minimum-value pairs
    inside the intersection, carrying the invariant that a simplicial element
    of the current subset found outside the intersection is simplicial in the
    whole side.  Returns ("P1", vertex), ("P2", walk), or a propagated
    ("PAIR", ...).
    """
    tset = frozenset(inter)
    zi = frozenset(side)

    def finish_p1(v: int) -> tuple:
        _require(v in side - tset, "(P1) element inside the intersection")
        _require(is_simplicial(a, v, within=side), "(P1) element not simplicial in the side")
        return ("P1", v)

    def finish_p2(walk: tuple) -> tuple:
        _require(set(walk) <= side, "(P2) walk leaves the side")
        _require(is_rooted(walk, tset), "(P2) walk is not rooted in the intersection")
        _require(is_weighted_chordless(a, walk), "(P2) walk is not weighted chordless")
        return ("P2", walk)

    while True:
        zit = zi & tset
        res = _theorem_c(a, zi)
        if res[0] == "PAIR":
            return res
        mz = min_offdiag(a, within=zi)

        if len(zit) == 1:
            if res[0] == "B":
                u, v = res[1]
                return finish_p1(u if u not in tset else v)
            walk = res[1]
            if walk[0] not in tset:
                return finish_p1(walk[0])
            return finish_p2(walk)

        # at least two intersection elements left in zi
        pair_vw = None
        if res[0] == "B":
            u, v = res[1]
            if u not in tset:
                return finish_p1(u)
            if v not in tset:
                return finish_p1(v)
            pair_vw = (u, v)
        else:
            walk = res[1]
            v0 = walk[0]
            if v0 not in tset:
                return finish_p1(v0)
            rows = a._rows
            contacts = sorted({u for u in walk[1:-1] if u != v0 and rows[v0][u] == mz})
            _require(bool(contacts), "critical walk lost its minimum contact")
            outside = [u for u in contacts if u not in tset]
            if outside:
                return finish_p2(_rooted_subwalk(walk, tset, outside[0]))
            pair_vw = (v0, contacts[0])

        v, w = pair_vw
        subsep = find_separation(a, v, w, within=zi)
        c, d = subsep.x, subsep.y
        cd = c & d
        bad = sorted((zi - tset) & cd)
        if bad:
            z = bad[0]
            adj = h_adjacency(a, zi, mz)
            walk_v = property_p_walk(a, c, cd, v, z, mz, adj)
            walk_w = property_p_walk(a, d, cd, w, z, mz, adj)
            _require(walk_v is not None and walk_w is not None,
                     "property (P) walk missing on a sub-separation")
            combined = walk_v + walk_w[::-1][1:]  # runs v .. z .. w
            return finish_p2(_rooted_subwalk(combined, tset, z))
        if c - tset:
            zi = c
        else:
            _require(bool(d - tset), "shrinking step lost the side vertices")
            zi = d


def _case_critical(a: SymmetricMatrix, simp_side: frozenset, inter: frozenset,
                   x: int, q: tuple, minval, adj) -> tuple:
    """(P1) on one side plus (P2) on the other: close the rooted walk q
    through x with two property-(P) walks, giving a critical walk."""
    w1 = property_p_walk(a, simp_side, inter, x, q[0], minval, adj)
    w2 = property_p_walk(a, simp_side, inter, x, q[-1], minval, adj)
    _require(w1 is not None and w2 is not None, "property (P) walk missing in critical case")
    walk = w1 + q[1:] + w2[::-1][1:]
    return ("A", walk)


def _case_pair(a: SymmetricMatrix, sep: Separation, p: tuple, q: tuple,
               minval, adj) -> tuple:
    """(P2) on both sides: concatenate each rooted walk with connector walks
    through the second vertex of the other, yielding a self-contained pair."""
    inter = sep.intersection
    u2, v2 = p[1], q[1]
    w1 = property_p_walk(a, sep.y, inter, v2, p[0], minval, adj)
    w2 = property_p_walk(a, sep.y, inter, v2, p[-1], minval, adj)
    w3 = property_p_walk(a, sep.x, inter, u2, q[0], minval, adj)
    w4 = property_p_walk(a, sep.x, inter, u2, q[-1], minval, adj)
    _require(all(w is not None for w in (w1, w2, w3, w4)),
             "property (P) walk missing in pair case")
    walk_a = w1 + p[1:] + w2[::-1][1:]
    walk_b = w3 + q[1:] + w4[::-1][1:]
    return ("PAIR", (walk_a, walk_b))


def extract_certificate(a: SymmetricMatrix) -> Certificate:
    """A perfect elimination ordering when one exists, else a validated
    self-contained pair of weighted chordless walks."""
    order = greedy_peo(a)
    if order is not None:
        _require(is_peo(a, order), "greedy produced a non-PEO")
        return Ordering(order)

    remaining = list(range(1, a.n + 1))
    while True:
        v = find_simplicial(a, within=remaining)
        if v is None:
            break
        remaining.remove(v)
    _require(len(remaining) >= 3, "greedy failed although everything is simplicial")

    res = _theorem_c(a, frozenset(remaining))
    _require(res[0] == "PAIR",
             "recursion found a simplicial element in a stalled submatrix")
    w1, w2 = Walk(res[1][0]), Walk(res[1][1])
    _require(is_weighted_chordless(a, w1) and is_weighted_chordless(a, w2),
             "certificate walk is not weighted chordless")
    _require(is_self_contained_family([w1, w2]), "certificate pair is not self-contained")
    return Forbidden((w1, w2))


def certificate_is_valid(a: SymmetricMatrix, cert: Certificate) -> bool:
    if isinstance(cert, Ordering):
        return is_peo(a, cert.order)
    if isinstance(cert, Forbidden):
        w1, w2 = cert.walks
        return (is_weighted_chordless(a, w1) and is_weighted_chordless(a, w2)
                and is_self_contained_family([w1, w2]))
    return False


def format_certificate(cert: Certificate) -> str:
    if isinstance(cert, Ordering):
        return f"PEO: {cert.order.serialize()}"
    w1, w2 = cert.walks
    return f"FORBIDDEN: W1={w1.serialize()}; W2={w2.serialize()}"
