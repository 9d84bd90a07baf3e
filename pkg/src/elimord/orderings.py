"""Perfect elimination orderings: verification, greedy construction, and the
small-n exhaustive oracle.

An order pi is a perfect elimination ordering (PEO) of a symmetric matrix A
when A_yz >= min(A_xy, A_xz) for every triple x before y before z.  For a
0/1 adjacency matrix this is exactly the graph notion, so everything here
specializes to chordal graphs.
"""

import itertools
from dataclasses import dataclass

from .matrix import SymmetricMatrix

BRUTEFORCE_CAP = 9


class LinearOrder:
    """A permutation of 1..n with O(1) position lookup."""

    __slots__ = ("seq", "_pos")

    def __init__(self, seq):
        seq = tuple(seq)
        n = len(seq)
        if sorted(seq) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {seq}")
        self.seq = seq
        self._pos = {v: i for i, v in enumerate(seq)}

    @property
    def n(self) -> int:
        return len(self.seq)

    def position(self, v: int) -> int:
        return self._pos[v]

    def __iter__(self):
        return iter(self.seq)

    def __len__(self) -> int:
        return len(self.seq)

    def __getitem__(self, i: int) -> int:
        return self.seq[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, LinearOrder):
            return self.seq == other.seq
        if isinstance(other, tuple):
            return self.seq == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.seq)

    def __repr__(self) -> str:
        return f"LinearOrder({self.seq})"

    def serialize(self) -> str:
        return " ".join(str(v) for v in self.seq)

    @classmethod
    def parse(cls, text: str, n: int) -> "LinearOrder":
        try:
            seq = tuple(int(t) for t in text.split())
        except ValueError as exc:
            raise ValueError(f"order must be a list of integers: {text!r}") from exc
        if len(seq) != n:
            raise ValueError(f"order has {len(seq)} entries, expected {n}")
        return cls(seq)


@dataclass(frozen=True)
class TripleViolation:
    """Indices x before y before z with A_yz < min(A_xy, A_xz)."""

    x: int
    y: int
    z: int


def _check_order(a: SymmetricMatrix, pi: LinearOrder) -> None:
    if pi.n != a.n:
        raise ValueError(f"order over {pi.n} indices does not match matrix size {a.n}")


def find_peo_violation(a: SymmetricMatrix, pi: LinearOrder) -> TripleViolation | None:
    """First violated triple in position-lexicographic order, or None.

    Plain O(n^3) scan over position triples i < j < k.
    """
    _check_order(a, pi)
    seq, rows = pi.seq, a._rows
    n = len(seq)
    for i in range(n - 2):
        rx = rows[seq[i]]
        for j in range(i + 1, n - 1):
            y = seq[j]
            ry = rows[y]
            axy = rx[y]
            for k in range(j + 1, n):
                z = seq[k]
                ayz = ry[z]
                if ayz < axy and ayz < rx[z]:
                    return TripleViolation(seq[i], y, z)
    return None


def is_peo(a: SymmetricMatrix, pi: LinearOrder) -> bool:
    return find_peo_violation(a, pi) is None


def find_simplicial_violation(
        a: SymmetricMatrix, v: int, within=None) -> tuple[int, int] | None:
    """Smallest pair (y, z) with A_yz < min(A_vy, A_vz), or None if v is
    simplicial (optionally inside the principal submatrix on ``within``)."""
    elems = range(1, a.n + 1) if within is None else sorted(within)
    if within is None and not 1 <= v <= a.n:
        raise ValueError(f"index {v} out of range 1..{a.n}")
    rows = a._rows
    rv = rows[v]
    others = [u for u in elems if u != v]
    for i, y in enumerate(others):
        ry = rows[y]
        avy = rv[y]
        for z in others[i + 1:]:
            ayz = ry[z]
            if ayz < avy and ayz < rv[z]:
                return (y, z)
    return None


def is_simplicial(a: SymmetricMatrix, v: int, within=None) -> bool:
    return find_simplicial_violation(a, v, within) is None


def find_simplicial(a: SymmetricMatrix, within=None) -> int | None:
    """Smallest simplicial index, or None.  O(n^3)."""
    elems = range(1, a.n + 1) if within is None else sorted(within)
    for v in elems:
        if find_simplicial_violation(a, v, within=elems) is None:
            return v
    return None


def greedy_peo(a: SymmetricMatrix, within=None) -> LinearOrder | tuple | None:
    """Repeatedly eliminate the smallest simplicial index of the remaining
    principal submatrix.  Returns a full order iff one exists; eliminating
    any simplicial element first is never a wrong move, so the greedy rule
    is complete.  O(n^4).

    With ``within`` given, works on that subset and returns a plain tuple.
    """
    sub = within is not None
    remaining = sorted(within) if sub else list(range(1, a.n + 1))
    order = []
    while remaining:
        v = find_simplicial(a, within=remaining)
        if v is None:
            return None
        order.append(v)
        remaining.remove(v)
    return tuple(order) if sub else LinearOrder(order)


def peo_starting_at(a: SymmetricMatrix, v: int) -> LinearOrder | None:
    """A PEO with v first, or None.  Such an order exists iff v is simplicial
    and the matrix has a PEO at all, so it suffices to put v up front and run
    the greedy construction on the rest."""
    if not 1 <= v <= a.n:
        raise ValueError(f"index {v} out of range 1..{a.n}")
    if not is_simplicial(a, v):
        return None
    rest = greedy_peo(a, within=[u for u in range(1, a.n + 1) if u != v])
    if rest is None:
        return None
    return LinearOrder((v,) + rest)


def all_peos_bruteforce(a: SymmetricMatrix) -> list[LinearOrder]:
    """Exactly the orders passing the PEO check, by n! enumeration (n <= 9)."""
    if a.n > BRUTEFORCE_CAP:
        raise ValueError(f"brute-force oracle capped at n <= {BRUTEFORCE_CAP}, got {a.n}")
    rows = a._rows
    n = a.n
    result = []
    for perm in itertools.permutations(range(1, n + 1)):
        ok = True
        for i in range(n - 2):
            rx = rows[perm[i]]
            for j in range(i + 1, n - 1):
                y = perm[j]
                ry = rows[y]
                axy = rx[y]
                for k in range(j + 1, n):
                    z = perm[k]
                    ayz = ry[z]
                    if ayz < axy and ayz < rx[z]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            result.append(LinearOrder(perm))
    return result


def every_order_is_peo(a: SymmetricMatrix) -> bool:
    """True iff every linear order passes the PEO check; equivalent to every
    rotation of every triple satisfying the three-points condition, so this
    runs in O(n^3) instead of n!."""
    rows = a._rows
    for x in range(1, a.n + 1):
        rx = rows[x]
        for y in range(1, a.n + 1):
            if y == x:
                continue
            ry = rows[y]
            axy = rx[y]
            for z in range(y + 1, a.n + 1):
                if z == x:
                    continue
                ayz = ry[z]
                if ayz < axy and ayz < rx[z]:
                    return False
    return True
