"""Exact symmetric matrices, file I/O, and level-graph decompositions.

Matrices are indexed by 1..n, hold one exact rational value per unordered
off-diagonal pair, and never store or consult diagonal entries.  All
comparisons in this package are exact (int / Fraction), since the ordering
conditions are strict three-point inequalities that floating point would
get wrong.
"""

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, WeightedGraph, weighted_distances

Value = int | Fraction


class MatrixFormatError(ValueError):
    """Raised when a matrix or graph file cannot be parsed."""


def parse_value(token: str) -> Value:
    """Parse an exact numeric token: integer, decimal, or p/q rational."""
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise MatrixFormatError(f"non-numeric value {token!r}") from exc


def format_value(v: Value) -> str:
    if isinstance(v, Fraction) and v.denominator == 1:
        return str(v.numerator)
    return str(v)


class SymmetricMatrix:
    """Symmetric matrix over index set 1..n with exact off-diagonal entries.

    The diagonal plays no role in any condition checked by this package, so
    it is never stored.  Instances are immutable after construction and safe
    to share.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, entries, default: Value | None = None):
        """Build from ``entries``: a dict {(x, y): value} or an iterable of
        (x, y, value) triples, 1-based, x != y.  Pairs not listed take
        ``default``; if no default is given every pair must be present.
        """
        if n < 1:
            raise ValueError(f"matrix size must be positive, got {n}")
        self.n = n
        rows: list[list[Value | None]] = [[None] * (n + 1) for _ in range(n + 1)]
        if hasattr(entries, "items"):
            entries = ((x, y, v) for (x, y), v in entries.items())
        for x, y, v in entries:
            if not (1 <= x <= n and 1 <= y <= n):
                raise ValueError(f"index pair ({x},{y}) out of range 1..{n}")
            if x == y:
                raise ValueError(f"diagonal entry ({x},{y}) is not allowed")
            old = rows[x][y]
            if old is not None and old != v:
                raise ValueError(f"conflicting values for pair ({x},{y}): {old} vs {v}")
            rows[x][y] = v
            rows[y][x] = v
        for x in range(1, n + 1):
            for y in range(x + 1, n + 1):
                if rows[x][y] is None:
                    if default is None:
                        raise ValueError(f"missing value for pair ({x},{y}) and no default")
                    rows[x][y] = default
                    rows[y][x] = default
        self._rows = rows

    def value(self, x: int, y: int) -> Value:
        if x == y:
            raise ValueError("diagonal entries are not stored")
        v = self._rows[x][y]
        assert v is not None
        return v

    def __getitem__(self, pair: tuple[int, int]) -> Value:
        return self.value(*pair)

    def pairs(self):
        """Yield (x, y, value) for every unordered pair, x < y."""
        for x in range(1, self.n + 1):
            row = self._rows[x]
            for y in range(x + 1, self.n + 1):
                yield x, y, row[y]

    def row(self, x: int) -> list[Value | None]:
        """Raw row access (index 0 and the diagonal slot are None)."""
        return self._rows[x]

    def negated(self) -> "SymmetricMatrix":
        return SymmetricMatrix(self.n, ((x, y, -v) for x, y, v in self.pairs()))

    def shifted(self, c: Value) -> "SymmetricMatrix":
        return SymmetricMatrix(self.n, ((x, y, v + c) for x, y, v in self.pairs()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricMatrix) or self.n != other.n:
            return NotImplemented if not isinstance(other, SymmetricMatrix) else False
        return all(v == other._rows[x][y] for x, y, v in self.pairs())

    def __repr__(self) -> str:
        return f"SymmetricMatrix(n={self.n})"


def min_offdiag(a: SymmetricMatrix, within=None) -> Value:
    """Smallest off-diagonal value, optionally over a vertex subset."""
    if within is None:
        if a.n < 2:
            raise ValueError("min_offdiag needs at least two indices")
        return min(v for _, _, v in a.pairs())
    elems = sorted(within)
    if len(elems) < 2:
        raise ValueError("min_offdiag needs at least two indices")
    rows = a._rows
    return min(rows[x][y] for i, x in enumerate(elems) for y in elems[i + 1:])


# ---------------------------------------------------------------------------
# file format
#
#   line 1:  "n <N>"
#   optional "default <value>"
#   then     "<i> <j> <value>"   (1-based, i != j, '#' starts a comment)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_matrix(text: str) -> SymmetricMatrix:
    """Parse the matrix file format; values become exact rationals."""
    lines = list(_content_lines(text))
    if not lines:
        raise MatrixFormatError("empty input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise MatrixFormatError(f"line {lineno}: expected header 'n <N>', got {header!r}")
    try:
        n = int(parts[1])
    except ValueError as exc:
        raise MatrixFormatError(f"line {lineno}: bad matrix size {parts[1]!r}") from exc
    if n < 1:
        raise MatrixFormatError(f"line {lineno}: matrix size must be positive")

    default: Value | None = None
    body = lines[1:]
    if body and body[0][1].split()[0] == "default":
        lineno, line = body[0]
        parts = line.split()
        if len(parts) != 2:
            raise MatrixFormatError(f"line {lineno}: expected 'default <value>'")
        default = parse_value(parts[1])
        body = body[1:]

    triples = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 3:
            raise MatrixFormatError(f"line {lineno}: expected '<i> <j> <value>', got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise MatrixFormatError(f"line {lineno}: bad index in {line!r}") from exc
        triples.append((lineno, i, j, parse_value(parts[2])))

    seen: dict[tuple[int, int], Value] = {}
    for lineno, i, j, v in triples:
        if not (1 <= i <= n and 1 <= j <= n):
            raise MatrixFormatError(f"line {lineno}: index out of range in pair ({i},{j})")
        if i == j:
            raise MatrixFormatError(f"line {lineno}: diagonal entry ({i},{j}) rejected")
        key = (min(i, j), max(i, j))
        if key in seen and seen[key] != v:
            raise MatrixFormatError(
                f"line {lineno}: conflicting value for pair {key}: {seen[key]} vs {v}")
        seen[key] = v
    if default is None and n >= 2:
        for x in range(1, n + 1):
            for y in range(x + 1, n + 1):
                if (x, y) not in seen:
                    raise MatrixFormatError(f"missing pair ({x},{y}) and no default given")
    return SymmetricMatrix(n, ((x, y, v) for (x, y), v in seen.items()), default=default)


def serialize_matrix(a: SymmetricMatrix) -> str:
    lines = [f"n {a.n}"]
    lines.extend(f"{x} {y} {format_value(v)}" for x, y, v in a.pairs())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the graph file format: like the matrix format but lines are
    "<i> <j>" with implicit value 1 and implicit default 0."""
    lines = list(_content_lines(text))
    if not lines:
        raise MatrixFormatError("empty input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise MatrixFormatError(f"line {lineno}: expected header 'n <N>', got {header!r}")
    try:
        n = int(parts[1])
    except ValueError as exc:
        raise MatrixFormatError(f"line {lineno}: bad graph size {parts[1]!r}") from exc
    if n < 1:
        raise MatrixFormatError(f"line {lineno}: graph size must be positive")
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise MatrixFormatError(f"line {lineno}: expected '<i> <j>', got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise MatrixFormatError(f"line {lineno}: bad index in {line!r}") from exc
        if not (1 <= i <= n and 1 <= j <= n):
            raise MatrixFormatError(f"line {lineno}: index out of range in pair ({i},{j})")
        if i == j:
            raise MatrixFormatError(f"line {lineno}: loop ({i},{j}) rejected")
        edges.append((i, j))
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def adjacency_matrix(g: Graph) -> SymmetricMatrix:
    """0/1 symmetric matrix of a graph."""
    return SymmetricMatrix(
        g.n, ((u, v, 1) for u, v in g.edges), default=0)


def disconnected_sentinel(wg: WeightedGraph) -> Value:
    """Value standing in for unreachable pairs: 1 + n * (max weight), which
    strictly dominates every finite shortest-path distance."""
    maxw = max(wg.weights.values(), default=0)
    return 1 + wg.n * maxw


def shortest_path_matrix(wg: WeightedGraph) -> SymmetricMatrix:
    """Exact all-pairs shortest-path distance matrix of a weighted graph.

    Pairs in different components get the disconnected sentinel.
    """
    if wg.n < 2:
        raise ValueError("shortest_path_matrix needs at least two vertices")
    sentinel = disconnected_sentinel(wg)
    dist = weighted_distances(wg)
    return SymmetricMatrix(
        wg.n,
        ((u, v, sentinel if d is None else d) for (u, v), d in dist.items()))


def graph_distance_matrix(g: Graph) -> SymmetricMatrix:
    """Hop-distance matrix of a graph (unit weights, sentinel off-component)."""
    return shortest_path_matrix(WeightedGraph.unit(g))


# ---------------------------------------------------------------------------
# level graphs


@dataclass(frozen=True)
class LevelDecomposition:
    """Thresholds a0 < ... < aL (the distinct off-diagonal values) together
    with the level graphs G_l holding the pairs {x,y} with A_xy >= a_l.
    G_0 is complete and the edge sets are nested downward."""

    thresholds: tuple[Value, ...]
    levels: tuple[Graph, ...]

    @property
    def depth(self) -> int:
        return len(self.thresholds) - 1


def level_decomposition(a: SymmetricMatrix) -> LevelDecomposition:
    if a.n < 2:
        raise ValueError("level decomposition needs at least two indices")
    thresholds = tuple(sorted({v for _, _, v in a.pairs()}))
    levels = []
    for alpha in thresholds:
        edges = [(x, y) for x, y, v in a.pairs() if v >= alpha]
        levels.append(Graph(a.n, edges))
    return LevelDecomposition(thresholds, tuple(levels))


def reconstruction_holds(a: SymmetricMatrix, dec: LevelDecomposition | None = None) -> bool:
    """Check the conic reconstruction identity off-diagonal:
    A - a0 * A_{G0} == sum_l (a_l - a_{l-1}) * A_{G_l}."""
    if dec is None:
        dec = level_decomposition(a)
    ts, gs = dec.thresholds, dec.levels
    for x, y, v in a.pairs():
        acc = ts[0]  # G_0 is complete, so its adjacency contributes 1
        for l in range(1, len(ts)):
            if gs[l].has_edge(x, y):
                acc += ts[l] - ts[l - 1]
        if acc != v:
            return False
    return True
