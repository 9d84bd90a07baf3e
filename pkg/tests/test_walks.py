"""Weighted chordless walks, cycles, critical walks, and the brute-force
certificate searches."""

import itertools
import random

import pytest

from elimord import (
    SymmetricMatrix,
    Walk,
    adjacency_matrix,
    all_peos_bruteforce,
    find_chordless_failure,
    find_self_contained_family_bruteforce,
    find_self_contained_pair_bruteforce,
    find_self_contained_walk_bruteforce,
    find_simplicial,
    find_weighted_chordless_cycle,
    is_critical_walk,
    is_rooted,
    is_self_contained_family,
    is_weighted_chordless,
    is_weighted_chordless_cycle,
)
from elimord.graphs import Graph

from conftest import random_matrix, random_ultrametric, weighted_fixture


def test_wc_walk_examples(fig_a, fig_c, fig_d):
    assert is_weighted_chordless(fig_a, (1, 4, 5, 3, 1, 2, 5))
    assert is_weighted_chordless(fig_c, (6, 2, 1, 3, 6))
    assert is_weighted_chordless(fig_d, (2, 1, 3))


def test_wc_failure_index(fig_d):
    # (4,2,3): A_43 = 1 >= min(A_42, A_23) = 1, so position 1 fails
    assert find_chordless_failure(fig_d, (4, 2, 3)) == 1
    assert find_chordless_failure(fig_d, (2, 1, 3)) is None
    with pytest.raises(ValueError):
        find_chordless_failure(fig_d, (3,))


def test_wc_rejects_diagonal_touches(fig_d):
    # consecutive repeat and bounce-back both touch the diagonal
    assert not is_weighted_chordless(fig_d, (2, 2, 3))
    assert not is_weighted_chordless(fig_d, (2, 1, 2))


def test_wc_reversal_invariant():
    rng = random.Random(31)
    for _ in range(200):
        a = random_matrix(rng, 5)
        seq = tuple(rng.randint(1, 5) for _ in range(rng.randint(2, 7)))
        assert is_weighted_chordless(a, seq) == is_weighted_chordless(a, seq[::-1])


def test_wc_cycle_fig_b(fig_b):
    assert is_weighted_chordless_cycle(fig_b, (1, 2, 3, 4, 5, 1))


def test_wc_cycle_requires_cycle_shape(fig_b):
    with pytest.raises(ValueError, match="not a cycle"):
        is_weighted_chordless_cycle(fig_b, (1, 2, 3))  # not closed
    with pytest.raises(ValueError, match="not a cycle"):
        is_weighted_chordless_cycle(fig_b, (1, 2, 1, 2, 1))  # repeats
    assert not is_weighted_chordless_cycle(fig_b, (1, 2, 1))  # too short


def test_wc_cycle_c4():
    c4 = adjacency_matrix(Graph.cycle(4))
    assert is_weighted_chordless_cycle(c4, (1, 2, 3, 4, 1))


def test_fig_a_has_no_wc_cycle_exhaustive(fig_a):
    """Independent enumeration over all distinct-vertex closed sequences."""
    found = []
    for r in range(3, 6):
        for body in itertools.permutations(range(1, 6), r):
            try:
                if is_weighted_chordless_cycle(fig_a, body + (body[0],)):
                    found.append(body)
            except ValueError:
                pass
    assert found == []
    assert find_weighted_chordless_cycle(fig_a) is None


def test_fig_a_two_walks_exact(fig_a):
    """The weighted chordless 2-walks of the five-vertex golden matrix are
    exactly (2,1,3), (1,2,5), (1,3,5), (1,4,5), (3,5,4) up to reversal."""
    expected = {(2, 1, 3), (1, 2, 5), (1, 3, 5), (1, 4, 5), (3, 5, 4)}
    canon = {(min(y, z), x, max(y, z)) for (y, x, z) in expected}
    got = set()
    for y, x, z in itertools.permutations(range(1, 6), 3):
        if y < z and is_weighted_chordless(fig_a, (y, x, z)):
            got.add((y, x, z))
    assert got == canon


def test_find_wc_cycle(fig_b):
    cyc = find_weighted_chordless_cycle(fig_b)
    assert cyc is not None
    assert is_weighted_chordless_cycle(fig_b, cyc)
    rng = random.Random(32)
    for _ in range(30):
        d = random_ultrametric(rng, rng.randint(3, 6))
        assert find_weighted_chordless_cycle(d.negated()) is None


def test_self_contained_family(fig_a, fig_c):
    assert is_self_contained_family([Walk((6, 2, 1, 3, 6)), Walk((1, 4, 6, 5, 1))])
    assert not is_self_contained_family([Walk((2, 1, 3))])
    assert is_self_contained_family([Walk((1, 4, 5, 3, 1, 2, 5))])
    with pytest.raises(ValueError):
        is_self_contained_family([])


def test_is_rooted():
    assert is_rooted((1, 2, 3), {1, 3})
    assert not is_rooted((1, 2, 3), {1, 2, 3})
    assert not is_rooted((1, 3), {1, 3})


def test_no_critical_walk_in_fig_d_exhaustive(fig_d):
    """Enumerate every weighted chordless walk of at most 8 edges by DFS
    over the extension relation; none is critical."""
    rows = fig_d._rows

    def extensions(p, c):
        return [w for w in range(1, 5)
                if w != p and w != c and rows[p][w] < rows[p][c] and rows[p][w] < rows[c][w]]

    stack = [(a, b) for a in range(1, 5) for b in range(1, 5) if a != b]
    walks = []
    while stack:
        seq = stack.pop()
        walks.append(seq)
        if len(seq) <= 8:
            stack.extend(seq + (w,) for w in extensions(seq[-2], seq[-1]))
    assert all(not is_critical_walk(fig_d, seq) for seq in walks)


def test_no_critical_walk_in_constant():
    a = SymmetricMatrix(4, {}, default=2)
    for seq in itertools.product(range(1, 5), repeat=4):
        if seq[0] == seq[-1]:
            assert not is_critical_walk(a, seq)


def test_critical_walk_synthesized():
    """Instance built to the closing recipe: 1 simplicial on one side of the
    separation ({1,2,3}, {2,3,4}), (2,4,3) rooted in the intersection, and
    the closed walk (1,2,4,3,1) picks up the minimum at internal element 4."""
    a = SymmetricMatrix(4, {(1, 2): 1, (1, 3): 1, (1, 4): 0,
                            (2, 3): 1, (2, 4): 2, (3, 4): 2})
    walk = (1, 2, 4, 3, 1)
    assert is_weighted_chordless(a, walk)
    assert is_critical_walk(a, walk)
    assert not is_critical_walk(a, (1, 2, 4, 3))        # not closed
    assert not is_critical_walk(a, (2, 4, 3, 2))        # endpoint not simplicial


def test_single_walk_bruteforce(fig_a, fig_c):
    w = find_self_contained_walk_bruteforce(fig_a)
    assert w is not None and w.is_self_contained and is_weighted_chordless(fig_a, w)
    assert find_self_contained_walk_bruteforce(fig_c, 14) is None


def test_pair_bruteforce_fixtures(fig_c, fig_d):
    pair = find_self_contained_pair_bruteforce(fig_c, 12)
    assert pair is not None
    w1, w2 = pair
    assert is_weighted_chordless(fig_c, w1) and is_weighted_chordless(fig_c, w2)
    assert is_self_contained_family([w1, w2])
    assert find_self_contained_pair_bruteforce(fig_d) is None
    assert find_self_contained_pair_bruteforce(SymmetricMatrix(4, {}, default=1)) is None


def test_pair_bruteforce_caps():
    with pytest.raises(ValueError, match="capped"):
        find_self_contained_pair_bruteforce(SymmetricMatrix(8, {}, default=0))
    with pytest.raises(ValueError, match="max_len"):
        find_self_contained_pair_bruteforce(SymmetricMatrix(4, {}, default=0), 2)


def test_pair_bruteforce_matches_oracle():
    rng = random.Random(33)
    for _ in range(300):
        a = random_matrix(rng, rng.randint(2, 5))
        has_peo = bool(all_peos_bruteforce(a))
        assert (find_self_contained_pair_bruteforce(a) is None) == has_peo


def test_family_bruteforce_matches_oracle():
    """Self-contained families of any size certify exactly the no-PEO
    matrices at this scale, and when no family exists a simplicial element
    does."""
    rng = random.Random(34)
    for _ in range(200):
        a = random_matrix(rng, rng.randint(2, 5))
        family = find_self_contained_family_bruteforce(a)
        has_peo = bool(all_peos_bruteforce(a))
        assert (family is None) == has_peo
        if family is not None:
            assert is_self_contained_family(family)
            assert all(is_weighted_chordless(a, w) for w in family)
        else:
            assert find_simplicial(a) is not None
