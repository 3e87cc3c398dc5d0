import itertools
import random

import pytest
from hypothesis import given, settings

from qdham import graph as G
from qdham.errors import InvalidParameter, SizeLimitError
from qdham.expr import parse_expr
from qdham.families import build_H, pendant_clique, isolated_clique
from qdham.graph import bipartition, is_connected
from qdham.oracle import (
    backtrack_hamilton_cycle,
    backtrack_hamilton_path,
    has_hamilton_cycle,
    has_hamilton_path,
    has_hamilton_path_between,
    is_hamilton_connected,
    is_hamilton_cycle,
    is_hamilton_path,
    is_traceable_from_every_vertex,
)

from conftest import connected_corpus, graphs, load_corpus


def brute_paths(g):
    """All Hamilton paths as vertex tuples, by permutation enumeration (n <= 7)."""
    return [p for p in itertools.permutations(range(g.n)) if all(g.has_edge(p[i], p[i + 1]) for i in range(g.n - 1))]


def test_cycle_examples():
    ans = has_hamilton_cycle(G.cycle(5))
    assert ans and is_hamilton_cycle(G.cycle(5), ans.witness)
    assert not has_hamilton_cycle(pendant_clique(5))
    assert has_hamilton_path(pendant_clique(5))
    assert not has_hamilton_cycle(build_H(2, 4))


def test_path_examples():
    assert has_hamilton_path(G.path(6))
    assert not has_hamilton_path(isolated_clique(5))
    for n in range(5, 9):
        assert has_hamilton_path(pendant_clique(n))
    assert has_hamilton_path(G.complete(1)).witness == (0,)


def test_path_between_examples():
    k4 = G.complete(4)
    assert all(has_hamilton_path_between(k4, u, v) for u in range(4) for v in range(4) if u != v)
    assert not has_hamilton_path_between(G.cycle(4), 0, 2)
    p4 = G.path(4)
    ans = has_hamilton_path_between(p4, 0, 3)
    assert ans and ans.witness == (0, 1, 2, 3)
    assert not has_hamilton_path_between(p4, 1, 2)
    with pytest.raises(InvalidParameter):
        has_hamilton_path_between(p4, 1, 1)


def test_hamilton_connected_examples():
    assert is_hamilton_connected(G.complete(5))
    ans = is_hamilton_connected(G.cycle(6))
    assert not ans and ans.failing == (0, 2)  # neighbours on C6 are joined by the rest of the cycle
    assert is_hamilton_connected(G.complete(1))


def test_traceable_all_examples():
    assert is_traceable_from_every_vertex(G.cycle(5))
    ans = is_traceable_from_every_vertex(G.star(3))
    assert not ans and ans.failing == (0,)


def test_size_limits():
    with pytest.raises(SizeLimitError):
        has_hamilton_cycle(G.cycle(25))
    with pytest.raises(SizeLimitError):
        is_hamilton_connected(G.complete(17))
    assert has_hamilton_cycle(G.cycle(20))


@pytest.mark.parametrize("n", range(2, 8))
def test_dp_matches_permutation_enumeration(n):
    for g in load_corpus("graphs", n):
        paths = brute_paths(g)
        assert bool(has_hamilton_path(g)) == bool(paths)
        cyc = any(g.has_edge(p[-1], p[0]) for p in paths) and n >= 3
        assert bool(has_hamilton_cycle(g)) == cyc
        starts = {p[0] for p in paths}
        assert bool(is_traceable_from_every_vertex(g)) == (len(starts) == n)
        pairs = {frozenset((p[0], p[-1])) for p in paths}
        assert bool(is_hamilton_connected(g)) == (len(pairs) == n * (n - 1) // 2)


def _random_connected(rnd, n):
    while True:
        p = rnd.uniform(0.2, 0.9)
        g = G.Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p])
        if is_connected(g):
            return g


def test_dp_matches_backtracking_on_random_graphs():
    rnd = random.Random(20240601)
    for _ in range(300):
        g = _random_connected(rnd, rnd.randint(3, 10))
        assert bool(has_hamilton_cycle(g)) == bool(backtrack_hamilton_cycle(g))
        assert bool(has_hamilton_path(g)) == bool(backtrack_hamilton_path(g))
        u, v = rnd.sample(range(g.n), 2)
        assert bool(has_hamilton_path_between(g, u, v)) == bool(backtrack_hamilton_path(g, u, v))


@settings(max_examples=200)
@given(graphs(min_n=1, max_n=10))
def test_witnesses_validate(g):
    c = has_hamilton_cycle(g)
    if c:
        assert is_hamilton_cycle(g, c.witness)
    p = has_hamilton_path(g)
    if p:
        assert is_hamilton_path(g, p.witness)
    if g.n >= 2:
        b = has_hamilton_path_between(g, 0, g.n - 1)
        if b:
            assert is_hamilton_path(g, b.witness, 0, g.n - 1)


def test_closure_consistency(connected_upto7):
    for g in connected_upto7:
        hc = bool(is_hamilton_connected(g))
        ham = bool(has_hamilton_cycle(g))
        tr = bool(has_hamilton_path(g))
        tr_all = bool(is_traceable_from_every_vertex(g))
        if g.n >= 3:
            assert not hc or ham
        assert not ham or tr_all
        assert not tr_all or tr


def test_unbalanced_bipartite_has_no_cycle():
    for n in range(1, 9):
        for g in load_corpus("graphs", n):
            bp = bipartition(g)
            if bp is not None and not bp.balanced:
                assert not has_hamilton_cycle(g)


def test_bipartite_never_hamilton_connected():
    for n in range(3, 9):
        for g in load_corpus("bipartite_connected", n):
            assert not is_hamilton_connected(g)
