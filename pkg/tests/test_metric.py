import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from qdham import graph as G
from qdham.errors import DisconnectedError
from qdham.expr import parse_expr
from qdham.graph import is_connected
from qdham.metric import (
    all_pairs_distances,
    degree_transmission_bound,
    diameter,
    is_transmission_regular,
    qd_matrix,
)

from conftest import connected_corpus, graphs, load_corpus, to_nx


def test_path3():
    d = all_pairs_distances(G.path(3))
    assert d.dist.tolist() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
    assert d.tr.tolist() == [3, 2, 3]
    assert d.sigma == 4


@pytest.mark.parametrize("n", range(1, 9))
def test_complete(n):
    d = all_pairs_distances(G.complete(n))
    assert set(d.tr.tolist()) == {n - 1}
    assert d.sigma == n * (n - 1) // 2


def test_cycle4_transmission_regular():
    d = all_pairs_distances(G.cycle(4))
    assert d.tr.tolist() == [4, 4, 4, 4] and is_transmission_regular(d)


def test_disconnected_names_pair():
    with pytest.raises(DisconnectedError) as info:
        all_pairs_distances(G.disjoint_union(G.complete(2), G.complete(1)))
    assert info.value.pair == (0, 2)


def test_qd_small():
    assert qd_matrix(all_pairs_distances(G.complete(2))).q.tolist() == [[1, 1], [1, 1]]
    assert qd_matrix(all_pairs_distances(G.path(3))).q.tolist() == [[3, 1, 2], [1, 2, 1], [2, 1, 3]]


def test_qd_join_clique_independent():
    q = qd_matrix(all_pairs_distances(parse_expr("join(kn(4), e(4))"))).q
    # clique vertex: 3 + 4 neighbours at distance 1; independent vertex: 4 at 1, 3 at 2
    assert np.diag(q).tolist() == [7] * 4 + [10] * 4


def test_transmission_regular_examples():
    d6 = all_pairs_distances(G.cycle(6))
    assert is_transmission_regular(d6) and set(d6.tr.tolist()) == {9}
    assert not is_transmission_regular(all_pairs_distances(G.path(3)))
    for m in range(2, 6):
        d = all_pairs_distances(G.complete_bipartite(m, m))
        # m - 1 others on the own side at distance 2, m across at distance 1
        assert is_transmission_regular(d) and d.tr[0] == 3 * m - 2


def test_degree_transmission_bound_examples():
    assert not degree_transmission_bound(G.complete(6), all_pairs_distances(G.complete(6))).any()
    p4 = G.path(4)
    slack = degree_transmission_bound(p4, all_pairs_distances(p4))
    assert slack.tolist() == [1, 0, 0, 1]


@given(graphs(min_n=2, max_n=10, connected=True))
def test_distances_match_networkx(g):
    d = all_pairs_distances(g)
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    assert all(d.dist[u, v] == ref[u][v] for u in range(g.n) for v in range(g.n))


@given(graphs(min_n=2, max_n=9, connected=True))
def test_distance_matrix_axioms(g):
    d = all_pairs_distances(g)
    D = d.dist
    assert (D == D.T).all() and not np.diag(D).any()
    assert (D + np.eye(g.n, dtype=int) >= 1).all()
    assert (D[:, :, None] <= D[:, None, :] + D.T[None, :, :]).all()  # d(u,w) <= d(u,v) + d(v,w)
    q = qd_matrix(d).q
    assert (q.sum(axis=1) == 2 * d.tr).all()
    assert 2 * d.sigma == d.tr.sum()


def test_sigma_degree_inequality_exhaustive(connected_upto7):
    for g in connected_upto7:
        d = all_pairs_distances(g)
        slack = degree_transmission_bound(g, d)
        assert (slack >= 0).all()
        assert d.sigma >= g.n * (g.n - 1) - g.m
        assert (d.sigma == g.n * (g.n - 1) - g.m) == (diameter(d) <= 2)
        assert (slack == 0).all() == (diameter(d) <= 2)


def test_complement_sigma_inequality_exhaustive():
    for n in range(1, 8):
        for g in load_corpus("graphs", n):
            gc = G.complement(g)
            if is_connected(gc):
                assert all_pairs_distances(gc).sigma * 2 >= n * (n - 1) + 2 * g.m
