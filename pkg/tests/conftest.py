from pathlib import Path

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from qdham.corpus import all_graphs, connected_bipartite_graphs
from qdham.graph import Graph, is_connected
from qdham.graph6 import read_graph6_file, write_graph6_file
from qdham.metric import all_pairs_distances, qd_matrix

DATA = Path(__file__).resolve().parent.parent / "data"


def load_corpus(kind: str, n: int) -> list[Graph]:
    """Read ``data/{kind}_n{n}.g6``, generating it first when absent."""
    path = DATA / f"{kind}_n{n}.g6"
    if not path.exists():
        DATA.mkdir(exist_ok=True)
        gen = all_graphs if kind == "graphs" else connected_bipartite_graphs
        write_graph6_file(path, gen(n))
    return read_graph6_file(path)


def connected_corpus(max_n: int) -> list[Graph]:
    return [g for n in range(1, max_n + 1) for g in load_corpus("graphs", n) if is_connected(g)]


@st.composite
def graphs(draw, min_n=1, max_n=10, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, b in zip(pairs, bits) if b]
    if connected:
        # random spanning path on a drawn permutation keeps the rest of the draw meaningful
        perm = draw(st.permutations(range(n)))
        edges += [(perm[i], perm[i + 1]) for i in range(n - 1)]
    return Graph.from_edges(n, edges)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def dense_rho(g: Graph) -> float:
    """Largest eigenvalue by LAPACK, independent of the power iteration."""
    q = qd_matrix(all_pairs_distances(g)).q.astype(float)
    return float(np.linalg.eigvalsh(q)[-1])


@pytest.fixture(scope="session")
def connected_upto7():
    return connected_corpus(7)
