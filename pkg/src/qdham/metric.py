"""Shortest-path distances, transmissions and the distance signless Laplacian."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedError
from .graph import Graph, iter_bits


@dataclass(frozen=True, eq=False)
class DistanceData:
    dist: np.ndarray  # n x n int64 hop counts
    tr: np.ndarray  # per-vertex transmission
    sigma: int  # sum over unordered pairs

    @property
    def n(self) -> int:
        return len(self.tr)


@dataclass(frozen=True, eq=False)
class QDMatrix:
    q: np.ndarray  # integer entries; converted to float by the eigensolver

    @property
    def n(self) -> int:
        return self.q.shape[0]


def bfs_layers(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    out = [-1] * g.n
    out[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~seen
        seen |= frontier
        for w in iter_bits(frontier):
            out[w] = d
    return out


def all_pairs_distances(g: Graph) -> DistanceData:
    rows = []
    for s in range(g.n):
        row = bfs_layers(g, s)
        if -1 in row:
            raise DisconnectedError(s, row.index(-1))
        rows.append(row)
    dist = np.array(rows, dtype=np.int64)
    tr = dist.sum(axis=1)
    return DistanceData(dist, tr, int(tr.sum()) // 2)


def qd_matrix(d: DistanceData) -> QDMatrix:
    return QDMatrix(d.dist + np.diag(d.tr))


def is_transmission_regular(d: DistanceData) -> bool:
    return bool(np.all(d.tr == d.tr[0]))


def degree_transmission_bound(g: Graph, d: DistanceData) -> np.ndarray:
    """``Tr(v) - (2(n-1) - deg v)``; zero exactly when ``v`` has eccentricity <= 2."""
    deg = np.array(g.degrees(), dtype=np.int64)
    return d.tr - (2 * (g.n - 1) - deg)


def diameter(d: DistanceData) -> int:
    return int(d.dist.max())
