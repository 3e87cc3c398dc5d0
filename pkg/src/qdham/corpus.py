"""Exhaustive small-graph corpora, one representative per isomorphism class.

Every connected graph on ``n`` vertices arises from a connected graph on
``n - 1`` vertices by adding a vertex with a nonempty neighbourhood (delete a
leaf of a spanning tree to see it).  Candidates are bucketed by an invariant
and deduplicated with the exact isomorphism test.  For bipartite graphs the
new neighbourhood must lie inside one colour class.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .graph import Graph, bipartition, complement, is_connected
from .isomorphism import invariant_key, is_isomorphic


def _extend(g: Graph, neighbourhood: int) -> Graph:
    rows = tuple(row | ((neighbourhood >> v & 1) << g.n) for v, row in enumerate(g.adj))
    return Graph(g.n + 1, rows + (neighbourhood,))


def _subsets(vertices: list[int]) -> Iterator[int]:
    for bits in range(1, 1 << len(vertices)):
        mask = 0
        for i, v in enumerate(vertices):
            if bits >> i & 1:
                mask |= 1 << v
        yield mask


def unique_up_to_isomorphism(graphs: Iterable[Graph]) -> list[Graph]:
    buckets: dict[tuple, list[Graph]] = {}
    out = []
    for g in graphs:
        bucket = buckets.setdefault(invariant_key(g), [])
        if any(is_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        out.append(g)
    return out


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    cands = (
        _extend(g, s) for g in connected_graphs(n - 1) for s in _subsets(list(range(n - 1)))
    )
    return tuple(unique_up_to_isomorphism(cands))


def all_graphs(n: int) -> tuple[Graph, ...]:
    """Connected graphs plus the complements of those whose complement is disconnected."""
    conn = connected_graphs(n)
    return conn + tuple(complement(g) for g in conn if not is_connected(complement(g)))


@lru_cache(maxsize=None)
def connected_bipartite_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)

    def cands():
        for g in connected_bipartite_graphs(n - 1):
            bp = bipartition(g)
            for side in (bp.X, bp.Y):
                if side:
                    yield from (_extend(g, s) for s in _subsets(sorted(side)))

    return tuple(unique_up_to_isomorphism(cands()))
