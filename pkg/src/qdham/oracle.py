"""Exact Hamiltonicity decisions for small graphs.

The kernel is a subset dynamic program anchored at one vertex: for every set
``S`` of non-anchor vertices it records, as a bitmask, which ``v`` in ``S`` end a
path that starts at the anchor and visits exactly ``S``.  Layers of equal
popcount are processed with numpy.  Hamilton paths with a free start reduce to
Hamilton cycles through an added universal vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import InvalidParameter, SizeLimitError
from .graph import Graph, is_connected, iter_bits

CYCLE_LIMIT = 24
PAIRWISE_LIMIT = 16


@dataclass(frozen=True)
class OracleAnswer:
    holds: bool
    witness: Optional[tuple[int, ...]] = None
    failing: Optional[tuple[int, ...]] = None  # failing pair / vertex for the all-pairs queries

    def __bool__(self) -> bool:
        return self.holds


@lru_cache(maxsize=8)
def _layers(bits: int) -> list[np.ndarray]:
    masks = np.arange(1 << bits, dtype=np.uint32)
    pc = np.bitwise_count(masks)
    order = np.argsort(pc, kind="stable")
    bounds = np.searchsorted(pc[order], np.arange(bits + 2))
    return [order[bounds[k] : bounds[k + 1]].astype(np.uint32) for k in range(bits + 1)]


def _reach_table(g: Graph, anchor: int) -> tuple[np.ndarray, list[int], list[int]]:
    """Run the DP; returns (reach, others, local adjacency) in the anchor-free labelling."""
    others = [v for v in range(g.n) if v != anchor]
    pos = {v: i for i, v in enumerate(others)}
    k = len(others)
    local = []
    for v in others:
        row = 0
        for w in iter_bits(g.adj[v]):
            if w != anchor:
                row |= 1 << pos[w]
        local.append(row)
    reach = np.zeros(1 << k, dtype=np.uint32)
    for w in iter_bits(g.adj[anchor]):
        reach[1 << pos[w]] = 1 << pos[w]
    layers = _layers(k)
    for size in range(1, k):
        layer = layers[size]
        r = reach[layer]
        live = r != 0
        layer, r = layer[live], r[live]
        if layer.size == 0:
            break
        for w in range(k):
            bit = np.uint32(1 << w)
            sel = ((layer & bit) == 0) & ((r & np.uint32(local[w])) != 0)
            if sel.any():
                reach[layer[sel] | bit] |= bit
    return reach, others, local


def _trace_back(reach: np.ndarray, local: list[int], end: int) -> list[int]:
    full = len(reach) - 1
    seq = [end]
    mask, cur = full, end
    while mask.bit_count() > 1:
        mask ^= 1 << cur
        cands = int(reach[mask]) & local[cur]
        cur = (cands & -cands).bit_length() - 1
        seq.append(cur)
    seq.reverse()
    return seq


def _witness(reach, others, local, anchor, end_local) -> tuple[int, ...]:
    return (anchor,) + tuple(others[i] for i in _trace_back(reach, local, end_local))


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _check_limit(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise SizeLimitError(g.n, limit, what)


def is_hamilton_cycle(g: Graph, seq) -> bool:
    return (
        g.n >= 3
        and sorted(seq) == list(range(g.n))
        and all(g.has_edge(seq[i], seq[(i + 1) % g.n]) for i in range(g.n))
    )


def is_hamilton_path(g: Graph, seq, start=None, end=None) -> bool:
    return (
        sorted(seq) == list(range(g.n))
        and all(g.has_edge(seq[i], seq[i + 1]) for i in range(g.n - 1))
        and (start is None or seq[0] == start)
        and (end is None or seq[-1] == end)
    )


def _validated(ok: bool, witness) -> OracleAnswer:
    if not ok:
        raise RuntimeError(f"internal error: witness {witness} failed validation")
    return OracleAnswer(True, tuple(witness))


def _leaves(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


def has_hamilton_cycle(g: Graph, limit: int = CYCLE_LIMIT) -> OracleAnswer:
    _check_limit(g, limit, "has_hamilton_cycle")
    if g.n < 3 or g.min_degree() < 2 or not is_connected(g):
        return OracleAnswer(False)
    reach, others, local = _reach_table(g, 0)
    ends = int(reach[-1]) & sum(1 << i for i, v in enumerate(others) if g.has_edge(0, v))
    if not ends:
        return OracleAnswer(False)
    w = _witness(reach, others, local, 0, _lowest(ends))
    return _validated(is_hamilton_cycle(g, w), w)


def _path_blocked(g: Graph) -> bool:
    if not is_connected(g):
        return True
    leaves = _leaves(g)
    if len(leaves) > 2:
        return True
    if len(leaves) == 2 and g.n > 3 and g.adj[leaves[0]] == g.adj[leaves[1]]:
        return True
    return False


def has_hamilton_path(g: Graph, limit: int = CYCLE_LIMIT) -> OracleAnswer:
    _check_limit(g, limit, "has_hamilton_path")
    if g.n == 1:
        return OracleAnswer(True, (0,))
    if g.n == 2:
        return _validated(True, (0, 1)) if g.has_edge(0, 1) else OracleAnswer(False)
    if _path_blocked(g):
        return OracleAnswer(False)
    # universal vertex u = n, adjacent to everything; a Hamilton cycle through u is a path in g
    full = (1 << g.n) - 1
    aug = Graph(g.n + 1, tuple(row | (1 << g.n) for row in g.adj) + (full,))
    reach, others, local = _reach_table(aug, g.n)
    ends = int(reach[-1])
    if not ends:
        return OracleAnswer(False)
    w = _witness(reach, others, local, g.n, _lowest(ends))[1:]
    return _validated(is_hamilton_path(g, w), w)


def has_hamilton_path_between(g: Graph, u: int, v: int, limit: int = CYCLE_LIMIT) -> OracleAnswer:
    _check_limit(g, limit, "has_hamilton_path_between")
    if u == v:
        raise InvalidParameter("endpoints must differ")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InvalidParameter(f"endpoints ({u}, {v}) out of range")
    if not is_connected(g) or any(x not in (u, v) for x in _leaves(g)):
        return OracleAnswer(False)
    reach, others, local = _reach_table(g, u)
    target = others.index(v)
    if not int(reach[-1]) >> target & 1:
        return OracleAnswer(False)
    w = _witness(reach, others, local, u, target)
    return _validated(is_hamilton_path(g, w, u, v), w)


def is_hamilton_connected(g: Graph, limit: int = PAIRWISE_LIMIT) -> OracleAnswer:
    """Every pair joined by a Hamilton path; ``failing`` is the lowest failing pair.

    ``K_1`` counts as Hamilton-connected (there are no pairs to check).
    """
    _check_limit(g, limit, "is_hamilton_connected")
    if g.n == 1:
        return OracleAnswer(True)
    if not is_connected(g):
        return OracleAnswer(False, failing=(0, 1))
    for u in range(g.n - 1):
        reach, others, _ = _reach_table(g, u)
        ends = int(reach[-1])
        for i, v in enumerate(others):
            if v > u and not ends >> i & 1:
                return OracleAnswer(False, failing=(u, v))
    return OracleAnswer(True)


def is_traceable_from_every_vertex(g: Graph, limit: int = PAIRWISE_LIMIT) -> OracleAnswer:
    """A Hamilton path starts at every vertex; ``failing`` is the lowest failing vertex."""
    _check_limit(g, limit, "is_traceable_from_every_vertex")
    if g.n == 1:
        return OracleAnswer(True)
    if not is_connected(g):
        return OracleAnswer(False, failing=(0,))
    for x in range(g.n):
        reach, _, _ = _reach_table(g, x)
        if not int(reach[-1]):
            return OracleAnswer(False, failing=(x,))
    return OracleAnswer(True)


# --- independent backtracking search, used to cross-check the DP -------------


def _extend(g: Graph, seq: list[int], visited: int, target: Optional[int], closing: Optional[int]) -> bool:
    if len(seq) == g.n:
        if target is not None and seq[-1] != target:
            return False
        return closing is None or g.has_edge(seq[-1], closing)
    for w in iter_bits(g.adj[seq[-1]] & ~visited):
        if w == target and len(seq) != g.n - 1:
            continue
        seq.append(w)
        if _extend(g, seq, visited | 1 << w, target, closing):
            return True
        seq.pop()
    return False


def backtrack_hamilton_cycle(g: Graph) -> OracleAnswer:
    if g.n < 3:
        return OracleAnswer(False)
    seq = [0]
    if _extend(g, seq, 1, None, 0):
        return _validated(is_hamilton_cycle(g, seq), seq)
    return OracleAnswer(False)


def backtrack_hamilton_path(g: Graph, start: Optional[int] = None, end: Optional[int] = None) -> OracleAnswer:
    starts = [start] if start is not None else range(g.n)
    for s in starts:
        seq = [s]
        if g.n == 1 or _extend(g, seq, 1 << s, end, None):
            if g.n == 1 and end is not None and end != s:
                continue
            return _validated(is_hamilton_path(g, seq, start, end), seq)
    return OracleAnswer(False)
