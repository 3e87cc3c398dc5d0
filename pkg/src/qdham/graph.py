"""Simple undirected graphs stored as adjacency bitrows, plus the standard constructors.

Vertex labels are ``0..n-1``.  Every binary constructor lists the vertices of
its first argument first, so ``join(a, b)`` maps ``a``'s vertex ``i`` to ``i``
and ``b``'s vertex ``j`` to ``a.n + j``.  Quotient partitions elsewhere rely
on that positional convention; isomorphism testing does not.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import InvalidParameter


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise InvalidParameter(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise InvalidParameter(f"row {v} has out-of-range bits or a self-loop")
            rest = row
            while rest:
                low = rest & -rest
                w = low.bit_length() - 1
                if not self.adj[w] >> v & 1:
                    raise InvalidParameter(f"adjacency not symmetric at ({v}, {w})")
                rest ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise InvalidParameter("a graph needs at least one vertex")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameter(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_count(name: str, k: int, minimum: int = 1) -> None:
    if not isinstance(k, int) or k < minimum:
        raise InvalidParameter(f"{name} requires an integer >= {minimum}, got {k!r}")


def complete(n: int) -> Graph:
    _check_count("complete", n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    """``nK_1``."""
    _check_count("empty", n)
    return Graph(n, (0,) * n)


def star(k: int) -> Graph:
    """``K_{1,k}`` with the centre at vertex 0."""
    _check_count("star", k)
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def path(n: int) -> Graph:
    _check_count("path", n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _check_count("cycle", n, 3)
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}``; the size-``a`` part is ``0..a-1``."""
    _check_count("complete_bipartite", a)
    _check_count("complete_bipartite", b)
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(row << shift for row in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    left = ((1 << g2.n) - 1) << shift
    right = (1 << g1.n) - 1
    rows = tuple(row | left for row in g1.adj) + tuple((row << shift) | right for row in g2.adj)
    return Graph(g1.n + g2.n, rows)


def repeat(k: int, g: Graph) -> Graph:
    """``kG``: ``k`` disjoint copies of ``g``."""
    _check_count("repeat", k)
    out = g
    for _ in range(k - 1):
        out = disjoint_union(out, g)
    return out


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)))


def add_isolated(g: Graph) -> Graph:
    return Graph(g.n + 1, g.adj + (0,))


def add_pendant(g: Graph) -> Graph:
    """Append a new vertex adjacent to vertex 0 only."""
    rows = list(g.adj) + [1]
    rows[0] |= 1 << g.n
    return Graph(g.n + 1, tuple(rows))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``g``'s vertex ``v``."""
    rows = [0] * g.n
    for u, v in g.edges():
        a, b = perm[u], perm[v]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(vertices), edges)


# --- structural queries -----------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    X: frozenset[int]
    Y: frozenset[int]

    @property
    def balanced(self) -> bool:
        return len(self.X) == len(self.Y)


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    min_degree: int
    connected: bool
    bipartition: Optional[Bipartition]

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None


def reachable(g: Graph, source: int = 0) -> int:
    """Bitmask of vertices reachable from ``source``."""
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return reachable(g) == (1 << g.n) - 1


def bipartition(g: Graph) -> Optional[Bipartition]:
    """Two-colouring by BFS, or ``None`` when an odd cycle exists.

    Each component's lowest vertex is coloured into ``X``.
    """
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.adj[u]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    X = frozenset(v for v in range(g.n) if colour[v] == 0)
    return Bipartition(X, frozenset(range(g.n)) - X)


def basic_stats(g: Graph) -> GraphStats:
    return GraphStats(g.n, g.m, g.min_degree(), is_connected(g), bipartition(g))
