"""Exact isomorphism testing for small graphs.

Vertices are first coloured by degree and BFS distance profile, the colouring
is refined (colour plus multiset of neighbour colours) until stable, and the
remaining choices are settled by backtracking over colour classes.
"""

from __future__ import annotations

from .errors import SizeLimitError
from .graph import Graph, iter_bits

ISO_LIMIT = 16


def distance_profile(g: Graph, v: int) -> tuple[int, ...]:
    """Number of vertices at distance 1, 2, ... from ``v``, then the unreachable count."""
    seen = 1 << v
    frontier = seen
    layers = []
    while True:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
        layers.append(frontier.bit_count())
    layers.append(g.n - seen.bit_count())
    return tuple(layers)


def _initial_colours(g: Graph) -> list[int]:
    return [hash((g.degree(v), distance_profile(g, v))) for v in range(g.n)]


def _refine_step(g: Graph, colours: list[int]) -> list[int]:
    return [
        hash((colours[v], tuple(sorted(colours[w] for w in iter_bits(g.adj[v])))))
        for v in range(g.n)
    ]


def stable_colours(g: Graph) -> list[int]:
    colours = _initial_colours(g)
    classes = len(set(colours))
    while True:
        new = _refine_step(g, colours)
        k = len(set(new))
        if k == classes:
            return colours
        colours, classes = new, k


def invariant_key(g: Graph) -> tuple:
    """Isomorphism invariant suitable for bucketing; equal graphs give equal keys."""
    return (g.n, g.m, tuple(sorted(stable_colours(g))))


def is_isomorphic(g1: Graph, g2: Graph, limit: int = ISO_LIMIT) -> bool:
    if g1.n > limit or g2.n > limit:
        raise SizeLimitError(max(g1.n, g2.n), limit, "is_isomorphic")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False

    c1, c2 = _initial_colours(g1), _initial_colours(g2)
    classes = len(set(c1))
    while True:
        if sorted(c1) != sorted(c2):
            return False
        n1, n2 = _refine_step(g1, c1), _refine_step(g2, c2)
        k = len(set(n1))
        if k == classes:
            break
        c1, c2, classes = n1, n2, k

    n = g1.n
    class_size: dict[int, int] = {}
    for c in c1:
        class_size[c] = class_size.get(c, 0) + 1
    # Smallest classes first, then prefer vertices adjacent to ones already placed.
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = min(
            remaining,
            key=lambda u: (class_size[c1[u]], -(g1.adj[u] & placed).bit_count(), u),
        )
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    candidates = [[w for w in range(n) if c2[w] == c1[v]] for v in order]
    image = [-1] * n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        for w in candidates[depth]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:depth]:
                if (g1.adj[v] >> u & 1) != (g2.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(depth + 1):
                return True
            used ^= 1 << w
            image[v] = -1
        return False

    return extend(0)
