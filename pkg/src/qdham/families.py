"""Extremal and exceptional graphs: H_{t,n-t}, the NP1/NP2 families, K_{n-1}+e and K_{n-1}+v."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import graph as G
from .errors import InvalidParameter
from .graph import Graph


def build_H(t: int, n: int) -> Graph:
    """Balanced bipartite graph on ``2n`` vertices with ``n^2 - tn + t^2`` edges.

    ``X = 0..n-1``, ``Y1 = n..2n-t-1`` and ``Y2 = 2n-t..2n-1``.  ``X`` is
    completely joined to ``Y1`` and every vertex of ``Y2`` is adjacent to the
    first ``t`` vertices of ``X``.
    """
    if not isinstance(t, int) or not isinstance(n, int) or t < 1:
        raise InvalidParameter(f"H needs integer t >= 1, got t={t!r}")
    if n < 2 * t:
        raise InvalidParameter(f"H needs n >= 2t, got t={t}, n={n}")
    y1 = range(n, 2 * n - t)
    y2 = range(2 * n - t, 2 * n)
    edges = [(x, y) for x in range(n) for y in y1]
    edges += [(x, y) for x in range(t) for y in y2]
    return Graph.from_edges(2 * n, edges)


def pendant_clique(n: int) -> Graph:
    """``K_{n-1}+e``."""
    return G.add_pendant(G.complete(n - 1))


def isolated_clique(n: int) -> Graph:
    """``K_{n-1}+v``."""
    return G.add_isolated(G.complete(n - 1))


@dataclass(frozen=True)
class FamilyMember:
    id: str
    expr: Callable[[int], str]
    order: Optional[int]  # None for the member defined at every order >= min_order
    min_order: int = 0

    def exists_at(self, n: int) -> bool:
        return n == self.order if self.order is not None else n >= self.min_order

    def dsl(self, n: int) -> str:
        return self.expr(n)

    def build(self, n: Optional[int] = None) -> Graph:
        from .expr import parse_expr

        n = self.order if n is None else n
        if n is None or not self.exists_at(n):
            raise InvalidParameter(f"{self.id} has no member of order {n}")
        return parse_expr(self.expr(n))


def _fixed(id_: str, expr: str, order: int) -> FamilyMember:
    return FamilyMember(id_, lambda n, e=expr: e, order)


NP1: tuple[FamilyMember, ...] = (
    FamilyMember("K3v(K{n-5}+2K1)", lambda n: f"join(kn(3), union(kn({n - 5}), e(2)))", None, 7),
    _fixed("K6v6K1", "join(kn(6), e(6))", 12),
    _fixed("K4v(K2+3K1)", "join(kn(4), union(kn(2), e(3)))", 9),
    _fixed("5K1vK5", "join(e(5), kn(5))", 10),
    _fixed("K4v(K1,4+K1)", "join(kn(4), union(star(4), kn(1)))", 10),
    _fixed("K4v(K1,3+K2)", "join(kn(4), union(star(3), kn(2)))", 10),
    _fixed("K3vK2,5", "join(kn(3), bip(2, 5))", 10),
    _fixed("K4v4K1", "join(kn(4), e(4))", 8),
    _fixed("K3v(K1+K1,3)", "join(kn(3), union(kn(1), star(3)))", 8),
    _fixed("K3v(K1,2+K2)", "join(kn(3), union(star(2), kn(2)))", 8),
    _fixed("K2vK2,4", "join(kn(2), bip(2, 4))", 8),
)

NP2: tuple[FamilyMember, ...] = (
    FamilyMember("K2v(K{n-4}+2K1)", lambda n: f"join(kn(2), union(kn({n - 4}), e(2)))", None, 6),
    _fixed("K5v6K1", "join(kn(5), e(6))", 11),
    _fixed("K3v(K2+3K1)", "join(kn(3), union(kn(2), e(3)))", 8),
    _fixed("5K1vK4", "join(e(5), kn(4))", 9),
    _fixed("K3v(K1,4+K1)", "join(kn(3), union(star(4), kn(1)))", 9),
    _fixed("K3v(K1,3+K2)", "join(kn(3), union(star(3), kn(2)))", 9),
    _fixed("K2vK2,5", "join(kn(2), bip(2, 5))", 9),
    _fixed("K3v4K1", "join(kn(3), e(4))", 7),
    _fixed("K2v(K1+K1,3)", "join(kn(2), union(kn(1), star(3)))", 7),
    _fixed("K2v(K1,2+K2)", "join(kn(2), union(star(2), kn(2)))", 7),
    _fixed("K1vK2,4", "join(kn(1), bip(2, 4))", 7),
)

FAMILIES = {"NP1": NP1, "NP2": NP2}


def family_members(family: str, order: int) -> list[tuple[FamilyMember, Graph]]:
    try:
        members = FAMILIES[family.upper()]
    except KeyError:
        raise InvalidParameter(f"unknown family {family!r}") from None
    return [(m, m.build(order)) for m in members if m.exists_at(order)]


def build_family(family: str, order: int) -> list[Graph]:
    return [g for _, g in family_members(family, order)]
