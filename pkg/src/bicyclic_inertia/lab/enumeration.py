from __future__ import annotations

from functools import lru_cache

from ..graph import WeightedGraph
from ..structure import infinity_graph, theta_graph
from .canon import Edges, canonical_edges, canonical_form

MIN_N, MAX_N = 4, 10


def base_families(order: int) -> list[tuple[str, int, int, int]]:
    """All ``infinity(p,l,q)`` (``p <= q``) and ``theta(p,l,q)`` (``l <= p <= q``)
    bases with exactly ``order`` vertices."""
    out = []
    for p in range(3, order + 1):
        for q in range(p, order + 1):
            l = order - p - q + 2
            if l >= 1:
                out.append(("infinity", p, l, q))
    for l in range(0, order):
        for p in range(max(l, 1), order):
            q = order - 2 - p - l
            if q >= p:
                out.append(("theta", p, l, q))
    return out


def family_graph(kind: str, p: int, l: int, q: int) -> WeightedGraph:
    return infinity_graph(p, l, q) if kind == "infinity" else theta_graph(p, l, q)


def _from_canonical(n: int, edges: Edges) -> WeightedGraph:
    return WeightedGraph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Edges, ...]:
    found: set[Edges] = set()
    for fam in base_families(n):
        found.add(canonical_form(family_graph(*fam)))
    if n > MIN_N:
        for edges in _level(n - 1):
            for v in range(n - 1):
                found.add(canonical_edges(n, edges + ((v, n - 1),)))
    return tuple(sorted(found))


def enumerate_bicyclic(n: int) -> list[WeightedGraph]:
    """All connected graphs with ``n`` vertices and ``n + 1`` edges, up to
    isomorphism, as unit-weight graphs in canonical labelling.

    Built by growing pendant vertices onto the graphs of order ``n - 1`` and
    adding the pendant-free bases of order ``n``.
    """
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"n must be in {MIN_N}..{MAX_N}")
    return [_from_canonical(n, e) for e in _level(n)]
