"""Graph transforms that can only lower (or keep) both inertia indices.

Each function returns the pair ``(before, after)``; the property under test is
``i+(before) >= i+(after)`` and ``i-(before) >= i-(after)``.
"""
from __future__ import annotations

from collections.abc import Sequence
from typing import Optional

from ..graph import RationalLike, WeightedGraph, disjoint_union, to_fraction


def _check_vertex(g: WeightedGraph, *vs: int):
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph of order {g.n}")


def _weights(ws: Optional[Sequence[RationalLike]], k: int):
    if ws is None:
        return [to_fraction(1)] * k
    if len(ws) != k:
        raise ValueError(f"expected {k} weights")
    return [to_fraction(w) for w in ws]


def star_shift(g0: WeightedGraph, u: int, star_weights: Sequence[RationalLike],
               link_weight: RationalLike = 1) -> tuple[WeightedGraph, WeightedGraph]:
    """Hang a star by its centre ``v`` from ``u``, then move its leaves onto ``u``.

    The star has ``len(star_weights) + 1`` vertices; leaf ``i`` keeps its weight.
    """
    _check_vertex(g0, u)
    k = len(star_weights) + 1
    ws = _weights(star_weights, k - 1)
    v = g0.n
    leaves = range(v + 1, v + k)
    g1 = g0.add_vertices(k, [(u, v, link_weight)] + [(v, x, w) for x, w in zip(leaves, ws)])
    g2 = g0.add_vertices(k, [(u, v, link_weight)] + [(u, x, w) for x, w in zip(leaves, ws)])
    return g1, g2


def star_merge(g0: WeightedGraph, u1: int, u2: int, l: int, t: int,
               weights1: Optional[Sequence[RationalLike]] = None,
               weights2: Optional[Sequence[RationalLike]] = None,
               allow_empty_first: bool = False) -> tuple[WeightedGraph, WeightedGraph]:
    """``l`` pendants at ``u1`` and ``t`` at ``u2``, versus all ``l + t`` at ``u1``.

    ``u1`` must already carry a pendant whenever pendants move (``l >= 1`` if
    ``t >= 1``): with ``l = 0`` the move is symmetric in ``u1``, ``u2`` and no
    one-sided inequality can hold.  Use ``allow_empty_first=True`` to build the
    pair anyway.
    """
    _check_vertex(g0, u1, u2)
    if u1 == u2:
        raise ValueError("u1 and u2 must differ")
    if l < 0 or t < 0:
        raise ValueError("pendant counts must be non-negative")
    if l == 0 and t > 0 and not allow_empty_first:
        raise ValueError("l must be at least 1 when t >= 1")
    w1, w2 = _weights(weights1, l), _weights(weights2, t)
    n = g0.n
    first = [(u1, n + i, w) for i, w in enumerate(w1)]
    second = [(u2, n + l + i, w) for i, w in enumerate(w2)]
    merged = [(u1, n + l + i, w) for i, w in enumerate(w2)]
    return g0.add_vertices(l + t, first + second), g0.add_vertices(l + t, first + merged)


def path_to_star(g1: WeightedGraph, g2: WeightedGraph, u: int, v: int,
                 path_weights: Sequence[RationalLike], l: Optional[int] = None) -> tuple[WeightedGraph, WeightedGraph]:
    """Join ``u`` and ``v`` by a path on ``l`` vertices, versus gluing ``u`` and
    ``v`` into the centre of a star carrying the same ``l - 1`` weights."""
    _check_vertex(g1, u)
    _check_vertex(g2, v)
    if l is None:
        l = len(path_weights) + 1
    if l < 3:
        raise ValueError("the path needs at least 3 vertices")
    ws = _weights(path_weights, l - 1)
    both = disjoint_union(g1, g2)
    vv = g1.n + v
    n = both.n
    # path u = x0, x1, ..., x_{l-1} = vv with l - 2 new interior vertices
    walk = [u] + list(range(n, n + l - 2)) + [vv]
    gprime = both.add_vertices(l - 2, [(x, y, w) for (x, y), w in zip(zip(walk, walk[1:]), ws)])

    # glue vv onto u, then hang l - 1 leaves on the merged centre
    keep = [x for x in range(n) if x != vv]
    index = {x: i for i, x in enumerate(keep)}
    index[vv] = index[u]
    glued = WeightedGraph(n - 1, tuple((index[x], index[y], w) for x, y, w in both.edges))
    centre = index[u]
    gdouble = glued.add_vertices(l - 1, [(centre, n - 1 + i, w) for i, w in enumerate(ws)])
    return gprime, gdouble
