"""Closed-form inertia of paths and cycles, and a pendant-reduction solver."""
from __future__ import annotations

import random
from collections.abc import Sequence
from fractions import Fraction
from math import prod
from typing import Optional

from .engine import congruence_inertia
from .graph import Inertia, RationalLike, WeightedGraph, adjacency_matrix, split_components, to_fraction


def path_inertia(n: int) -> Inertia:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    if n % 2:
        return Inertia((n - 1) // 2, (n - 1) // 2, 1)
    return Inertia(n // 2, n // 2, 0)


def cycle_inertia(weights: Sequence[RationalLike]) -> Inertia:
    """Inertia of the cycle whose consecutive edges carry ``weights``.

    Only the ``n % 4 == 0`` case looks at the weights: the inertia drops by
    one on each side when the odd- and even-position edge products agree.
    """
    ws = [to_fraction(w) for w in weights]
    n = len(ws)
    if n < 3:
        raise ValueError("a cycle needs at least three edges")
    if any(w <= 0 for w in ws):
        raise ValueError("cycle weights must be positive")
    r = n % 4
    if r == 1:
        return Inertia((n + 1) // 2, (n - 1) // 2, 0)
    if r == 2:
        return Inertia(n // 2, n // 2, 0)
    if r == 3:
        return Inertia((n - 1) // 2, (n + 1) // 2, 0)
    if prod(ws[0::2]) == prod(ws[1::2]):
        return Inertia(n // 2 - 1, n // 2 - 1, 2)
    return Inertia(n // 2, n // 2, 0)


def _path_or_cycle_weights(g: WeightedGraph) -> Optional[tuple[str, list[Fraction]]]:
    """Classify a connected graph as ``"path"`` or ``"cycle"`` by degrees alone."""
    degs = [g.degree(v) for v in range(g.n)]
    if g.n >= 3 and all(d == 2 for d in degs):
        start = 0
    elif g.n >= 2 and degs.count(1) == 2 and all(d in (1, 2) for d in degs) and g.m == g.n - 1:
        start = degs.index(1)
    else:
        return None
    ws, prev, cur = [], None, start
    while True:
        nxt = next((x for x in sorted(g.adj[cur]) if x != prev), None)
        if nxt is None:
            break
        ws.append(g.adj[cur][nxt])
        if nxt == start:
            break
        prev, cur = cur, nxt
    return ("cycle" if degs[start] == 2 else "path"), ws


def _pendants(g: WeightedGraph) -> list[tuple[int, int]]:
    return [(v, next(iter(g.adj[v]))) for v in range(g.n) if g.degree(v) == 1]


def _twin_deletions(g: WeightedGraph) -> list[int]:
    """Every pendant vertex whose neighbour carries another pendant."""
    by_centre: dict[int, list[int]] = {}
    for v, c in _pendants(g):
        by_centre.setdefault(c, []).append(v)
    return [v for leaves in by_centre.values() if len(leaves) > 1 for v in leaves]


def structural_inertia(g: WeightedGraph, rng: Optional[random.Random] = None) -> Inertia:
    """Inertia via component splitting, twin deletion and pendant-pair removal.

    Deleting one of two pendant twins keeps ``i+`` and ``i-`` and lowers the
    nullity by one; deleting a pendant together with its neighbour removes
    exactly one positive and one negative eigenvalue.  Paths, cycles and isolated vertices are closed-form;
    any other pendant-free remainder goes to :func:`congruence_inertia`.

    With ``rng`` the twin/pendant choices and component order are randomised
    (the result must not change); otherwise the smallest ids are used.
    """
    total = Inertia(0, 0, 0)
    stack = [g]
    while stack:
        h = stack.pop(rng.randrange(len(stack)) if rng else -1)
        for comp, _ in split_components(h):
            total = total + _reduce_component(comp, rng, stack)
    return total


def _reduce_component(g: WeightedGraph, rng, stack: list) -> Inertia:
    # returns the inertia settled here; leftovers that need re-splitting are pushed
    if g.n == 1:
        return Inertia(0, 0, 1)
    shape = _path_or_cycle_weights(g)
    if shape is not None:
        kind, ws = shape
        return path_inertia(g.n) if kind == "path" else cycle_inertia(ws)
    twins = _twin_deletions(g)
    if twins:
        v = rng.choice(twins) if rng else min(twins)
        stack.append(g.delete([v]))
        return Inertia(0, 0, 1)  # i+ and i- survive; the lost vertex was a zero eigenvalue
    pend = _pendants(g)
    if pend:
        v, u = rng.choice(pend) if rng else pend[0]
        stack.append(g.delete([v, u]))
        return Inertia(1, 1, 0)
    return congruence_inertia(adjacency_matrix(g))
