"""Canonical forms of small unweighted graphs.

The canonical form is the lexicographically smallest sorted edge list over
the labelings reached by individualisation/refinement from the degree
partition.  Branching skips vertices that are interchangeable with an already
tried one (same neighbourhood apart from each other), which is what keeps
graphs with many pendant twins cheap.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations

from ..graph import WeightedGraph

Edges = tuple[tuple[int, int], ...]


def _neighbours(n: int, edges: Iterable[tuple[int, int]]) -> list[frozenset[int]]:
    nb: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return [frozenset(s) for s in nb]


def _refine(nb: Sequence[frozenset[int]], cells: list[list[int]]) -> list[list[int]]:
    while True:
        where = {v: i for i, cell in enumerate(cells) for v in cell}
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for x in nb[v]:
                    counts[where[x]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            out.extend(sig[k] for k in sorted(sig))
        if len(out) == len(cells):
            return out
        cells = out


def _interchangeable(nb, v: int, w: int) -> bool:
    return nb[v] - {w} == nb[w] - {v}


def canonical_edges(n: int, edges: Iterable[tuple[int, int]]) -> Edges:
    edges = [(min(u, v), max(u, v)) for u, v in edges]
    nb = _neighbours(n, edges)
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(len(nb[v]), []).append(v)
    start = _refine(nb, [by_degree[d] for d in sorted(by_degree)])
    best: list = []

    def search(cells: list[list[int]]):
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            label = {cell[0]: i for i, cell in enumerate(cells)}
            enc = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in edges))
            if not best or enc < best[0]:
                best[:] = [enc]
            return
        tried: list[int] = []
        for v in cells[target]:
            if any(_interchangeable(nb, v, t) for t in tried):
                continue
            tried.append(v)
            rest = [x for x in cells[target] if x != v]
            search(_refine(nb, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(start)
    return best[0] if best else ()


def canonical_form(g: WeightedGraph) -> Edges:
    """Canonical edge list of the underlying (unweighted) graph."""
    return canonical_edges(g.n, ((u, v) for u, v, _ in g.edges))


def is_connected(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    if n == 0:
        return True
    nb = _neighbours(n, edges)
    seen, stack = {0}, [0]
    while stack:
        for y in nb[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def brute_force_bicyclic(n: int) -> set[Edges]:
    """Canonical forms of all connected graphs on ``n`` vertices with ``n + 1``
    edges, by filtering every edge subset."""
    pairs = list(combinations(range(n), 2))
    out = set()
    for es in combinations(pairs, n + 1):
        if is_connected(n, es):
            out.add(canonical_edges(n, es))
    return out
