"""Recognition of bicyclic graphs and decomposition of their pendant-free base.

A pendant-free bicyclic graph is either two cycles joined by a path
(``infinity(p, l, q)``; ``l = 1`` when the cycles share a vertex) or three
internally disjoint paths between two branch vertices (``theta(p, l, q)``).

Edge labelling of a :class:`BicyclicBase`:

* infinity: ``a`` runs around the shorter cycle from its attachment vertex,
  towards the attachment vertex's smaller-id neighbour; ``c`` runs along the
  connecting path starting on that cycle's side; ``b`` runs around the other
  cycle the same way.
* theta: ``u`` is the branch vertex with the smaller id; ``b``, ``a``, ``c``
  are the ``u -> v`` paths in increasing length, so that ``l <= p <= q``.

Ties between equally long cycles or paths are broken by the lexicographically
smaller weight sequence, then by the smaller vertex id.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .graph import RationalLike, WeightedGraph, split_components, to_fraction

INFINITY = "infinity"
THETA = "theta"


class NotBicyclicError(ValueError):
    pass


class ExtractedBase(NamedTuple):
    graph: WeightedGraph
    has_pendants: bool
    vertices: tuple[int, ...]  # base vertex i is vertices[i] in the input graph


@dataclass(frozen=True)
class BicyclicBase:
    kind: str
    p: int
    l: int
    q: int
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    # vertex walks carrying a, b, c; ids refer to the classified graph
    walks: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] = ((), (), ())

    def __post_init__(self):
        if self.kind == INFINITY:
            if self.p < 3 or self.q < 3 or self.l < 1:
                raise ValueError("infinity needs p, q >= 3 and l >= 1")
            sizes = (self.p, self.q, self.l - 1)
        elif self.kind == THETA:
            if min(self.p, self.l, self.q) < 0 or (self.p, self.l, self.q).count(0) > 1:
                raise ValueError("theta needs p, l, q >= 0 with at most one zero")
            sizes = (self.p + 1, self.l + 1, self.q + 1)
        else:
            raise ValueError(f"unknown base kind {self.kind!r}")
        if (len(self.a), len(self.b), len(self.c)) != sizes:
            raise ValueError(f"weight sequences must have lengths {sizes}")

    @property
    def family(self) -> tuple[str, int, int, int]:
        return self.kind, self.p, self.l, self.q

    @property
    def label(self) -> str:
        return f"{self.kind}({self.p},{self.l},{self.q})"

    @property
    def order(self) -> int:
        if self.kind == INFINITY:
            return self.p + self.q + self.l - 2
        return self.p + self.l + self.q + 2

    def symbols(self) -> dict[str, Fraction]:
        """Weights keyed ``a1``, ``a2``, ..., ``b1``, ..., ``c1``, ..."""
        out = {}
        for name, seq in (("a", self.a), ("b", self.b), ("c", self.c)):
            for i, w in enumerate(seq, start=1):
                out[f"{name}{i}"] = w
        return out

    def edge_weights(self) -> dict[tuple[int, int], Fraction]:
        """Reassemble the labelled walks into an edge map on the original ids."""
        out = {}
        for walk, seq in zip(self.walks, (self.a, self.b, self.c)):
            for (x, y), w in zip(zip(walk, walk[1:]), seq):
                out[(min(x, y), max(x, y))] = w
        return out

    def graph(self) -> WeightedGraph:
        """The base as a standalone graph in its standard vertex layout."""
        if self.kind == INFINITY:
            return infinity_graph(self.p, self.l, self.q, self.a, self.b, self.c)
        return theta_graph(self.p, self.l, self.q, self.a, self.b, self.c)


def _weights(seq, k: int) -> tuple[Fraction, ...]:
    if seq is None:
        return (Fraction(1),) * k
    out = tuple(to_fraction(w) for w in seq)
    if len(out) != k:
        raise ValueError(f"expected {k} weights, got {len(out)}")
    return out


def infinity_graph(p: int, l: int, q: int, a=None, b=None, c=None) -> WeightedGraph:
    """``infinity(p, l, q)`` with the shorter-cycle-first layout.

    Vertices ``0..p-1`` form the ``a`` cycle (attachment 0); the connecting
    path has ``l - 2`` interior vertices; the ``b`` cycle is attached at its
    far end.
    """
    if p < 3 or q < 3 or l < 1:
        raise ValueError("infinity needs p, q >= 3 and l >= 1")
    a, b, c = _weights(a, p), _weights(b, q), _weights(c, l - 1)
    edges = [(i, (i + 1) % p, a[i]) for i in range(p)]
    path = [0] + list(range(p, p + l - 2)) + ([p + l - 2] if l >= 2 else [])
    edges += [(x, y, w) for (x, y), w in zip(zip(path, path[1:]), c)]
    attach = path[-1]
    nxt = p + l - 1
    cyc = [attach] + list(range(nxt, nxt + q - 1))
    edges += [(cyc[i], cyc[(i + 1) % q], b[i]) for i in range(q)]
    return WeightedGraph(p + q + l - 2, tuple(edges))


def theta_graph(p: int, l: int, q: int, a=None, b=None, c=None) -> WeightedGraph:
    """``theta(p, l, q)``: branch vertices 0 and 1, then the interiors of the
    ``a``, ``b`` and ``c`` paths in that order."""
    if min(p, l, q) < 0 or (p, l, q).count(0) > 1:
        raise ValueError("theta needs p, l, q >= 0 with at most one zero")
    seqs = (_weights(a, p + 1), _weights(b, l + 1), _weights(c, q + 1))
    edges = []
    nxt = 2
    for k, ws in zip((p, l, q), seqs):
        walk = [0] + list(range(nxt, nxt + k)) + [1]
        nxt += k
        edges += [(x, y, w) for (x, y), w in zip(zip(walk, walk[1:]), ws)]
    return WeightedGraph(p + l + q + 2, tuple(edges))


def is_bicyclic(g: WeightedGraph) -> bool:
    return g.n > 0 and g.m == g.n + 1 and len(split_components(g)) == 1


def extract_base(g: WeightedGraph) -> ExtractedBase:
    """Strip pendant vertices until none are left."""
    if not is_bicyclic(g):
        raise NotBicyclicError("graph is not bicyclic")
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    leaves = [v for v in range(g.n) if deg[v] == 1]
    removed = False
    while leaves:
        v = leaves.pop()
        if not alive[v]:
            continue
        alive[v] = False
        removed = True
        for u in g.adj[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    leaves.append(u)
    keep = tuple(v for v in range(g.n) if alive[v])
    return ExtractedBase(g.induced(keep), removed, keep)


def _trace(g: WeightedGraph, start: int, first: int) -> list[int]:
    walk = [start, first]
    while g.degree(walk[-1]) == 2:
        x, y = walk[-2], walk[-1]
        walk.append(next(z for z in g.adj[y] if z != x))
    return walk


def _walk_weights(g: WeightedGraph, walk: Sequence[int]) -> tuple[Fraction, ...]:
    return tuple(g.adj[x][y] for x, y in zip(walk, walk[1:]))


def _cycle_at(g: WeightedGraph, w: int, first: int) -> list[int]:
    loop = _trace(g, w, first)
    back = loop[-2]
    return loop if first < back else _trace(g, w, back)


def classify_base(base: WeightedGraph) -> BicyclicBase:
    if not is_bicyclic(base) or any(base.degree(v) < 2 for v in range(base.n)):
        raise NotBicyclicError("not a pendant-free bicyclic graph")
    big = [v for v in range(base.n) if base.degree(v) > 2]

    def key(walk):
        return (len(walk), _walk_weights(base, walk), sorted(walk[1:-1]) or walk)

    def cycle_key(walk):
        # cycle direction follows vertex ids, so compare orientation-free
        ws = _walk_weights(base, walk)
        return (len(walk), min(ws, ws[::-1]), sorted(walk[1:-1]))

    if len(big) == 1:
        (w,) = big
        cycles = []
        for first in sorted(base.adj[w]):
            cyc = _cycle_at(base, w, first)
            if cyc not in cycles:
                cycles.append(cyc)
        cp, cq = sorted(cycles, key=cycle_key)
        return BicyclicBase(INFINITY, len(cp) - 1, 1, len(cq) - 1,
                            _walk_weights(base, cp), _walk_weights(base, cq), (),
                            (tuple(cp), tuple(cq), (w,)))

    x, y = big
    branches = [_trace(base, x, first) for first in sorted(base.adj[x])]
    if all(br[-1] == y for br in branches):
        paths = sorted(branches, key=key)
        pb, pa, pc = paths
        return BicyclicBase(THETA, len(pa) - 2, len(pb) - 2, len(pc) - 2,
                            _walk_weights(base, pa), _walk_weights(base, pb), _walk_weights(base, pc),
                            (tuple(pa), tuple(pb), tuple(pc)))

    bridge = next(br for br in branches if br[-1] == y)
    cx = next(_cycle_at(base, x, first) for first in sorted(base.adj[x]) if first != bridge[1])
    cy = next(_cycle_at(base, y, first) for first in sorted(base.adj[y]) if first != bridge[-2])
    if cycle_key(cy) < cycle_key(cx):
        cx, cy, bridge = cy, cx, bridge[::-1]
    return BicyclicBase(INFINITY, len(cx) - 1, len(bridge), len(cy) - 1,
                        _walk_weights(base, cx), _walk_weights(base, cy), _walk_weights(base, bridge),
                        (tuple(cx), tuple(cy), tuple(bridge)))


def classify(g: WeightedGraph) -> tuple[BicyclicBase, bool]:
    """Classify the base of a bicyclic graph; walks refer to ids in ``g``."""
    ext = extract_base(g)
    base = classify_base(ext.graph)
    vmap = ext.vertices
    walks = tuple(tuple(vmap[v] for v in walk) for walk in base.walks)
    return BicyclicBase(base.kind, base.p, base.l, base.q, base.a, base.b, base.c, walks), ext.has_pendants


def make_base(kind: str, p: int, l: int, q: int, a=None, b=None, c=None) -> BicyclicBase:
    """A labelled base built directly from its family and weights (unit by default)."""
    if kind == INFINITY:
        a, b, c = _weights(a, p), _weights(b, q), _weights(c, l - 1)
    else:
        a, b, c = _weights(a, p + 1), _weights(b, l + 1), _weights(c, q + 1)
    return BicyclicBase(kind, p, l, q, a, b, c, _layout_walks(kind, p, l, q))


def _layout_walks(kind, p, l, q):
    if kind == THETA:
        out, nxt = [], 2
        for k in (p, l, q):
            out.append(tuple([0] + list(range(nxt, nxt + k)) + [1]))
            nxt += k
        return tuple(out)
    path = [0] + list(range(p, p + l - 2)) + ([p + l - 2] if l >= 2 else [])
    attach = path[-1]
    nxt = p + l - 1
    cq = [attach] + list(range(nxt, nxt + q - 1)) + [attach]
    return (tuple(list(range(p)) + [0]), tuple(cq), tuple(path))
