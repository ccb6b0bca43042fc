"""Core value types: weighted graphs, symmetric matrices and inertia triples.

Weights are :class:`fractions.Fraction` values and are always strictly
positive.  Vertices are the dense ids ``0..n-1``.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import NamedTuple, Optional, Union

RationalLike = Union[int, Fraction, str]

__all__ = [
    "GraphFormatError",
    "NotSymmetricError",
    "Inertia",
    "SymmetricMatrix",
    "WeightedGraph",
    "to_fraction",
    "parse_graph",
    "read_graph",
    "format_weight",
    "serialize_graph",
    "adjacency_matrix",
    "split_components",
    "components",
    "find_pendant",
    "find_pendant_twins",
    "disjoint_union",
]


class GraphFormatError(ValueError):
    """Raised for malformed graph files; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class NotSymmetricError(ValueError):
    pass


def to_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {type(value).__name__}")
    return Fraction(value)


class Inertia(NamedTuple):
    """Counts of positive, negative and zero eigenvalues."""

    pos: int
    neg: int
    zero: int

    @property
    def order(self) -> int:
        return self.pos + self.neg + self.zero

    @property
    def rank(self) -> int:
        return self.pos + self.neg

    def __add__(self, other):  # componentwise, not tuple concatenation
        return Inertia(self.pos + other[0], self.neg + other[1], self.zero + other[2])

    def __str__(self) -> str:
        return f"{self.pos} {self.neg} {self.zero}"


@dataclass(frozen=True)
class SymmetricMatrix:
    order: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.order or any(len(r) != self.order for r in self.entries):
            raise ValueError("entries must be order x order")
        for i in range(self.order):
            for j in range(i + 1, self.order):
                if self.entries[i][j] != self.entries[j][i]:
                    raise NotSymmetricError(f"entry ({i},{j}) differs from ({j},{i})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "SymmetricMatrix":
        entries = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        return cls(len(entries), entries)

    @classmethod
    def zeros(cls, order: int) -> "SymmetricMatrix":
        return cls.from_rows([[0] * order for _ in range(order)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[Fraction]]:
        """Mutable copy of the entries."""
        return [list(r) for r in self.entries]

    def scaled(self, c: RationalLike) -> "SymmetricMatrix":
        c = to_fraction(c)
        return SymmetricMatrix(self.order, tuple(tuple(c * x for x in r) for r in self.entries))

    def principal_submatrix(self, keep: Sequence[int]) -> "SymmetricMatrix":
        return SymmetricMatrix(len(keep), tuple(tuple(self.entries[i][j] for j in keep) for i in keep))


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with positive rational edge weights.

    ``edges`` is normalised to a sorted tuple of ``(u, v, w)`` with ``u < v``.
    """

    n: int
    edges: tuple[tuple[int, int, Fraction], ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = {}
        for e in self.edges:
            u, v, w = e
            w = to_fraction(w)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) has a vertex outside 0..{self.n - 1}")
            if w <= 0:
                raise ValueError(f"edge ({u},{v}) has non-positive weight {w}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen[key] = w
        object.__setattr__(self, "edges", tuple((u, v, seen[(u, v)]) for u, v in sorted(seen)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence]) -> "WeightedGraph":
        """Build from ``(u, v)`` (unit weight) or ``(u, v, w)`` items."""
        out = []
        for e in edges:
            if len(e) == 2:
                out.append((e[0], e[1], Fraction(1)))
            else:
                out.append((e[0], e[1], to_fraction(e[2])))
        return cls(n, tuple(out))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[dict[int, Fraction], ...]:
        nbrs: list[dict[int, Fraction]] = [{} for _ in range(self.n)]
        for u, v, w in self.edges:
            nbrs[u][v] = w
            nbrs[v][u] = w
        return tuple(nbrs)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def weight(self, u: int, v: int) -> Optional[Fraction]:
        return self.adj[u].get(v)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, v, _ in self.edges)

    def induced(self, vertices: Sequence[int]) -> "WeightedGraph":
        """Induced subgraph relabelled so that ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v], w) for u, v, w in self.edges if u in index and v in index]
        return WeightedGraph(len(vertices), tuple(edges))

    def delete(self, removed: Iterable[int]) -> "WeightedGraph":
        gone = set(removed)
        return self.induced([v for v in range(self.n) if v not in gone])

    def relabel(self, perm: Sequence[int]) -> "WeightedGraph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return WeightedGraph(self.n, tuple((perm[u], perm[v], w) for u, v, w in self.edges))

    def reweighted(self, weights: Sequence[RationalLike]) -> "WeightedGraph":
        """Same edges (in sorted order) with new weights."""
        if len(weights) != self.m:
            raise ValueError("one weight per edge required")
        return WeightedGraph(self.n, tuple((u, v, to_fraction(w)) for (u, v, _), w in zip(self.edges, weights)))

    def add_vertices(self, k: int, edges: Iterable[Sequence] = ()) -> "WeightedGraph":
        extra = WeightedGraph.from_edges(self.n + k, edges)
        return WeightedGraph(self.n + k, self.edges + extra.edges)

    def __str__(self) -> str:
        return serialize_graph(self).strip()


def disjoint_union(*graphs: WeightedGraph) -> WeightedGraph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset, w) for u, v, w in g.edges)
        offset += g.n
    return WeightedGraph(offset, tuple(edges))


_INT = re.compile(r"[1-9][0-9]*")
_RAT = re.compile(r"([1-9][0-9]*)/([1-9][0-9]*)")
_IDX = re.compile(r"0|[1-9][0-9]*")


def _parse_weight(tok: str, lineno: int) -> Fraction:
    if _INT.fullmatch(tok):
        return Fraction(int(tok))
    m = _RAT.fullmatch(tok)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if q == 1 or gcd(p, q) != 1:
            raise GraphFormatError(lineno, f"weight {tok!r} is not in lowest terms")
        return Fraction(p, q)
    if tok.startswith("-") or tok in {"0", "0/1"} or re.fullmatch(r"0+(/[0-9]+)?", tok):
        raise GraphFormatError(lineno, f"weight {tok!r} is not positive")
    raise GraphFormatError(lineno, f"malformed weight {tok!r}")


def parse_graph(text: str) -> WeightedGraph:
    """Parse the ``n m`` / ``u v w`` edge-list format."""
    header = None
    edges: dict[tuple[int, int], Fraction] = {}
    expected = 0
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if header is None:
            if len(toks) != 2 or not all(_IDX.fullmatch(t) for t in toks):
                raise GraphFormatError(lineno, "expected header 'n m'")
            header = (int(toks[0]), int(toks[1]))
            expected = header[1]
            continue
        n = header[0]
        if len(edges) == expected:
            raise GraphFormatError(lineno, f"more than the declared {expected} edges")
        if len(toks) != 3 or not (_IDX.fullmatch(toks[0]) and _IDX.fullmatch(toks[1])):
            raise GraphFormatError(lineno, "expected edge line 'u v w'")
        u, v = int(toks[0]), int(toks[1])
        if u >= n or v >= n:
            raise GraphFormatError(lineno, f"vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(lineno, "self-loop")
        w = _parse_weight(toks[2], lineno)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise GraphFormatError(lineno, f"duplicate edge {key[0]} {key[1]}")
        edges[key] = w
    if header is None:
        raise GraphFormatError(lineno + 1, "missing header 'n m'")
    if len(edges) != expected:
        raise GraphFormatError(lineno + 1, f"expected {expected} edges, found {len(edges)}")
    return WeightedGraph(header[0], tuple((u, v, w) for (u, v), w in edges.items()))


def read_graph(path) -> WeightedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_weight(w: Fraction) -> str:
    return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


def serialize_graph(g: WeightedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v} {format_weight(w)}" for u, v, w in g.edges]
    return "\n".join(lines) + "\n"


def adjacency_matrix(g: WeightedGraph) -> SymmetricMatrix:
    rows = [[Fraction(0)] * g.n for _ in range(g.n)]
    for u, v, w in g.edges:
        rows[u][v] = rows[v][u] = w
    return SymmetricMatrix(g.n, tuple(tuple(r) for r in rows))


def split_components(g: WeightedGraph) -> list[tuple[WeightedGraph, tuple[int, ...]]]:
    """Connected components with their vertex maps (component id -> id in ``g``).

    Components are ordered by smallest vertex; vertices keep their relative order.
    """
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comp.sort()
        out.append((g.induced(comp), tuple(comp)))
    return out


def components(g: WeightedGraph) -> list[WeightedGraph]:
    return [c for c, _ in split_components(g)]


def find_pendant(g: WeightedGraph) -> Optional[tuple[int, int]]:
    for v in range(g.n):
        if g.degree(v) == 1:
            (u,) = g.adj[v]
            return v, u
    return None


def find_pendant_twins(g: WeightedGraph) -> Optional[tuple[int, int]]:
    """Smallest pair ``(u, v)`` of degree-1 vertices with a common neighbour."""
    first_leaf: dict[int, int] = {}
    best = None
    for v in range(g.n):
        if g.degree(v) != 1:
            continue
        (c,) = g.adj[v]
        if c in first_leaf:
            pair = (first_leaf[c], v)
            if best is None or pair < best:
                best = pair
        else:
            first_leaf[c] = v
    return best
