"""Exhaustive weighted census of small bicyclic graphs.

Weights range over a grid on the base edges only; tree edges carry one fixed
weight, since removing a pendant with its neighbour strips one positive and
one negative eigenvalue whatever the weights are.
"""
from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Union

from ..engine import congruence_inertia
from ..extremal import predict_small_index
from ..graph import Inertia, WeightedGraph, adjacency_matrix, find_pendant_twins, format_weight, to_fraction
from ..structure import classify
from .canon import Edges, canonical_form
from .enumeration import enumerate_bicyclic
from .predicates import Predicate, parse_predicate

FORMAT_VERSION = 1
MAX_ASSIGNMENTS = 3 ** 10


@dataclass(frozen=True)
class CensusConfig:
    n: int
    grid: tuple[Fraction, ...] = (Fraction(1), Fraction(2))
    filter: str = "all"
    twin_mode: str = "all"  # "all" | "free" (no pendant twins) | "reduced" (twins deleted)
    tree_weight: Fraction = Fraction(1)
    workers: int = 1

    def __post_init__(self):
        grid = tuple(sorted({to_fraction(w) for w in self.grid}))
        if not grid:
            raise ValueError("weight grid is empty")
        if any(w <= 0 for w in grid):
            raise ValueError("grid weights must be positive")
        if self.twin_mode not in ("all", "free", "reduced"):
            raise ValueError(f"unknown twin mode {self.twin_mode!r}")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "tree_weight", to_fraction(self.tree_weight))


@dataclass(frozen=True)
class CensusRecord:
    n: int
    graph: Edges
    weights: tuple[tuple[str, Fraction], ...]
    inertia: Inertia
    kind: str
    p: int
    l: int
    q: int
    pendants: bool
    twins: bool
    theorem: str

    @property
    def rank(self) -> int:
        return self.inertia.rank

    @property
    def base(self) -> str:
        return f"{self.kind}({self.p},{self.l},{self.q})"

    def facts(self) -> dict:
        i = self.inertia
        return {"pos": i.pos, "neg": i.neg, "zero": i.zero, "rank": i.rank, "n": self.n,
                "pendants": self.pendants, "twins": self.twins, "kind": self.kind,
                "base": self.base, "theorem": self.theorem}

    def sort_key(self):
        return (self.n, self.graph, tuple(w for _, w in self.weights))

    def to_line(self) -> str:
        i = self.inertia
        fields = [
            f"n={self.n}",
            "graph=" + ",".join(f"{u}-{v}" for u, v in self.graph),
            f"base={self.base}",
            f"pendants={int(self.pendants)}",
            f"twins={int(self.twins)}",
            "weights=" + ",".join(f"{k}:{format_weight(w)}" for k, w in self.weights),
            f"inertia={i.pos},{i.neg},{i.zero}",
            f"rank={i.rank}",
            "theorem=" + self.theorem.replace(" ", "_"),
        ]
        return " ".join(fields)

    def to_json(self) -> dict:
        i = self.inertia
        return {"n": self.n, "graph": [list(e) for e in self.graph], "base": self.base,
                "kind": self.kind, "p": self.p, "l": self.l, "q": self.q,
                "pendants": self.pendants, "twins": self.twins,
                "weights": {k: format_weight(w) for k, w in self.weights},
                "inertia": [i.pos, i.neg, i.zero], "rank": i.rank, "theorem": self.theorem}


def twin_reduce(g: WeightedGraph) -> WeightedGraph:
    while (pair := find_pendant_twins(g)) is not None:
        g = g.delete([pair[1]])
    return g


def underlying_graphs(n: int, twin_mode: str = "all") -> list[WeightedGraph]:
    graphs = enumerate_bicyclic(n)
    if twin_mode == "free":
        return [g for g in graphs if find_pendant_twins(g) is None]
    if twin_mode == "reduced":
        seen = {}
        for g in graphs:
            h = twin_reduce(g)
            key = (h.n, canonical_form(h))
            if key not in seen:
                seen[key] = WeightedGraph.from_edges(h.n, key[1])
        return [seen[k] for k in sorted(seen)]
    return graphs


def theorem_label(base, pendants: bool) -> str:
    if pendants:
        return "Thm 3.3" if base.kind == "infinity" else "Thm 3.7"
    label = predict_small_index(base).matched_theorem
    return "unmatched" if label == "none" else label


def graph_records(g: WeightedGraph, grid: Sequence[Fraction], tree_weight: Fraction = Fraction(1),
                  predicate: Optional[Predicate] = None) -> list[CensusRecord]:
    """Every grid weighting of one underlying graph's base edges."""
    base, pendants = classify(g)
    twins = find_pendant_twins(g) is not None
    edges_canon = canonical_form(g)
    slots = []
    for name, walk in zip("abc", base.walks):
        for i, (x, y) in enumerate(zip(walk, walk[1:]), start=1):
            slots.append((f"{name}{i}", (min(x, y), max(x, y))))
    if len(grid) ** len(slots) > MAX_ASSIGNMENTS:
        raise ValueError(f"{len(grid)}^{len(slots)} assignments exceed the cap of {MAX_ASSIGNMENTS}")
    slot_edges = {e for _, e in slots}
    tree = [(u, v, tree_weight) for u, v, _ in g.edges if (u, v) not in slot_edges]
    out = []
    for ws in product(grid, repeat=len(slots)):
        wg = WeightedGraph(g.n, tuple(tree) + tuple((e[0], e[1], w) for (_, e), w in zip(slots, ws)))
        inertia = congruence_inertia(adjacency_matrix(wg))
        weighted_base = type(base)(base.kind, base.p, base.l, base.q,
                                   ws[:len(base.a)], ws[len(base.a):len(base.a) + len(base.b)],
                                   ws[len(base.a) + len(base.b):], base.walks)
        rec = CensusRecord(g.n, edges_canon, tuple((name, w) for (name, _), w in zip(slots, ws)), inertia,
                           base.kind, base.p, base.l, base.q, pendants, twins,
                           theorem_label(weighted_base, pendants))
        if predicate is None or predicate(rec.facts()):
            out.append(rec)
    return out


def _job(args):
    return graph_records(*args)


def census(n: int, weight_grid: Iterable[Union[int, Fraction, str]] = (1, 2),
           filter: Union[str, Predicate, None] = None, *, twin_mode: str = "all",
           tree_weight=1, workers: int = 1) -> list[CensusRecord]:
    cfg = CensusConfig(n, tuple(weight_grid), str(filter or "all"), twin_mode, tree_weight, workers)
    pred = filter if isinstance(filter, Predicate) else parse_predicate(cfg.filter)
    jobs = [(g, cfg.grid, cfg.tree_weight, pred) for g in underlying_graphs(n, twin_mode)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunks = list(ex.map(_job, jobs, chunksize=4))
    else:
        chunks = [_job(j) for j in jobs]
    return sorted((r for chunk in chunks for r in chunk), key=CensusRecord.sort_key)


@dataclass
class FamilyStats:
    count: int = 0
    graphs: set = field(default_factory=set)
    lo: list = field(default_factory=lambda: [None, None, None])
    hi: list = field(default_factory=lambda: [None, None, None])

    def add(self, rec: CensusRecord):
        self.count += 1
        self.graphs.add(rec.graph)
        for k, v in enumerate(rec.inertia):
            self.lo[k] = v if self.lo[k] is None else min(self.lo[k], v)
            self.hi[k] = v if self.hi[k] is None else max(self.hi[k], v)


def summarize(records: Iterable[CensusRecord]) -> dict[tuple[str, bool], FamilyStats]:
    out: dict[tuple[str, bool], FamilyStats] = {}
    for r in records:
        out.setdefault((r.base, r.pendants), FamilyStats()).add(r)
    return dict(sorted(out.items()))


def format_report(records: Sequence[CensusRecord], cfg_line: str = "") -> str:
    lines = [f"# census-format {FORMAT_VERSION}"]
    if cfg_line:
        lines.append(f"# {cfg_line}")
    lines += [r.to_line() for r in records]
    lines.append(f"# records={len(records)} graphs={len({(r.n, r.graph) for r in records})}")
    for (base, pend), st in summarize(records).items():
        lines.append(
            f"# family={base} pendants={int(pend)} records={st.count} graphs={len(st.graphs)} "
            f"i+={st.lo[0]}..{st.hi[0]} i-={st.lo[1]}..{st.hi[1]} i0={st.lo[2]}..{st.hi[2]}"
        )
    return "\n".join(lines) + "\n"


def json_report(records: Sequence[CensusRecord], config: Optional[dict] = None) -> str:
    fams = [{"base": b, "pendants": p, "records": st.count, "graphs": len(st.graphs),
             "min": st.lo, "max": st.hi} for (b, p), st in summarize(records).items()]
    doc = {"format_version": FORMAT_VERSION, "config": config or {},
           "records": [r.to_json() for r in records], "summary": fams}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"
