"""Shared generators for randomized and property-based tests."""
from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from bicyclic_inertia.graph import WeightedGraph
from bicyclic_inertia.structure import infinity_graph, theta_graph

WEIGHTS = (Fraction(1), Fraction(1, 2), Fraction(2), Fraction(3))

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
positive_weights = st.fractions(min_value=Fraction(1, 6), max_value=6, max_denominator=6)


@st.composite
def symmetric_rows(draw, max_order=7, elements=rationals, sparse=True):
    n = draw(st.integers(1, max_order))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            # many zeros so the all-zero-diagonal branch of elimination gets exercised
            if sparse and draw(st.booleans()):
                continue
            rows[i][j] = rows[j][i] = draw(elements)
    return rows


@st.composite
def weighted_graphs(draw, max_n=8, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return WeightedGraph(n, tuple((u, v, draw(positive_weights)) for u, v in chosen))


def random_tree_edges(rng: random.Random, nodes: list[int]):
    out = []
    for i in range(1, len(nodes)):
        out.append((nodes[rng.randrange(i)], nodes[i]))
    return out


def random_connected_graph(rng: random.Random, n: int, weights=WEIGHTS, extra_p=0.3) -> WeightedGraph:
    nodes = list(range(n))
    rng.shuffle(nodes)
    edges = {tuple(sorted(e)) for e in random_tree_edges(rng, nodes)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_p:
                edges.add((u, v))
    return WeightedGraph(n, tuple((u, v, rng.choice(weights)) for u, v in sorted(edges)))


def random_base(rng: random.Random, weights=WEIGHTS, max_order=8) -> WeightedGraph:
    while True:
        if rng.random() < 0.5:
            p, q, l = rng.randint(3, 5), rng.randint(3, 5), rng.randint(1, 3)
            if p + q + l - 2 > max_order:
                continue
            g = infinity_graph(p, l, q)
        else:
            p, l, q = sorted(rng.randint(0, 3) for _ in range(3))
            if (p, l, q).count(0) > 1 or p + l + q + 2 > max_order:
                continue
            g = theta_graph(p, l, q)
        return g.reweighted([rng.choice(weights) for _ in g.edges])


def random_bicyclic_with_pendants(rng: random.Random, extra=(1, 6), weights=WEIGHTS) -> WeightedGraph:
    g = random_base(rng, weights)
    k = rng.randint(*extra)
    edges = []
    for i in range(k):
        new = g.n + i
        edges.append((rng.randrange(new), new, rng.choice(weights)))
    g = g.add_vertices(k, edges)
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


# acceptance lines, printed once at the end of the session
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
