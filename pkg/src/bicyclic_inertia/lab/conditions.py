"""Empirical derivation of weight conditions for a base family.

The engine partitions a weight grid by a target predicate (``"i+=2"`` ...);
candidate conditions are kept when they induce exactly the same partition.
Candidates are comparisons between degree-matched monomials of at most three
weight symbols, then pairwise conjunctions/disjunctions of those, then
equalities of the form ``m1 = m2 + m3``.  Monomial comparisons are evaluated
on integers: scaling every weight by a common denominator multiplies both
sides of a degree-matched comparison by the same positive factor.
"""
from __future__ import annotations

import operator
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import lcm, prod
from typing import Optional, Union

import numpy as np

from ..engine import congruence_inertia
from ..extremal import PRINTED_VARIANTS, Condition
from ..graph import adjacency_matrix, to_fraction
from ..structure import make_base
from .predicates import parse_predicate

Family = tuple[str, int, int, int]
Mono = tuple[str, ...]

_REL = {"=": operator.eq, "!=": operator.ne, ">=": operator.ge, "<=": operator.le, ">": operator.gt, "<": operator.lt}


def _mono_text(m: Mono) -> str:
    return "".join(m)


def _mono_value(s: Mapping[str, Fraction], m: Mono) -> Fraction:
    return prod((s[x] for x in m), start=Fraction(1))


@dataclass(frozen=True)
class Candidate:
    """``lhs op rhs``, ``lhs = rhs + extra`` or a conjunction/disjunction of two."""

    op: str
    lhs: Mono = ()
    rhs: Mono = ()
    extra: Mono = ()
    parts: tuple["Candidate", ...] = ()

    @property
    def text(self) -> str:
        if self.op in ("and", "or"):
            return f" {self.op} ".join(p.text for p in self.parts)
        rhs = _mono_text(self.rhs) + (f"+{_mono_text(self.extra)}" if self.extra else "")
        return f"{_mono_text(self.lhs)}{self.op}{rhs}"

    def __call__(self, s: Mapping[str, Fraction]) -> bool:
        if self.op == "and":
            return all(p(s) for p in self.parts)
        if self.op == "or":
            return any(p(s) for p in self.parts)
        rhs = _mono_value(s, self.rhs) + (_mono_value(s, self.extra) if self.extra else 0)
        return _REL[self.op](_mono_value(s, self.lhs), rhs)


@dataclass
class ConditionReport:
    family: Family
    target: str
    grid: tuple[Fraction, ...]
    assignments: int
    hits: int
    printed: list[tuple[str, str, str]] = field(default_factory=list)  # (label, text, verdict)
    agreeing: list[Candidate] = field(default_factory=list)

    @property
    def family_label(self) -> str:
        k, p, l, q = self.family
        return f"{k}({p},{l},{q})"

    def printed_agreeing(self) -> list[str]:
        return [label for label, _, verdict in self.printed if verdict == "agrees"]

    def lines(self) -> list[str]:
        grid = ",".join(str(w) for w in self.grid)
        out = [f"family {self.family_label}  target {self.target}  grid {{{grid}}}",
               f"  assignments {self.assignments}, target holds on {self.hits}"]
        for label, text, verdict in self.printed:
            out.append(f"  printed {label}: {text} -> {verdict}")
        if self.agreeing:
            out.append(f"  agreeing candidates ({len(self.agreeing)}):")
            out += [f"    {c.text}" for c in self.agreeing]
        else:
            out.append("  no candidate agrees")
        return out


def family_symbols(family: Family) -> list[str]:
    return list(make_base(*family).symbols())


def _assignments(family: Family, grid: Sequence[Fraction]):
    base = make_base(*family)
    la, lb = len(base.a), len(base.b)
    names = list(base.symbols())
    for ws in product(grid, repeat=len(names)):
        yield dict(zip(names, ws)), make_base(*family, ws[:la], ws[la:la + lb], ws[la + lb:])


def target_partition(family: Family, target: str, grid: Sequence[Fraction]):
    """Assignments (as symbol dicts) and whether the engine says ``target`` holds."""
    pred = parse_predicate(target)
    rows, truth = [], []
    for s, base in _assignments(family, grid):
        i = congruence_inertia(adjacency_matrix(base.graph()))
        rows.append(s)
        truth.append(pred({"pos": i.pos, "neg": i.neg, "zero": i.zero, "rank": i.rank, "n": base.order}))
    return rows, np.array(truth, dtype=bool)


def _monomials(names: Sequence[str], degree: int) -> list[Mono]:
    return list(combinations_with_replacement(names, degree))


def _search(names, rows, truth, max_degree: int) -> list[Candidate]:
    den = lcm(*(w.denominator for s in rows for w in s.values()))
    cols = {x: np.array([int(s[x] * den) for s in rows], dtype=object) for x in names}
    # values stay far below 2**63 at desk scale; switch to int64 for speed when safe
    if max(max(c) for c in cols.values()) ** max_degree < 2 ** 62:
        cols = {x: c.astype(np.int64) for x, c in cols.items()}

    values: dict[Mono, np.ndarray] = {}

    def val(m: Mono):
        if m not in values:
            values[m] = prod((cols[x] for x in m[1:]), start=cols[m[0]])
        return values[m]

    singles, found = [], []
    for d in range(1, max_degree + 1):
        monos = _monomials(names, d)
        for m1, m2 in combinations(monos, 2):
            if set(m1) & set(m2):
                continue  # a shared factor cancels; the reduced pair is tried at lower degree
            v1, v2 = val(m1), val(m2)
            for op in ("=", "!=", ">=", "<=", ">", "<"):
                hit = _REL[op](v1, v2)
                cand = Candidate(op, m1, m2)
                if np.array_equal(hit, truth):
                    found.append(cand)
                singles.append((cand, hit))
    if found:
        return found

    eqs = [(c, h) for c, h in singles if c.op == "=" and not np.any(truth & ~h)]
    for (c1, h1), (c2, h2) in combinations(eqs, 2):
        if np.array_equal(h1 & h2, truth):
            found.append(Candidate("and", parts=(c1, c2)))
    nes = [(c, h) for c, h in singles if c.op == "!=" and not np.any(h & ~truth)]
    for (c1, h1), (c2, h2) in combinations(nes, 2):
        if np.array_equal(h1 | h2, truth):
            found.append(Candidate("or", parts=(c1, c2)))
    if found:
        return found

    for d in range(1, max_degree + 1):
        monos = _monomials(names, d)
        if not monos:
            continue
        mat = np.stack([val(m) for m in monos])
        i2, i3 = np.triu_indices(len(monos))
        sums = mat[i2] + mat[i3]
        for k, m1 in enumerate(monos):
            eq = sums == mat[k]
            for op, rows_hit in (("=", eq), ("!=", ~eq)):
                ok = np.flatnonzero((rows_hit == truth).all(axis=1))
                for j in ok:
                    m2, m3 = monos[i2[j]], monos[i3[j]]
                    if m1 in (m2, m3):
                        continue
                    found.append(Candidate(op, m1, m2, m3))
    return found


def derive_condition(family: Family, target: str, grid: Iterable[Union[int, Fraction, str]] = (1, 2, 3),
                     max_degree: int = 3,
                     printed: Optional[Sequence[tuple[str, Condition]]] = None) -> ConditionReport:
    grid = tuple(sorted({to_fraction(w) for w in grid}))
    names = family_symbols(family)
    rows, truth = target_partition(family, target, grid)
    report = ConditionReport(tuple(family), target, grid, len(rows), int(truth.sum()))
    for label, cond in (printed if printed is not None else PRINTED_VARIANTS.get(tuple(family), [])):
        vals = [cond(s) for s in rows]
        if any(v is None for v in vals):
            missing = sorted({x for x in _symbols_in(cond.text) if x not in names})
            verdict = f"undefined ({', '.join(missing) or 'unknown symbol'} not in labelling)"
        else:
            bad = int(np.sum(np.array(vals, dtype=bool) != truth))
            verdict = "agrees" if bad == 0 else f"disagrees on {bad} assignments"
        report.printed.append((label, cond.text, verdict))
    report.agreeing = _search(names, rows, truth, max_degree)
    return report


def _symbols_in(text: str) -> list[str]:
    return re.findall(r"[abc][0-9]+", text)


def validate(candidate: Candidate, family: Family, target: str, grid: Iterable) -> int:
    """Number of assignments of ``grid`` on which ``candidate`` and the engine disagree."""
    grid = tuple(sorted({to_fraction(w) for w in grid}))
    rows, truth = target_partition(family, target, grid)
    return sum(candidate(s) != bool(t) for s, t in zip(rows, truth))
