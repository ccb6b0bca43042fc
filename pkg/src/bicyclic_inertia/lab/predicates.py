"""Tiny filter language for census records and condition targets.

A predicate is a comma-separated conjunction of ``key op value`` clauses,
e.g. ``"i+=1"``, ``"rank<=4, kind=theta"``, ``"pendants=yes,twins=no"``.
"""
from __future__ import annotations

import operator
import re
from dataclasses import dataclass

_OPS = {
    "=": operator.eq,
    "==": operator.eq,
    "!=": operator.ne,
    ">=": operator.ge,
    "<=": operator.le,
    ">": operator.gt,
    "<": operator.lt,
}
_CLAUSE = re.compile(r"\s*([A-Za-z0-9+\-_]+?)\s*(==|!=|>=|<=|=|>|<)\s*([^,]+?)\s*$")

INT_KEYS = {"i+": "pos", "pos": "pos", "i-": "neg", "neg": "neg", "i0": "zero", "zero": "zero", "rank": "rank", "n": "n"}
BOOL_KEYS = {"pendants", "twins"}
STR_KEYS = {"kind", "base", "theorem"}
_TRUE = {"yes", "true", "1", "y"}
_FALSE = {"no", "false", "0", "n"}


class PredicateError(ValueError):
    pass


@dataclass(frozen=True)
class Clause:
    key: str
    op: str
    value: object

    def __call__(self, facts: dict) -> bool:
        return _OPS[self.op](facts[self.key], self.value)

    def __str__(self) -> str:
        v = self.value
        if isinstance(v, bool):
            v = "yes" if v else "no"
        return f"{self.key}{self.op}{v}"


@dataclass(frozen=True)
class Predicate:
    clauses: tuple[Clause, ...] = ()

    def __call__(self, facts: dict) -> bool:
        return all(c(facts) for c in self.clauses)

    def __str__(self) -> str:
        return ",".join(map(str, self.clauses)) or "all"


def parse_predicate(text: str | None) -> Predicate:
    if text is None or not text.strip() or text.strip() == "all":
        return Predicate()
    clauses = []
    for part in text.split(","):
        m = _CLAUSE.match(part)
        if not m:
            raise PredicateError(f"cannot parse clause {part!r}")
        key, op, raw = m.groups()
        if key in INT_KEYS:
            try:
                clauses.append(Clause(INT_KEYS[key], op, int(raw)))
            except ValueError:
                raise PredicateError(f"{key} needs an integer, got {raw!r}") from None
        elif key in BOOL_KEYS:
            low = raw.lower()
            if op not in ("=", "==", "!=") or low not in _TRUE | _FALSE:
                raise PredicateError(f"{key} takes =yes/=no")
            clauses.append(Clause(key, op, low in _TRUE))
        elif key in STR_KEYS:
            if op not in ("=", "==", "!="):
                raise PredicateError(f"{key} takes = or !=")
            clauses.append(Clause(key, op, raw))
        else:
            raise PredicateError(f"unknown key {key!r}")
    return Predicate(tuple(clauses))
