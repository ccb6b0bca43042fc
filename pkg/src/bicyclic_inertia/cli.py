"""Command-line front end.

Exit status: 0 success, 2 bad input (parse errors, non-bicyclic graph,
unsupported parameters), 3 disagreement (methods differ, a transform breaks
monotonicity, a derived condition fails its hold-out grid).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .closed_form import structural_inertia
from .engine import congruence_inertia, descartes_inertia
from .extremal import (
    build_gstar,
    build_gstarstar,
    check_small_index,
    classify_rank,
    infinity_pendant_bound,
    theta_pendant_bound,
)
from .graph import GraphFormatError, adjacency_matrix, format_weight, read_graph, to_fraction
from .lab.census import census, format_report, json_report
from .lab.conditions import derive_condition, validate
from .lab.predicates import PredicateError
from .lab.transforms import path_to_star, star_merge, star_shift
from .structure import NotBicyclicError, classify

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE = 0, 2, 3

METHODS = {
    "engine": lambda g: congruence_inertia(adjacency_matrix(g)),
    "closed": structural_inertia,
    "oracle": lambda g: descartes_inertia(adjacency_matrix(g)),
}


class InputError(Exception):
    pass


def _grid(text: str) -> list[Fraction]:
    try:
        vals = [to_fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad grid {text!r}: {exc}") from None
    if not vals:
        raise InputError("empty weight grid")
    if any(v <= 0 for v in vals):
        raise InputError("grid weights must be positive")
    return vals


def _load(path):
    try:
        return read_graph(path)
    except OSError as exc:
        raise InputError(str(exc)) from None
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _fmt_seq(seq) -> str:
    return ",".join(format_weight(w) for w in seq) or "-"


def cmd_inertia(args) -> int:
    g = _load(args.file)
    names = list(METHODS) if args.method == "all" else [args.method]
    results = {m: METHODS[m](g) for m in names}
    first = results[names[0]]
    agree = all(r == first for r in results.values())
    if args.json:
        print(json.dumps({m: list(r) for m, r in results.items()} | {"agree": agree}, sort_keys=True))
    elif agree:
        print(first)
        print(f"rank {first.rank}")
        if len(names) > 1:
            print("agreement: " + "=".join(names))
    else:
        print("DISAGREEMENT")
        for m, r in results.items():
            print(f"  {m}: {r}")
    return EXIT_OK if agree else EXIT_DISAGREE


def _prediction_line(title, res) -> str:
    pred = " ".join(f"{k}={v}" for k, v in res.predicted.items())
    pred += "".join(f" {k}>={v}" for k, v in res.at_least.items())
    if res.deferred:
        pred = "deferred to engine"
    e = res.engine
    verdict = "agree" if res.agrees else "MISMATCH"
    return (f"{title}: {res.matched_theorem} | predicted {pred or '-'} | "
            f"engine i+={e.pos} i-={e.neg} rank {e.rank} [{verdict}]")


def cmd_classify(args) -> int:
    g = _load(args.file)
    try:
        base, pendants = classify(g)
    except NotBicyclicError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    whole = congruence_inertia(adjacency_matrix(g))
    print(f"base {base.label} pendants={'yes' if pendants else 'no'}")
    print(f"a = {_fmt_seq(base.a)}")
    print(f"b = {_fmt_seq(base.b)}")
    print(f"c = {_fmt_seq(base.c)}")
    print(f"engine inertia {whole} rank {whole.rank}")
    status = EXIT_OK
    if pendants:
        if base.kind == "infinity":
            rep = infinity_pendant_bound(base.p, base.q)
            general = "Thm 3.3: i+>=3 i->=3"
        else:
            rep = theta_pendant_bound(base.p, base.l, base.q)
            general = "Thm 3.7: i+>=2 i->=2"
        ok = rep.satisfied_by(whole)
        print(f"bound {rep.theorem_label}: i+,i- >= {rep.effective_bound} "
              f"(stated {rep.stated_bound}) [{'holds' if ok else 'VIOLATED'}]")
        print(general)
        return status
    small, rank = check_small_index(base), classify_rank(base)
    print(_prediction_line("index", small))
    print(_prediction_line("rank", rank))
    for text, val in dict(small.conditions + rank.conditions).items():
        print(f"condition {text}: {'undefined' if val is None else str(val).lower()}")
    if not (small.agrees and rank.agrees):
        status = EXIT_DISAGREE
    return status


def cmd_bounds(args) -> int:
    if args.kind == "infinity":
        if len(args.params) != 2:
            raise InputError("infinity takes P Q")
        p, q = args.params
        rep = infinity_pendant_bound(p, q)
    else:
        if len(args.params) != 3:
            raise InputError("theta takes P L Q")
        p, l, q = args.params
        rep = theta_pendant_bound(p, l, q)
    print(f"{rep.theorem_label} {rep.kind} p={rep.p} l={rep.l} q={rep.q}: "
          f"stated {rep.stated_bound}, effective {rep.effective_bound} on {rep.bound_kind}")
    if rep.caveat:
        print(f"caveat: {rep.caveat}")
    if args.n is not None:
        if args.kind == "infinity":
            g, name = build_gstar(p, q, args.n), "G*"
        else:
            g, name = build_gstarstar(p, l, q, args.n), "G**"
        i = congruence_inertia(adjacency_matrix(g))
        verdict = "attained" if min(i.pos, i.neg) == rep.effective_bound else (
            "holds" if rep.satisfied_by(i) else "VIOLATED")
        print(f"{name} n={args.n}: inertia {i} [{verdict}]")
        if verdict == "VIOLATED":
            return EXIT_DISAGREE
    return EXIT_OK


def cmd_census(args) -> int:
    grid = _grid(args.grid)
    try:
        recs = census(args.n, grid, args.filter, twin_mode=args.twins,
                      tree_weight=to_fraction(args.tree_weight), workers=args.workers)
    except PredicateError as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    cfg = {"n": args.n, "grid": [format_weight(w) for w in sorted(set(grid))], "filter": args.filter or "all",
           "twins": args.twins, "tree_weight": args.tree_weight}
    cfg_line = " ".join(f"{k}={','.join(v) if isinstance(v, list) else v}" for k, v in cfg.items())
    if args.json == "-":
        sys.stdout.write(json_report(recs, cfg))
        return EXIT_OK
    sys.stdout.write(format_report(recs, cfg_line))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(json_report(recs, cfg))
    return EXIT_OK


def _report_pair(label, before, after) -> int:
    i1 = congruence_inertia(adjacency_matrix(before))
    i2 = congruence_inertia(adjacency_matrix(after))
    ok = i1.pos >= i2.pos and i1.neg >= i2.neg
    print(f"{label}: before {i1} (order {before.n}), after {i2} (order {after.n}) "
          f"[{'monotone' if ok else 'VIOLATED'}]")
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_transform(args) -> int:
    g = _load(args.file)
    try:
        if args.op == "star-shift":
            pair = star_shift(g, args.u, _grid(args.weights))
        elif args.op == "star-merge":
            pair = star_merge(g, args.u, args.v, args.l, args.t)
        else:
            other = _load(args.other) if args.other else g
            pair = path_to_star(g, other, args.u, args.v, _grid(args.weights))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return _report_pair(args.op, *pair)


def cmd_derive(args) -> int:
    if len(args.params) != 3:
        raise InputError("family needs P L Q")
    family = (args.kind, *args.params)
    try:
        rep = derive_condition(family, args.target, _grid(args.grid))
    except (ValueError, PredicateError) as exc:
        raise InputError(str(exc)) from None
    print("\n".join(rep.lines()))
    status = EXIT_OK
    if args.holdout:
        hold = _grid(args.holdout)
        for cand in rep.agreeing:
            bad = validate(cand, family, args.target, hold)
            print(f"  hold-out {{{args.holdout}}} {cand.text}: {bad} mismatches")
            if bad:
                status = EXIT_DISAGREE
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bicyclic-inertia", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inertia", help="inertia of a weighted graph file")
    p.add_argument("file")
    p.add_argument("--method", choices=[*METHODS, "all"], default="engine")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_inertia)

    p = sub.add_parser("classify", help="classify a bicyclic graph and check the known weight conditions")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bounds", help="pendant lower bounds, optionally checked on G*/G**")
    p.add_argument("kind", choices=["infinity", "theta"])
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("census", help="exhaustive weighted census of bicyclic graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", default="1,2")
    p.add_argument("--filter", default=None)
    p.add_argument("--twins", choices=["all", "free", "reduced"], default="all")
    p.add_argument("--tree-weight", default="1")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", metavar="PATH", help="structured report file ('-' for stdout only)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("transform", help="check an index-monotone transform on a graph")
    p.add_argument("op", choices=["star-shift", "star-merge", "path-to-star"])
    p.add_argument("file")
    p.add_argument("--other", help="second graph for path-to-star (default: same file)")
    p.add_argument("--u", type=int, default=0)
    p.add_argument("--v", type=int, default=1)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--weights", default="1,1", help="star or path weights")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("derive-condition", help="derive a weight condition for a base family")
    p.add_argument("kind", choices=["infinity", "theta"])
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--target", required=True)
    p.add_argument("--grid", default="1,2,3")
    p.add_argument("--holdout", default=None)
    p.set_defaults(func=cmd_derive)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
