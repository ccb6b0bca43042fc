"""Empirical minimum of min(i+, i-) per base family over all weighted bicyclic
graphs with pendants, compared with the closed-form lower bounds."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from bicyclic_inertia.extremal import infinity_pendant_bound, theta_pendant_bound
from bicyclic_inertia.lab.census import census


@dataclass
class Config:
    max_n: int = 8
    grid: tuple[int, ...] = (1, 2)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--grid", default="1,2")
    a = ap.parse_args()
    cfg = Config(a.max_n, tuple(int(x) for x in a.grid.split(",")))

    minima: dict[tuple, tuple[int, str]] = {}
    for n in range(5, cfg.max_n + 1):
        for r in census(n, cfg.grid, "pendants=yes"):
            key = (r.kind, r.p, r.l, r.q)
            m = min(r.inertia.pos, r.inertia.neg)
            if key not in minima or m < minima[key][0]:
                minima[key] = (m, r.to_line())
    print(f"{'family':<18} {'observed':>8} {'bound':>6} {'label':<12} verdict")
    for (kind, p, l, q), (m, witness) in sorted(minima.items()):
        b = infinity_pendant_bound(p, q) if kind == "infinity" else theta_pendant_bound(p, l, q)
        verdict = "ok" if m >= b.effective_bound else "BELOW BOUND"
        print(f"{kind}({p},{l},{q})".ljust(18), f"{m:>8} {b.effective_bound:>6} {b.theorem_label:<12} {verdict}")
        if m < b.effective_bound:
            print(f"    witness: {witness}")


if __name__ == "__main__":
    main()
