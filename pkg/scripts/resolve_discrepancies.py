"""Derive the weight conditions for the families whose printed conditions
conflict, and re-check every derived condition on a hold-out grid."""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from bicyclic_inertia.lab.conditions import derive_condition, validate


@dataclass
class Config:
    grid: tuple[int, ...] = (1, 2, 3)
    holdout: tuple[int, ...] = (1, 2, 5)
    jobs: list[tuple[tuple[str, int, int, int], str]] = field(default_factory=lambda: [
        (("theta", 1, 0, 2), "i+=2"),
        (("theta", 1, 0, 2), "i-=2"),
        (("theta", 1, 0, 2), "rank=4"),
        (("theta", 2, 0, 2), "i+=2"),
        (("theta", 2, 0, 2), "i-=2"),
        (("theta", 2, 0, 2), "rank=4"),
        (("theta", 1, 1, 2), "i-=2"),
    ])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", default="1,2,3")
    ap.add_argument("--holdout", default="1,2,5")
    a = ap.parse_args()
    cfg = Config(tuple(int(x) for x in a.grid.split(",")), tuple(int(x) for x in a.holdout.split(",")))
    for family, target in cfg.jobs:
        rep = derive_condition(family, target, cfg.grid)
        print("\n".join(rep.lines()))
        for cand in rep.agreeing:
            bad = validate(cand, family, target, cfg.holdout)
            print(f"  hold-out {cfg.holdout}: {cand.text} -> {bad} mismatches")
        print()


if __name__ == "__main__":
    main()
