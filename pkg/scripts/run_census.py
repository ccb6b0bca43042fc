"""Run the weighted census over a range of orders and write text + JSON reports."""
from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from bicyclic_inertia.graph import format_weight, to_fraction
from bicyclic_inertia.lab.census import census, format_report, json_report


@dataclass
class Config:
    orders: list[int] = field(default_factory=lambda: [4, 5, 6, 7])
    grid: list[str] = field(default_factory=lambda: ["1", "2"])
    filter: str = "all"
    twin_mode: str = "all"
    workers: int = 1
    out: Path = Path("results/census")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=Config().orders)
    ap.add_argument("--grid", default="1,2")
    ap.add_argument("--filter", default="all")
    ap.add_argument("--twins", choices=["all", "free", "reduced"], default="all")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Config().out)
    a = ap.parse_args()
    cfg = Config(a.orders, a.grid.split(","), a.filter, a.twins, a.workers, a.out)
    cfg.out.mkdir(parents=True, exist_ok=True)

    for n in cfg.orders:
        recs = census(n, cfg.grid, cfg.filter, twin_mode=cfg.twin_mode, workers=cfg.workers)
        meta = {"n": n, "grid": [format_weight(w) for w in sorted({to_fraction(x) for x in cfg.grid})],
                "filter": cfg.filter, "twins": cfg.twin_mode}
        line = " ".join(f"{k}={','.join(v) if isinstance(v, list) else v}" for k, v in meta.items())
        (cfg.out / f"census_n{n}.txt").write_text(format_report(recs, line))
        (cfg.out / f"census_n{n}.json").write_text(json_report(recs, meta))
        print(f"n={n}: {len(recs)} records over {len({r.graph for r in recs})} graphs")
    (cfg.out / "config.json").write_text(json.dumps(asdict(cfg), default=str, indent=1) + "\n")


if __name__ == "__main__":
    main()
