"""Bracket profile of the truncated shift family across depths.

Below depth n the bracket stays at [0, 1]; from depth n on every word of the
top length vanishes, so the best upper root drops to 0 as well.
"""

import argparse
import json
from dataclasses import asdict, dataclass

from spectral_bounds.constructions import truncated_shift_family
from spectral_bounds.estimators import profile


@dataclass
class ShiftGapConfig:
    n: int = 6
    max_depth: int = 7
    budget: int | None = None
    norm: str = "row-sum"


def run(cfg: ShiftGapConfig) -> list[dict]:
    S = truncated_shift_family(cfg.n, cfg.n - 1)
    return [e.to_dict() for e in profile(S, cfg.max_depth, cfg.norm, budget=cfg.budget)]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=ShiftGapConfig.n)
    p.add_argument("--max-depth", type=int, default=ShiftGapConfig.max_depth)
    p.add_argument("--norm", default=ShiftGapConfig.norm)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    cfg = ShiftGapConfig(n=args.n, max_depth=args.max_depth, budget=args.budget, norm=args.norm)
    rows = run(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "profile": rows}, indent=2))
        return
    for r in rows:
        print(f"depth {r['depth_lower']:>2}: [{r['lower']:g}, {r['upper']:g}]")


if __name__ == "__main__":
    main()
