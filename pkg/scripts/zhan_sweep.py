"""Ratio rho(A o B) / rho(AB) over random non-negative pairs, by density.

The ratio never exceeds 1; the sweep reports how close random pairs get.
"""

import argparse
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from spectral_bounds.core import hadamard_product, spectral_radius


@dataclass
class SweepConfig:
    n: int = 5
    pairs: int = 2000
    densities: list[float] = field(default_factory=lambda: [0.2, 0.5, 1.0])
    seed: int = 0


def run(cfg: SweepConfig) -> dict:
    rng = np.random.default_rng(cfg.seed)
    out = {}
    for d in cfg.densities:
        ratios = []
        for _ in range(cfg.pairs):
            A, B = (rng.random((cfg.n, cfg.n)) * (rng.random((cfg.n, cfg.n)) < d) for _ in "AB")
            denom = spectral_radius(A @ B)
            if denom > 0:
                ratios.append(spectral_radius(hadamard_product(A, B)) / denom)
        r = np.asarray(ratios)
        out[str(d)] = {
            "pairs_with_positive_product": int(r.size),
            "max_ratio": float(r.max()) if r.size else None,
            "median_ratio": float(np.median(r)) if r.size else None,
        }
    return out


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=SweepConfig.n)
    p.add_argument("--pairs", type=int, default=SweepConfig.pairs)
    p.add_argument("--densities", type=float, nargs="+", default=None)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    a = p.parse_args()
    cfg = SweepConfig(a.n, a.pairs, a.densities or SweepConfig().densities, a.seed)
    print(json.dumps({"config": asdict(cfg), "by_density": run(cfg)}, indent=2))


if __name__ == "__main__":
    main()
