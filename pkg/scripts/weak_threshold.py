"""How far below the pigeonhole guarantee do single-vertex collisions still appear?

For each |U| the script counts the fraction of random oracles for which m
vertices with equal v-value exist.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from heawood import bounds
from heawood.errors import NotFound
from heawood.routing import pigeonhole_points, random_oracle


@dataclass
class WeakConfig:
    k: int = 1
    s: int = 4
    b: int = 1
    p: int = 2
    trials: int = 20
    steps: int = 8


def main(cfg: WeakConfig) -> None:
    guarantee = bounds.weak_unused_threshold(cfg.k, cfg.b, cfg.s, cfg.p)
    print(f"guaranteed |U| = {guarantee}")
    sizes = sorted({max(1, guarantee >> shift) for shift in range(cfg.steps)})
    for size in sizes:
        n = cfg.s + size
        hits = 0
        for seed in range(cfg.trials):
            try:
                pigeonhole_points(random_oracle(cfg.s, cfg.k, n, cfg.b, cfg.p, seed))
                hits += 1
            except NotFound:
                pass
        print(f"|U|={size:7d}  success {hits}/{cfg.trials}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for f in ("k", "s", "b", "p", "trials", "steps"):
        ap.add_argument(f"--{f}", type=int, default=getattr(WeakConfig, f))
    main(WeakConfig(**vars(ap.parse_args())))
