"""Distribution of the affine dimension of the v-image against its upper bound b*C(s,k)."""
from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass
from math import comb

from heawood import bounds
from heawood.routing import dim_v_image, random_oracle


@dataclass
class DimConfig:
    k: int = 1
    s: int = 4
    b: int = 1
    p: int = 2
    oracles: int = 200


def main(cfg: DimConfig) -> None:
    n = bounds.n0_strong(cfg.k, cfg.b, cfg.s)
    dims = Counter(dim_v_image(random_oracle(cfg.s, cfg.k, n, cfg.b, cfg.p, seed)) for seed in range(cfg.oracles))
    print(f"bound {cfg.b * comb(cfg.s, cfg.k)}; observed {sorted(dims.items())}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for f in ("k", "s", "b", "p", "oracles"):
        ap.add_argument(f"--{f}", type=int, default=getattr(DimConfig, f))
    main(DimConfig(**vars(ap.parse_args())))
