"""Run the strong construction over many seeds and tabulate verdicts, D sizes and lift lengths."""
from __future__ import annotations

import argparse
import statistics
import time
from collections import Counter
from dataclasses import dataclass

from heawood.pipeline import PipelineConfig, run_pipeline


@dataclass
class SweepConfig:
    k: int = 1
    s: int = 4
    b: int = 1
    p: int = 2
    n: int | None = None
    seeds: int = 50
    best_effort: bool = False


def main(cfg: SweepConfig) -> int:
    failures = Counter()
    sizes, ells = [], []
    t0 = time.perf_counter()
    for seed in range(cfg.seeds):
        base = PipelineConfig(k=cfg.k, s=cfg.s, n=cfg.s + 1, b=cfg.b, p=cfg.p)
        n = cfg.n if cfg.n is not None else base.n0
        result = run_pipeline(PipelineConfig(k=cfg.k, s=cfg.s, n=n, b=cfg.b, p=cfg.p, seed=seed, best_effort=cfg.best_effort))
        for name, ok in result.verdicts.items():
            failures[name] += not ok
        if "D" in result.details:
            sizes.append(result.details["D"]["top_faces"])
            ells.extend(sum(abs(w) for _, w in lift["weights"]) for lift in result.details["lifts"])
    elapsed = time.perf_counter() - t0
    print(f"config {cfg}")
    print(f"{cfg.seeds} seeds in {elapsed:.1f}s")
    for name, bad in sorted(failures.items()):
        print(f"  {name:18s} {cfg.seeds - bad}/{cfg.seeds}")
    if sizes:
        print(f"  top faces of D: median {statistics.median(sizes)}, max {max(sizes)}")
        print(f"  ladder lengths: {sorted(Counter(ells).items())}")
    return int(any(failures.values()))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for f in ("k", "s", "b", "p", "n", "seeds"):
        ap.add_argument(f"--{f}", type=int, default=getattr(SweepConfig, f))
    ap.add_argument("--best-effort", action="store_true")
    raise SystemExit(main(SweepConfig(**vars(ap.parse_args()))))
