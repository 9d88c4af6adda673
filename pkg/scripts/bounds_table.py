"""Print the threshold and bound values side by side for small k, b."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from heawood import bounds


@dataclass
class TableConfig:
    k_max: int = 4
    b_max: int = 3
    q_values: tuple[int, ...] = (2, 3, 4, 5)


def main(cfg: TableConfig) -> None:
    print("k\tb\ts\tn0_strong\tthm2\t" + "\t".join(f"thm3(q={q})" for q in cfg.q_values))
    for k in range(1, cfg.k_max + 1):
        for b in range(0, cfg.b_max + 1):
            s = 2 * k + 2  # q = 2 instance of s = qk + 2q - 2
            row = [k, b, s, bounds.n0_strong(k, b, s), bounds.thm2_bound(k, b)]
            row += [bounds.thm3_bound(q, k, b) for q in cfg.q_values]
            print("\t".join(map(str, row)))
    print()
    print("weak versus strong threshold, k=1, s=4")
    for b in range(0, cfg.b_max + 1):
        for p in (2, 3, 5):
            print(f"b={b} p={p}: weak {bounds.n0_weak(1, b, 4, p)}  strong {bounds.n0_strong(1, b, 4)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=4)
    ap.add_argument("--b-max", type=int, default=3)
    a = ap.parse_args()
    main(TableConfig(k_max=a.k_max, b_max=a.b_max))
