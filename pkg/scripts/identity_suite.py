"""Run every exact identity check over a configurable range and time it.

    python3 scripts/identity_suite.py --max-i 4 --max-r 3 --seeds 0 1 2
"""

import argparse
import time
from dataclasses import dataclass, field

from thomschur.schurcalc import identity_grid
from thomschur.thom import check_CF, check_FBr, check_fid, chern_crosscheck


@dataclass
class SuiteConfig:
    max_i: int = 4
    max_r: int = 3
    max_k: int = 2
    grid_size: int = 3
    seeds: list = field(default_factory=lambda: [0])


def parse_args() -> SuiteConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-i", type=int, default=4)
    ap.add_argument("--max-r", type=int, default=3)
    ap.add_argument("--max-k", type=int, default=2)
    ap.add_argument("--grid-size", type=int, default=3)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    return SuiteConfig(**vars(ap.parse_args()))


def reports(cfg: SuiteConfig):
    for i in range(1, cfg.max_i + 1):
        for r in range(1, cfg.max_r + 1):
            yield check_FBr(i, r)
            for p in range(1, i + 2):
                yield check_CF(i, r, p)
    for i in range(1, min(cfg.max_i, 3) + 1):
        for k in range(cfg.max_k + 1):
            yield check_fid(i, k)
    for i, r in [(1, 1), (2, 2), (3, 2), (4, 1)]:
        yield from chern_crosscheck(i, r)
    for seed in cfg.seeds:
        for kind, weight in [("cancel", 5), ("dual", 5), ("vanish", 8), ("factor", 5), ("rect", 0)]:
            yield from identity_grid(kind, cfg.grid_size, weight, seed)


def main():
    cfg = parse_args()
    t0 = time.perf_counter()
    failed = 0
    total = 0
    for rep in reports(cfg):
        total += 1
        if not rep:
            failed += 1
            print(rep.line())
    print(f"{total - failed}/{total} checks passed in {time.perf_counter() - t0:.2f}s")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
