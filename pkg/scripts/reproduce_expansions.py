"""Print the F^(i)_r expansions and the solved restriction equations.

    python3 scripts/reproduce_expansions.py
    python3 scripts/reproduce_expansions.py --max-i 5 --max-r 3 --json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from thomschur.linalg import Underdetermined
from thomschur.thom import F_ir, NotInCatalog, solve_thom


@dataclass
class RunConfig:
    max_i: int = 4
    max_r: int = 2
    solve: bool = True
    json: bool = False


def parse_args() -> RunConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-i", type=int, default=RunConfig.max_i)
    ap.add_argument("--max-r", type=int, default=RunConfig.max_r)
    ap.add_argument("--no-solve", dest="solve", action="store_false")
    ap.add_argument("--json", action="store_true")
    return RunConfig(**vars(ap.parse_args()))


def run(cfg: RunConfig) -> list:
    rows = []
    for i in range(1, cfg.max_i + 1):
        for r in range(1, cfg.max_r + 1):
            t0 = time.perf_counter()
            row = {"i": i, "r": r, "F": F_ir(i, r).render()}
            if cfg.solve:
                try:
                    res = solve_thom(i, r)
                    row["thom"] = res.expansion.render(r)
                    row["rank"] = res.rank
                except NotInCatalog:
                    row["thom"] = None
                except Underdetermined as exc:
                    row["thom"] = f"underdetermined ({exc})"
            row["seconds"] = round(time.perf_counter() - t0, 4)
            rows.append(row)
    return rows


def main():
    cfg = parse_args()
    rows = run(cfg)
    if cfg.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    for row in rows:
        print(f"F^({row['i']})_{row['r']} = {row['F']}")
        if row.get("thom"):
            print(f"  A{row['i']}({row['r']}): {row['thom']}  (rank {row.get('rank')})")
        print(f"  [{row['seconds']}s]")


if __name__ == "__main__":
    main()
