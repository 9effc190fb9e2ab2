"""Check the uniformization properties over a random corpus of Delta0
matrices and print one JSON report per line.

    python3 scripts/uniformization_corpus.py --count 50 --X 10
"""

import argparse
import json
from dataclasses import dataclass

from omegalab.formula import check_uniformization, sufficient_bound
from omegalab.generators import delta0_corpus


@dataclass
class Config:
    count: int = 50
    X: int = 10
    depth: int = 3
    seed: int = 0


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=Config.count)
    p.add_argument("--X", type=int, default=Config.X)
    p.add_argument("--depth", type=int, default=Config.depth)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--summary", action="store_true", help="print only the totals")
    args = p.parse_args()
    cfg = Config(args.count, args.X, args.depth, args.seed)

    ok = 0
    for theta in delta0_corpus(cfg.count, cfg.seed, cfg.depth):
        r = check_uniformization(theta, cfg.X, sufficient_bound(theta, cfg.X))
        ok += r.ok
        if not args.summary:
            print(json.dumps(r.to_json()))
    print(f"# {ok}/{cfg.count} reports with all three items true")


if __name__ == "__main__":
    main()
