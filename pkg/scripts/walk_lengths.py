"""Lengths of canonical walks to zero, next to the Hardy function.

    python3 scripts/walk_lengths.py --max-exp 3 --steps 1 2 3
"""

import argparse
import itertools
from dataclasses import dataclass, field

from omegalab import canonical_walk, hardy, mul, omega_pow, render
from omegalab.hierarchies import CapExceeded


@dataclass
class Config:
    max_exp: int = 3
    max_coef: int = 2
    steps: list[int] = field(default_factory=lambda: [1, 2, 3])


def rows(cfg: Config):
    for e in range(1, cfg.max_exp + 1):
        for c in range(1, cfg.max_coef + 1):
            a = mul(omega_pow(e), c)
            for n in cfg.steps:
                length = len(canonical_walk(a, itertools.repeat(n)))
                try:
                    h = hardy(a, n)
                except CapExceeded:
                    h = None
                yield render(a), n, length, h


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-exp", type=int, default=Config.max_exp)
    p.add_argument("--max-coef", type=int, default=Config.max_coef)
    p.add_argument("--steps", type=int, nargs="+", default=[1, 2, 3])
    args = p.parse_args()
    cfg = Config(args.max_exp, args.max_coef, args.steps)
    print(f"{'start':>10} {'n':>3} {'walk length':>12} {'H_a(n)':>14}")
    for start, n, length, h in rows(cfg):
        print(f"{start:>10} {n:>3} {length:>12} {('>cap' if h is None else h):>14}")


if __name__ == "__main__":
    main()
