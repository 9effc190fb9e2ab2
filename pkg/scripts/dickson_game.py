"""Play random bad sequences in N^k and print their rank traces; optionally
run the exhaustive grid sweep.

    python3 scripts/dickson_game.py --dim 3 --games 3
    python3 scripts/dickson_game.py --sweep --dim 3 --bound 4 --max-len 6
"""

import argparse
import random
import time
from dataclasses import dataclass

from omegalab import MonomialState, Rejected, extend_bad, render
from omegalab.descent import check_strict_descent
from omegalab.dickson import format_monomial
from omegalab.ordinal import omega_pow


@dataclass
class Config:
    dim: int = 2
    games: int = 3
    top: int = 6
    seed: int = 0


def play(cfg: Config, rng: random.Random) -> MonomialState:
    state = MonomialState(cfg.dim)
    misses = 0
    while misses < 200:
        v = tuple(rng.randint(0, cfg.top) for _ in range(cfg.dim))
        nxt = extend_bad(state, v)
        if isinstance(nxt, Rejected):
            misses += 1
            continue
        state, misses = nxt, 0
    return state


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--dim", type=int, default=Config.dim)
    p.add_argument("--games", type=int, default=Config.games)
    p.add_argument("--top", type=int, default=Config.top)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--max-len", type=int, default=6)
    args = p.parse_args()

    if args.sweep:
        from omegalab.dickson_sweep import sweep
        t = time.perf_counter()
        r = sweep(args.dim, args.bound, args.max_len)
        print(f"k={r.k} coords<={r.bound} len<={r.max_len}: {r.states} antichains "
              f"({r.checked_states} up to symmetry), {r.transitions} extensions, "
              f"{r.failures} failures, {time.perf_counter() - t:.1f}s")
        if r.first_failure:
            print("first failure:", r.first_failure)
        return

    cfg = Config(args.dim, args.games, args.top, args.seed)
    rng = random.Random(cfg.seed)
    for g in range(cfg.games):
        state = play(cfg, rng)
        ok = check_strict_descent(state.ranks, omega_pow(cfg.dim)).valid
        print(f"game {g}: {len(state.sequence)} moves, descending={ok}")
        for v, r in zip(state.sequence, state.ranks):
            print(f"  {format_monomial(v):>12}  {render(r)}")


if __name__ == "__main__":
    main()
