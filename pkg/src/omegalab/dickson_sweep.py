"""Exhaustive rank-descent sweep over bad sequences in a bounded grid.

The sweep visits every antichain of at most ``max_len - 1`` points of
``{0..bound}^k`` (these are exactly the minimal bases reachable by bad
sequences of length ``< max_len``) and every accepted one-step extension of
it, checking that the essential-fibre counts drop lexicographically from the
top dimension, which is exactly the ordinal comparison of the ranks.

Counting is done on a box ``{0..bound+1}^k`` where the value ``bound + 1``
stands for "unbounded": a fibre along the coordinates set to ``bound + 1``
lies in the residual iff that single box point does. Antichains equivalent
under a coordinate permutation share their ranks, so only the
lexicographically least member of each orbit is checked; traversal still
visits all of them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numba
import numpy as np

from .dickson import Monomial

__all__ = ["SweepReport", "Grid", "sweep", "grid_counts"]


@dataclass(frozen=True)
class Grid:
    k: int
    bound: int

    @property
    def side(self) -> int:
        return self.bound + 2

    def box_points(self) -> np.ndarray:
        # point index = sum p[i] * side**i
        return np.array(list(itertools.product(range(self.side), repeat=self.k)),
                        dtype=np.int64)[:, ::-1].copy()

    def index(self, p) -> int:
        return int(sum(int(x) * self.side ** i for i, x in enumerate(p)))

    def tables(self):
        box = self.box_points()
        order = np.array([self.index(p) for p in box])
        coords = np.empty_like(box)
        coords[order] = box
        grid = np.array([self.index(p) for p in itertools.product(range(self.bound + 1), repeat=self.k)],
                        dtype=np.int64)
        # cap[p, j]: index of p with coordinate j moved to the cap value
        cap = np.empty((len(coords), self.k), dtype=np.int64)
        for idx, p in enumerate(coords):
            for j in range(self.k):
                q = p.copy()
                q[j] = self.side - 1
                cap[idx, j] = self.index(q)
        up = np.zeros((len(grid), len(coords)), dtype=np.bool_)
        for gi, g in enumerate(grid):
            up[gi] = np.all(coords >= coords[g], axis=1)
        perms = np.array(list(itertools.permutations(range(self.k))), dtype=np.int64)
        # perm_map[s, g]: grid position of grid point g with coordinates permuted by s
        gpos = {int(g): i for i, g in enumerate(grid)}
        perm_map = np.empty((len(perms), len(grid)), dtype=np.int64)
        for s, perm in enumerate(perms):
            for gi, g in enumerate(grid):
                perm_map[s, gi] = gpos[self.index(coords[g][perm])]
        return coords, grid, cap, up, perm_map


@dataclass(frozen=True)
class SweepReport:
    k: int
    bound: int
    max_len: int
    states: int
    checked_states: int
    transitions: int
    failures: int
    first_failure: tuple[tuple[Monomial, ...], Monomial] | None


@numba.njit(cache=True)
def _counts(live, coords, cap, k, top):
    out = np.zeros(k + 1, dtype=np.int64)
    for p in range(live.shape[0]):
        if not live[p]:
            continue
        d = 0
        essential = True
        for j in range(k):
            if coords[p, j] == top:
                d += 1
            elif live[cap[p, j]]:
                essential = False
                break
        if essential:
            out[d] += 1
    return out


@numba.njit(cache=True)
def _less(a, b):
    for d in range(a.shape[0] - 1, -1, -1):
        if a[d] != b[d]:
            return a[d] < b[d]
    return False


@numba.njit(cache=True)
def _canonical(chosen, depth, perm_map):
    # sorted grid positions of the state vs. every permuted image
    n_perm = perm_map.shape[0]
    img = np.empty(depth, dtype=np.int64)
    for s in range(1, n_perm):
        for i in range(depth):
            img[i] = perm_map[s, chosen[i]]
        img.sort()
        for i in range(depth):
            if img[i] != chosen[i]:
                if img[i] < chosen[i]:
                    return False
                break
    return True


@numba.njit(cache=True)
def _sweep(coords, grid, cap, up, perm_map, k, top, max_states):
    n_grid = grid.shape[0]
    n_box = coords.shape[0]
    live = np.ones((max_states + 1, n_box), dtype=np.bool_)
    chosen = np.zeros(max_states + 1, dtype=np.int64)
    nxt = np.zeros(max_states + 1, dtype=np.int64)
    trial = np.empty(n_box, dtype=np.bool_)
    states = 0
    checked = 0
    transitions = 0
    failures = 0
    fail_state = np.full(max_states + 1, -1, dtype=np.int64)
    fail_v = -1
    depth = 0
    nxt[0] = 0
    enter = True
    while depth >= 0:
        if enter:
            enter = False
            states += 1
            if _canonical(chosen, depth, perm_map):
                checked += 1
                base = _counts(live[depth], coords, cap, k, top)
                for v in range(n_grid):
                    if not live[depth, grid[v]]:
                        continue
                    for p in range(n_box):
                        trial[p] = live[depth, p] and not up[v, p]
                    after = _counts(trial, coords, cap, k, top)
                    transitions += 1
                    if not _less(after, base):
                        failures += 1
                        if fail_v < 0:
                            fail_v = v
                            for i in range(depth):
                                fail_state[i] = chosen[i]
        if depth == max_states:
            depth -= 1
            continue
        # next grid point, in increasing order, incomparable with the antichain
        advanced = False
        while nxt[depth] < n_grid:
            v = nxt[depth]
            nxt[depth] += 1
            g = grid[v]
            ok = live[depth, g]
            if ok:
                for i in range(depth):
                    if up[v, grid[chosen[i]]]:
                        ok = False
                        break
            if ok:
                chosen[depth] = v
                for p in range(n_box):
                    live[depth + 1, p] = live[depth, p] and not up[v, p]
                nxt[depth + 1] = v + 1
                depth += 1
                enter = True
                advanced = True
                break
        if not advanced:
            depth -= 1
    return states, checked, transitions, failures, fail_state, fail_v


def sweep(k: int, bound: int, max_len: int) -> SweepReport:
    """Check strict rank descent for every bad sequence of length <= ``max_len``
    over ``{0..bound}^k``."""
    if k < 1 or bound < 0 or max_len < 1:
        raise ValueError("need k >= 1, bound >= 0, max_len >= 1")
    g = Grid(k, bound)
    coords, grid, cap, up, perm_map = g.tables()
    states, checked, transitions, failures, fail_state, fail_v = _sweep(
        coords, grid, cap, up, perm_map, k, g.side - 1, max_len - 1)
    first = None
    if failures:
        pts = [tuple(int(x) for x in coords[grid[i]]) for i in fail_state if i >= 0]
        first = (tuple(pts), tuple(int(x) for x in coords[grid[fail_v]]))
    return SweepReport(k, bound, max_len, int(states), int(checked), int(transitions),
                       int(failures), first)


def grid_counts(minimal, k: int, bound: int) -> tuple[int, ...]:
    """Essential-fibre counts computed on the bounded box (for cross-checks)."""
    g = Grid(k, bound)
    coords, grid, cap, up, _ = g.tables()
    live = np.ones(len(coords), dtype=np.bool_)
    for a in minimal:
        live &= ~np.all(coords >= np.array(a), axis=1)
    return tuple(int(x) for x in _counts(live, coords, cap, k, g.side - 1))
