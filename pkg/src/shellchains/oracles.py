"""
Independent checks of the closed-form fill length and of the Lascar distance.

``oracle_min_fill`` has two implementations that share no code with the
constructive fill: a residue-arithmetic feasibility test and a search over
chain-walks around vertex 0 whose points lie on the grid of multiples of
``1/(4 n^2)``.  ``lascar_distance_grid`` computes adjacency distance by
breadth-first dilation on a fine grid.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .circle import ModelParams


def _check_len(max_len: int):
    if max_len < 1 or max_len % 2 == 0:
        raise ValueError(f"max_len must be a positive odd number, got {max_len}")


def oracle_arithmetic(n: int, k1: int, k2: int, k3: int, max_len: int) -> Optional[int]:
    """Least odd ``2m+1 <= max_len`` with some ``t`` in ``[-m-1, m]``, ``t = k2 - k1 + k3 (mod n)``."""
    _check_len(max_len)
    k4 = (k2 - k1 + k3) % n
    for m in range((max_len - 1) // 2 + 1):
        if any((t - k4) % n == 0 for t in range(-m - 1, m + 1)):
            return 2 * m + 1
    return None


# --- grid search -------------------------------------------------------------

def _sector(x: int, y: int, grid: int, n: int) -> int:
    """``shd`` for grid indices (``grid`` points per turn)."""
    return ((y - x) % grid) * n // grid


@lru_cache(maxsize=None)
def _transitions(n: int) -> dict:
    """For each residue ``r = shd(a, d)``: achievable ``(shd(a, x), shd(d, x))`` over grid ``x``.

    ``a`` sits at grid index 0 and ``d`` at the middle of its sector; any other
    representative of the same residue gives the same set of pairs.
    """
    grid = 4 * n * n
    per = grid // n
    out = {}
    for r in range(n):
        d = r * per + per // 2
        pairs = set()
        for x in range(grid):
            if x % per == 0 or (x - d) % per == 0:
                continue
            pairs.add((_sector(0, x, grid, n), _sector(d, x, grid, n)))
        out[r] = tuple(sorted(pairs))
    return out


def _bump(diff: tuple, key: int, delta: int) -> tuple:
    d = dict(diff)
    v = d.get(key, 0) + delta
    if v:
        d[key] = v
    else:
        d.pop(key, None)
    return tuple(sorted(d.items()))


@lru_cache(maxsize=None)
def _reachable(n: int, k1: int, max_len: int) -> dict:
    """Map odd length ``L`` to the set of ``(shd(a, d_L), face-type balance)`` reached.

    The walk has points ``a, d_0, .., d_L`` with ``shd(a, d_0) = k1``.  Even
    steps contribute the type of ``[d_i, d_{i+1}]`` to the balance of
    ``{1,2}``-faces, odd steps subtract the type of ``[d_{i+1}, d_i]``.  A fill
    exists iff the balance is exactly the type of the shell's ``{1,2}`` face.
    """
    trans = _transitions(n)
    layer = {(k1, ())}
    out = {}
    for step in range(max_len):
        remaining = max_len - step - 1
        nxt = set()
        for r, diff in layer:
            for r2, q in trans[r]:
                if step % 2 == 0:
                    nd = _bump(diff, q, +1)
                else:
                    nd = _bump(diff, (-q - 1) % n, -1)
                if sum(abs(v) for _, v in nd) - 1 <= remaining:
                    nxt.add((r2, nd))
        layer = nxt
        if step % 2 == 0:
            out[step + 1] = frozenset(layer)
    return out


def oracle_grid(n: int, k1: int, k2: int, k3: int, max_len: int) -> Optional[int]:
    """Least odd length of a grid chain-walk around vertex 0 whose boundary is the shell."""
    _check_len(max_len)
    goal = (k2, (((-k3 - 1) % n, 1),))
    reach = _reachable(n, k1, max_len)
    for L in range(1, max_len + 1, 2):
        if goal in reach[L]:
            return L
    return None


def oracle_min_fill(spec, max_len: int, method: str = "arithmetic") -> Optional[int]:
    fn = {"arithmetic": oracle_arithmetic, "grid": oracle_grid}[method]
    return fn(spec.params.n, spec.k1, spec.k2, spec.k3, max_len)


# --- Lascar distance by dilation ---------------------------------------------

def lascar_distance_grid(a: Fraction, b: Fraction, params: ModelParams) -> int:
    """Adjacency distance found by repeated dilation of a boolean grid.

    Grid spacing is ``1/(4 n L)`` with ``L`` the lcm of ``n`` and both
    denominators, fine enough that steps of at most ``1/n`` minus one grid unit
    lose nothing against open arcs.
    """
    n = params.n
    a, b = Fraction(a) % 1, Fraction(b) % 1
    if a == b:
        return 0
    L = math.lcm(n, a.denominator, b.denominator)
    size = 4 * n * L
    reach = size // n - 1  # largest step strictly inside an open 1/n arc
    ia, ib = int(a * size), int(b * size)
    cur = np.zeros(size, dtype=bool)
    cur[ia] = True
    steps = 0
    while not cur[ib]:
        padded = np.concatenate([cur[-reach:], cur, cur[:reach]]).astype(np.int32)
        window = np.cumsum(np.concatenate([[0], padded]))
        width = 2 * reach + 1
        cur = (window[width:] - window[:-width])[: size] > 0
        steps += 1
    return steps
