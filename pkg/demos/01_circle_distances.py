"""
Sector distance and adjacency on the rotated circle
===================================================

Points are exact fractions of a turn.  ``shd(a, b)`` says which of the ``n``
sectors cut out by the orbit of ``a`` contains ``b``; two points are adjacent
when they sit inside one open arc of length ``1/n``.
"""
from fractions import Fraction as F

import numpy as np

from shellchains.circle import ModelParams, lascar_distance, orbit, pick_generic, same_type, shd

P = ModelParams(4)

# the orbit of a point is a regular n-gon
print("orbit of 1/3:", [str(p) for p in orbit(F(1, 3), P)])

# %%
# Sector distances.  Swapping the arguments gives -k-1 mod n.
a, b = F(0), F(3, 10)
print("shd(0, 3/10) =", shd(a, b, P), " shd(3/10, 0) =", shd(b, a, P))

# Pairs of points have the same type exactly when their sector distances agree
print(same_type([a, b], [F(1, 2), F(4, 5)], P), same_type([a, b], [a, F(3, 5)], P))

# %%
# Generic points: constraints are (anchor, sector) pairs.  The choice is a
# deterministic bisection, so reruns give identical fractions.
x = pick_generic([(F(0), 1), (F(1, 3), 0)], avoid=[F(3, 10)], params=P)
print("picked", x, "sectors:", shd(F(0), x, P), shd(F(1, 3), x, P))

# %%
# Adjacency distance from 0 as the second point goes once around the circle.
# The antipode is always more than n/2 steps away.
for n in (2, 4, 7):
    Q = ModelParams(n)
    grid = [F(j, 8 * n) for j in range(8 * n)]
    d = np.array([lascar_distance(F(0), p, Q) for p in grid])
    print(f"n={n}: max {d.max()} at {grid[int(d.argmax())]},  d(0, 1/2) = {lascar_distance(F(0), F(1, 2), Q)}")
