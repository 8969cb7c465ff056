"""
Filling any shell through a path of adjacent points
===================================================

The two edges at vertex 0 of a shell may realize that vertex by points ``c``
and ``c'`` far apart.  Walking from ``c`` to ``c'`` in ``N`` adjacent steps
gives a fill with ``2N + 1`` triangles, so every 1-shell bounds.
"""
import random
from collections import Counter
from fractions import Fraction as F

from shellchains.chains import boundary
from shellchains.circle import ModelParams, lascar_distance
from shellchains.shells import Shell1, ShellSpec, build_shell, fill_shell_lascar, n_s_of
from shellchains.simplex import simplex_from_top

P = ModelParams(4)

# vertex 0 realized by antipodal points: three steps apart
shell = Shell1(
    s12=simplex_from_top((1, 2), (F(1, 8), F(1, 16)), P),
    s02=simplex_from_top((0, 2), (F(1, 2), F(1, 16)), P),
    s01=simplex_from_top((0, 1), (F(0), F(1, 8)), P),
)
r = fill_shell_lascar(shell, P)
print("N =", r.details["N"], " length", r.length, " bounds:", boundary(r.chain) == shell.chain)
print("path", [str(p) for p in r.details["path"]])

# %%
# Random shells: the fill always closes, and is never shorter than n_s.
rng = random.Random(1)
lengths = Counter()
for _ in range(200):
    n = rng.randrange(2, 9)
    Q = ModelParams(n)
    spec = ShellSpec(Q, *(rng.randrange(n) for _ in range(3)))
    sh = build_shell(spec)
    g = fill_shell_lascar(sh, Q)
    assert boundary(g.chain) == sh.chain
    assert g.length == 2 * lascar_distance(g.details["c"], g.details["c_prime"], Q) + 1 >= n_s_of(spec)
    lengths[g.length] += 1
print("fill lengths over 200 random shells:", dict(sorted(lengths.items())))
