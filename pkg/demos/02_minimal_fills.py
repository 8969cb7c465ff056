"""
Minimal fills of 1-shells
=========================

A shell is fixed by three residues ``(k1, k2, k3)``; its minimal fill length
is ``n_s = min(2(n - k4) - 1, 2 k4 + 1)`` with ``k4 = k2 - k1 + k3 mod n``.  We
build the fill, check its boundary, and compare with two brute-force searches.
"""
import numpy as np

from shellchains.chains import boundary
from shellchains.circle import ModelParams, shd
from shellchains.oracles import oracle_min_fill
from shellchains.rewriting import extract_chain_walk
from shellchains.shells import ShellSpec, build_shell, construct_min_fill, n_s_of

P = ModelParams(5)
spec = ShellSpec(P, 0, 0, 2)
shell = build_shell(spec)
print("k4 =", spec.k4, " n_s =", n_s_of(spec))

fill = construct_min_fill(spec, shell)
print("fill length", fill.length, " boundary is the shell:", boundary(fill.chain) == shell.chain)

# the fill is a fan of triangles around vertex 0; the labels alternate 1, 2
walk = extract_chain_walk(fill.chain, (1, shell.s01), (-1, shell.s02), 0)
print("walk sequence", walk.sequence, " signs", [s for s, _ in walk.terms])

a, *d = fill.details["points"]
print("steps shd(d_i, d_i+1):", [shd(d[i], d[i + 1], P) for i in range(len(d) - 1)])

# %%
# Both searches agree with the formula for every spec.
for method in ("arithmetic", "grid"):
    print(method, oracle_min_fill(spec, 9, method))

# %%
# n_s over all k4, one row per n.  The worst shell needs about n triangles, so
# no bound on fill length holds uniformly in n.
table = np.zeros((11, 12), dtype=int)
for n in range(2, 13):
    for k4 in range(n):
        table[n - 2, k4] = n_s_of(ShellSpec(ModelParams(n), 0, k4, 0))
print(table)
print("max per n:", table.max(axis=1))
