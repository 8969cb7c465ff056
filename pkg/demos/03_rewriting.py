"""
Crossing and renaming moves
===========================

Two triangles sharing a cancelling edge can be swapped for the other two
faces of a tetrahedron over them (CR); a vertex that disappears from a
subchain's boundary can be renamed to a fresh label (RS).  Neither move
changes the boundary or adds terms.
"""
from shellchains.chains import Chain, boundary
from shellchains.circle import ModelParams
from shellchains.rewriting import (
    apply_cr,
    apply_rs,
    classify,
    find_cr_sites,
    find_vanishing,
    is_minimal,
    standard_walk,
)
from shellchains.samples import example_proper, nr_five_term
from shellchains.serialize import RewriteTrace
from shellchains.shells import ShellSpec, build_shell, fill_shell_lascar

P = ModelParams(5)

# three faces of one tetrahedron collapse to the fourth
c, f3 = example_proper(P)
site = find_cr_sites(c)[0]
print("CR on", (site.k1, site.k2, site.l1, site.l2), "->", apply_cr(c, site, P) == Chain.unit(f3))

# vertex 3 is interior, so the chain may be relabelled
j, d = find_vanishing(c)
print("vanishing vertex", j, " renamed supports:", sorted(f.support for f in apply_rs(c, d, j, 9)))
print(classify(c).value, " minimal:", is_minimal(c, P))

# %%
# A five-term chain with no interior vertex: no move applies at all.
a = nr_five_term(P)
print(classify(a).value, " sites:", len(find_cr_sites(a)), " minimal:", is_minimal(a, P))

# %%
# A length-3 fill of a shell with n_s = 3, brought to standard form: a fan
# around vertex 0 whose last triangle sits on {0, 1, 2}.
for k1 in range(5):
    shell = build_shell(ShellSpec(P, k1, 1, 0))
    fill = fill_shell_lascar(shell, P).chain
    if fill.length == 3:
        break
print("input supports", [f.support for f in fill])

trace = RewriteTrace()
walk = standard_walk(fill, P, trace=trace)
print("standard supports", [t.support for _, t in walk.terms], " sequence", walk.sequence)
print("same boundary:", boundary(walk.chain) == boundary(fill))
print(trace.to_jsonl(), end="")
