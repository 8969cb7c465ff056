"""
End-to-end acceptance criteria, each with a wall-clock budget.

Every criterion prints one ``PASS``/``FAIL`` line in the terminal summary (see
``conftest.py``); run ``python3 tests/test_acceptance.py`` to get the same lines
without pytest.
"""
import functools
import random
import time
from fractions import Fraction
from functools import lru_cache

from shellchains.chains import Chain, boundary, is_cycle, is_shell, sigma_star
from shellchains.circle import ModelParams, in_cyclic_interval, lascar_distance, same_orbit, shd
from shellchains.oracles import oracle_min_fill
from shellchains.rewriting import (
    ChainKind,
    apply_cr,
    apply_rs,
    classify,
    extract_chain_walk,
    find_cr_sites,
    to_standard_rn,
)
from shellchains.samples import example_proper, nr_five_term, tetrahedron_faces
from shellchains.shells import (
    ShellSpec,
    build_shell,
    check_weak_3a,
    construct_min_fill,
    distance_walk_bounds,
    fill_shell_lascar,
    n_s_of,
    realize_distance_walk,
)

from gen import random_chain, random_cr_chain, random_permutation, random_rs_case, random_simplex

RESULTS: dict = {}


def criterion(number: int, title: str, limit: float):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS[number] = (title, False, time.perf_counter() - start, limit, repr(exc)[:80])
                raise
            elapsed = time.perf_counter() - start
            ok = elapsed < limit
            RESULTS[number] = (title, ok, elapsed, limit, "" if ok else "over time budget")
            assert ok, f"criterion {number} took {elapsed:.1f}s (limit {limit}s)"

        return run

    return wrap


def all_specs(n):
    P = ModelParams(n)
    return [ShellSpec(P, a, b, c) for a in range(n) for b in range(n) for c in range(n)]


@lru_cache(maxsize=None)
def lascar_suite():
    """50 seeded random specs per n in 2..8, with their shells and Lascar fills."""
    rng = random.Random(20240605)
    out = []
    for n in range(2, 9):
        P = ModelParams(n)
        for _ in range(50):
            spec = ShellSpec(P, *(rng.randrange(n) for _ in range(3)))
            shell = build_shell(spec)
            out.append((spec, shell, fill_shell_lascar(shell, P)))
    return tuple(out)


@criterion(1, "minimal fill length equals n_s (both oracles, n=2..6)", 60)
def test_minimal_length_reproduction():
    for n in range(2, 7):
        for spec in all_specs(n):
            ns = n_s_of(spec)
            assert oracle_min_fill(spec, 9, "arithmetic") == ns, spec
            assert oracle_min_fill(spec, 9, "grid") == ns, spec


@criterion(2, "constructed fill bounds the shell with length n_s (n=2..10)", 30)
def test_constructive_upper_bound():
    for n in range(2, 11):
        for spec in all_specs(n):
            shell = build_shell(spec)
            fill = construct_min_fill(spec, shell)
            assert boundary(fill.chain) == shell.chain, spec
            assert fill.length == n_s_of(spec), spec


@criterion(3, "weak 3-amalgamation holds exactly for n<=4", 5)
def test_weak_three_amalgamation_threshold():
    for n in (2, 3, 4):
        assert check_weak_3a(ModelParams(n)).holds
    for n in range(5, 11):
        res = check_weak_3a(ModelParams(n))
        assert not res.holds and res.n_s > 3 and n_s_of(res.witness) == res.n_s
    five = check_weak_3a(ModelParams(5))
    assert five.witness.triple == (0, 0, 2) and five.n_s == 5


@criterion(4, "n_s of (0,0,n//2) is at least n-1 (n=2..12)", 1)
def test_growth():
    for n in range(2, 13):
        assert n_s_of(ShellSpec(ModelParams(n), 0, 0, n // 2)) >= n - 1


@criterion(5, "Lascar fills bound the shell with length 2N+1", 30)
def test_shell_filling():
    suite = lascar_suite()
    assert len(suite) == 350
    for spec, shell, fill in suite:
        assert boundary(fill.chain) == shell.chain, spec
        N = lascar_distance(fill.details["c"], fill.details["c_prime"], spec.params)
        assert fill.length == 2 * N + 1, spec


@criterion(6, "CR and RS preserve boundary and never lengthen", 10)
def test_rewriting_soundness():
    rng = random.Random(6)
    for _ in range(500):
        P = ModelParams(rng.randrange(2, 9))
        c = random_cr_chain(rng, P)
        out = apply_cr(c, rng.choice(find_cr_sites(c)), P)
        assert boundary(out) == boundary(c) and out.length <= c.length
    for _ in range(500):
        P = ModelParams(rng.randrange(2, 9))
        c, d, j, k = random_rs_case(rng, P)
        out = apply_rs(c, d, j, k)
        assert boundary(out) == boundary(c) and out.length == c.length
    P = ModelParams(5)
    c, f3 = example_proper(P)
    f0, f1 = tetrahedron_faces(P)[:2]
    (site,) = [s for s in find_cr_sites(c) if {s.alpha1, s.alpha2} == {f0, f1}]
    assert apply_cr(c, site, P) == Chain.unit(f3)


@criterion(7, "chain algebra: dd=0, d commutes with sigma*, shells", 10)
def test_chain_algebra():
    rng = random.Random(7)
    for i in range(1000):
        P = ModelParams(rng.randrange(2, 9))
        c = random_chain(rng, 2 + i % 2, P, terms=3)
        assert is_cycle(boundary(c))
        sigma = random_permutation(rng)
        assert boundary(sigma_star(sigma, c)) == sigma_star(sigma, boundary(c))
    for _ in range(200):
        P = ModelParams(rng.randrange(2, 9))
        f = random_simplex(rng, sorted(rng.sample(range(6), 3)), P)
        s = boundary(Chain.unit(f))
        assert is_shell(s)
        assert len(s.support) == s.dimension + 2


@criterion(8, "Sd antisymmetry, composition and distance walks", 20)
def test_sd_calculus():
    rng = random.Random(8)
    for _ in range(2000):
        n = rng.randrange(2, 13)
        P = ModelParams(n)
        x, y, z = (Fraction(rng.randrange(10**6), 10**6) for _ in range(3))
        if same_orbit(x, y, P) or same_orbit(y, z, P) or same_orbit(x, z, P):
            continue
        assert shd(y, x, P) == (-shd(x, y, P) - 1) % n
        k = rng.randrange(-n, n)
        l = k + rng.randrange(1, n)
        m = shd(y, z, P)
        if in_cyclic_interval(shd(x, y, P), k, l - 1, n):
            assert in_cyclic_interval(shd(x, z, P), m + k, m + l, n)
    for n in range(2, 9):
        P = ModelParams(n)
        for m in range(n - 1):
            for _ in range(3):
                k = rng.randrange(n)
                ls = [rng.randrange(-n, n) for _ in range(m + 1)]
                lo, hi = distance_walk_bounds(k, ls)
                for target in range(lo, hi + 1):
                    a, ds = realize_distance_walk(k, ls, target, P)
                    assert shd(a, ds[0], P) == k
                    assert all(shd(ds[i], ds[i + 1], P) == ls[i] % n for i in range(m + 1))
                    assert shd(a, ds[-1], P) == target % n


@criterion(9, "NR example, length-3 fills are RN, standard forms", 20)
def test_classification():
    for n in (2, 5, 8):
        assert classify(nr_five_term(ModelParams(n))) is ChainKind.NR
    threes = [(spec, shell, fill) for spec, shell, fill in lascar_suite() if fill.length == 3]
    assert threes
    for spec, shell, fill in threes:
        assert classify(fill.chain) is ChainKind.RN
        out = to_standard_rn(fill.chain, spec.params)
        assert boundary(out) == shell.chain and out.length == 3
        walk = extract_chain_walk(out, (1, shell.s01), (-1, shell.s02), 0)
        assert walk.as_chain == out and walk.is_valid()
        sign, last = walk.terms[-1]
        assert sign == 1 and last.support == (0, 1, 2) and last.face((1, 2)) == shell.s12


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
    for k in sorted(RESULTS):
        title, ok, elapsed, limit, note = RESULTS[k]
        print(f"criterion {k}: {'PASS' if ok else 'FAIL'} {elapsed:6.2f}s / {limit}s  {title} {note}".rstrip())
