from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from shellchains.chains import boundary, is_shell
from shellchains.circle import ModelParams, lascar_distance, shd
from shellchains.errors import NotCentered, OutOfRange, TooLong
from shellchains.rewriting import extract_chain_walk
from shellchains.shells import (
    Shell1,
    ShellSpec,
    build_shell,
    check_weak_3a,
    construct_min_fill,
    distance_walk_bounds,
    fill_shell_lascar,
    fill_steps,
    n_s_of,
    realize_distance_walk,
    walk_to_points,
)
from shellchains.simplex import simplex_from_top

from gen import length3_fills

specs = st.integers(2, 10).flatmap(
    lambda n: st.tuples(st.just(n), *(st.integers(0, n - 1) for _ in range(3)))
)


def spec_of(n, k1, k2, k3):
    return ShellSpec(ModelParams(n), k1, k2, k3)


def test_spec_validates_residues():
    with pytest.raises(ValueError):
        spec_of(4, 4, 0, 0)


@pytest.mark.parametrize("n, k", [(4, (0, 0, 0)), (5, (0, 0, 2)), (7, (3, 1, 6))])
def test_build_shell(n, k):
    P = ModelParams(n)
    sh = build_shell(ShellSpec(P, *k))
    assert is_shell(sh.chain) and not boundary(sh.chain)
    a, c = sh.s01.top
    a2, b = sh.s02.top
    c2, b2 = sh.s12.top
    assert a == a2 and b == b2
    assert (shd(a, c, P), shd(a, b, P), shd(b, c2, P)) == k


def test_shell_from_chain_round_trip():
    sh = build_shell(spec_of(5, 1, 2, 3))
    assert Shell1.from_chain(sh.chain) == sh
    assert Shell1.from_chain(-sh.chain) == sh


@pytest.mark.parametrize(
    "n, k, k4, ns", [(5, (0, 0, 2), 2, 5), (3, (1, 2, 0), 1, 3), (6, (2, 4, 4), 0, 1), (4, (0, 0, 2), 2, 3)]
)
def test_n_s(n, k, k4, ns):
    spec = spec_of(n, *k)
    assert spec.k4 == k4 and n_s_of(spec) == ns


@given(specs)
def test_n_s_depends_only_on_k4(s):
    n, k1, k2, k3 = s
    spec = spec_of(*s)
    shifted = spec_of(n, (k1 + 1) % n, (k2 + 1) % n, k3)
    assert shifted.k4 == spec.k4 and n_s_of(shifted) == n_s_of(spec)
    assert n_s_of(spec) % 2 == 1


@pytest.mark.parametrize("n", range(2, 13))
def test_growth(n):
    assert n_s_of(spec_of(n, 0, 0, n // 2)) >= n - 1


def test_realize_distance_walk_base_case():
    P = ModelParams(5)
    a, ds = realize_distance_walk(0, [1], 1, P)
    assert len(ds) == 2
    assert shd(a, ds[0], P) == 0 and shd(ds[0], ds[1], P) == 1 and shd(a, ds[1], P) == 1


def test_realize_distance_walk_errors():
    P = ModelParams(5)
    with pytest.raises(OutOfRange):
        realize_distance_walk(0, [1, 1], 0, P)
    with pytest.raises(TooLong):
        realize_distance_walk(0, [0] * 5, 0, P)


@settings(max_examples=200)
@given(st.integers(2, 8), st.data())
def test_realize_distance_walk_hits_targets(n, data):
    P = ModelParams(n)
    m = data.draw(st.integers(0, n - 2))
    k = data.draw(st.integers(0, n - 1))
    ls = data.draw(st.lists(st.integers(-n, n), min_size=m + 1, max_size=m + 1))
    lo, hi = distance_walk_bounds(k, ls)
    target = data.draw(st.integers(lo, hi))
    a, ds = realize_distance_walk(k, ls, target, P)
    assert shd(a, ds[0], P) == k % n
    assert all(shd(ds[i], ds[i + 1], P) == ls[i] % n for i in range(m + 1))
    assert shd(a, ds[-1], P) == target % n


@pytest.mark.parametrize("n, k, length", [(5, (0, 0, 2), 5), (5, (1, 1, 0), 1), (3, (1, 2, 0), 3)])
def test_construct_min_fill_examples(n, k, length):
    spec = spec_of(n, *k)
    shell = build_shell(spec)
    r = construct_min_fill(spec, shell)
    assert r.length == length and r.method == "construction"
    assert boundary(r.chain) == shell.chain
    assert r.chain.support == {0, 1, 2}


@given(specs)
def test_construct_min_fill(s):
    spec = spec_of(*s)
    shell = build_shell(spec)
    r = construct_min_fill(spec, shell)
    assert boundary(r.chain) == shell.chain
    assert r.length == n_s_of(spec)
    signs = [k for k, _ in extract_chain_walk(r.chain, (1, shell.s01), (-1, shell.s02), 0).terms]
    assert signs == [(-1) ** i for i in range(r.length)]


def test_fill_steps_shape():
    spec = spec_of(7, 2, 5, 3)
    ls, target = fill_steps(spec)
    ms = (n_s_of(spec) - 1) // 2
    assert ls == [0, -1] * ms + [-4]
    assert all(ls[2 * i + 1] == -ls[2 * i] - 1 for i in range(ms))
    lo, hi = distance_walk_bounds(spec.k1, ls)
    assert lo <= target <= hi and (target - spec.k2) % 7 == 0


def _shell_with_vertex_points(c, c2, a, b, P):
    return Shell1(
        s12=simplex_from_top((1, 2), (a, b), P),
        s02=simplex_from_top((0, 2), (c2, b), P),
        s01=simplex_from_top((0, 1), (c, a), P),
    )


def test_lascar_fill_antipodal():
    P = ModelParams(4)
    sh = _shell_with_vertex_points(F(0), F(1, 2), F(1, 8), F(1, 16), P)
    r = fill_shell_lascar(sh, P)
    assert r.details["N"] == 3 and r.length == 7
    assert boundary(r.chain) == sh.chain


def test_lascar_fill_same_point():
    P = ModelParams(4)
    sh = _shell_with_vertex_points(F(0), F(0), F(1, 8), F(1, 16), P)
    r = fill_shell_lascar(sh, P)
    assert r.details["N"] == 0 and r.length == 1
    assert boundary(r.chain) == sh.chain


@settings(max_examples=150)
@given(specs)
def test_lascar_fill(s):
    spec = spec_of(*s)
    P = spec.params
    shell = build_shell(spec)
    r = fill_shell_lascar(shell, P)
    assert boundary(r.chain) == shell.chain
    N = lascar_distance(r.details["c"], r.details["c_prime"], P)
    assert r.length == 2 * N + 1


@pytest.mark.parametrize("n, holds", [(2, True), (3, True), (4, True), (5, False), (9, False)])
def test_weak_three_amalgamation(n, holds):
    res = check_weak_3a(ModelParams(n))
    assert res.holds is holds
    if not holds:
        assert res.n_s > 3 and n_s_of(res.witness) == res.n_s


def test_weak_three_amalgamation_witness():
    res = check_weak_3a(ModelParams(5))
    assert res.witness.triple == (0, 0, 2) and res.n_s == 5


def test_walk_to_points_minimal_fill():
    P = ModelParams(5)
    spec = spec_of(5, 0, 0, 2)
    shell = build_shell(spec)
    g = construct_min_fill(spec, shell).chain
    w = extract_chain_walk(g, (1, shell.s01), (-1, shell.s02), 0)
    a, ds, flags = walk_to_points(w, P)
    ls = [shd(ds[i], ds[i + 1], P) for i in range(len(ds) - 1)]
    assert all(ls[2 * i + 1] == (-ls[2 * i] - 1) % 5 for i in range(2))
    assert ls[-1] == (-spec.k3 - 1) % 5
    assert flags == [True, False, True, False, True]
    assert shd(a, ds[0], P) == spec.k1 and shd(a, ds[-1], P) == spec.k2


def test_walk_to_points_single_term():
    P = ModelParams(5)
    spec = spec_of(5, 1, 1, 0)
    shell = build_shell(spec)
    g = construct_min_fill(spec, shell).chain
    w = extract_chain_walk(g, (1, shell.s01), (-1, shell.s02), 0)
    ((_, t),) = w.terms
    a, (d0, d1), flags = walk_to_points(w, P)
    assert flags == [True]
    assert shd(a, d0, P) == shd(t.top[0], t.top[1], P)
    assert shd(d0, d1, P) == shd(t.top[1], t.top[2], P)


def test_walk_to_points_needs_centre():
    P = ModelParams(4)
    _, shell, c = next(length3_fills(4))
    w = extract_chain_walk(c, (1, shell.s12), (1, shell.s01), 1)
    assert any(0 not in t.support for _, t in w.terms)
    object.__setattr__(w, "center", 0)
    with pytest.raises(NotCentered):
        walk_to_points(w, P)
