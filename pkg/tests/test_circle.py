from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from shellchains.circle import (
    ModelParams,
    canonical_rep,
    fingerprint,
    lascar_distance,
    orbit,
    pick_generic,
    rotate,
    s_hat_pred,
    s_pred,
    same_orbit,
    same_type,
    shd,
)
from shellchains.errors import EmptyArc, LengthMismatch, SameOrbit
from shellchains.oracles import lascar_distance_grid

P4 = ModelParams(4)

points = st.builds(lambda p, q: F(p % q, q), st.integers(0, 10_000), st.integers(1, 500))
orders = st.integers(2, 12)


def test_model_params_rejects_small_n():
    with pytest.raises(ValueError):
        ModelParams(1)
    with pytest.raises(ValueError):
        ModelParams(True)


@pytest.mark.parametrize(
    "p, i, expected",
    [(F(1, 3), 1, F(7, 12)), (F(2, 7), 0, F(2, 7)), (F(9, 10), 2, F(2, 5))],
)
def test_rotate(p, i, expected):
    assert rotate(p, i, P4) == expected


@given(points, orders)
def test_rotate_full_turn_is_identity(p, n):
    assert rotate(p, n, ModelParams(n)) == p


@pytest.mark.parametrize(
    "a, b, c, expected",
    [(0, F(1, 8), F(1, 4), True), (0, F(1, 4), F(1, 8), False), (0, 0, F(1, 4), False)],
)
def test_s_pred(a, b, c, expected):
    assert s_pred(F(a), F(b), F(c)) is expected


@pytest.mark.parametrize(
    "x, y, z, expected",
    [(0, F(1, 8), F(1, 4), True), (0, F(1, 8), 0, True), (0, 0, 0, False)],
)
def test_s_hat_pred(x, y, z, expected):
    assert s_hat_pred(F(x), F(y), F(z)) is expected


@given(points, points, points)
def test_s_is_a_circular_order(a, b, c):
    if len({a, b, c}) < 3:
        assert not s_pred(a, b, c)
        return
    assert s_pred(a, b, c) == s_pred(b, c, a)  # cyclic
    assert s_pred(a, b, c) != s_pred(a, c, b)  # asymmetric and total


@given(points, points, points, points)
def test_s_transitive(a, b, c, d):
    if s_pred(a, b, c) and s_pred(a, c, d):
        assert s_pred(a, b, d)


@pytest.mark.parametrize(
    "p, n, expected", [(F(7, 12), 4, F(1, 12)), (F(0), 7, F(0)), (F(1, 5), 5, F(0))]
)
def test_canonical_rep(p, n, expected):
    assert canonical_rep(p, ModelParams(n)) == expected


@given(points, orders, st.integers(-30, 30))
def test_orbit_and_canonical_rep(p, n, i):
    P = ModelParams(n)
    assert len(set(orbit(p, P))) == n
    r = canonical_rep(p, P)
    assert canonical_rep(r, P) == r
    assert canonical_rep(rotate(p, i, P), P) == r
    assert 0 <= r < F(1, n)


@pytest.mark.parametrize("a, b, expected", [(0, F(3, 10), 1), (F(3, 10), 0, 2), (0, F(1, 8), 0)])
def test_shd(a, b, expected):
    assert shd(F(a), F(b), P4) == expected


def test_shd_same_orbit():
    with pytest.raises(SameOrbit):
        shd(F(0), F(1, 4), P4)
    with pytest.raises(SameOrbit):
        shd(F(1, 3), F(1, 3), P4)


@given(points, points, orders)
def test_shd_antisymmetry(a, b, n):
    P = ModelParams(n)
    if same_orbit(a, b, P):
        return
    assert shd(b, a, P) == (n - 1 - shd(a, b, P)) % n


@given(points, points, orders)
def test_shd_names_the_sector(a, b, n):
    P = ModelParams(n)
    if same_orbit(a, b, P):
        return
    k = shd(a, b, P)
    assert s_hat_pred(rotate(a, k, P), b, rotate(a, k + 1, P))


@pytest.mark.parametrize(
    "t1, t2, expected",
    [
        ((0, F(3, 10)), (F(1, 2), F(4, 5)), True),
        ((0, F(3, 10)), (0, F(3, 10)), True),
        ((0, F(3, 10)), (0, F(3, 5)), False),
    ],
)
def test_same_type(t1, t2, expected):
    assert same_type([F(x) for x in t1], [F(x) for x in t2], P4) is expected


def test_same_type_length_mismatch():
    with pytest.raises(LengthMismatch):
        same_type([F(0)], [F(0), F(1, 8)], P4)


@given(st.lists(points, min_size=1, max_size=4), points, orders)
def test_same_type_rotation_invariant(t, r, n):
    P = ModelParams(n)
    moved = [(p + r) % 1 for p in t]
    assert same_type(t, moved, P)


@given(points, points, points, points, orders)
def test_pair_type_is_shd(a, b, c, d, n):
    P = ModelParams(n)
    if same_orbit(a, b, P) or same_orbit(c, d, P):
        return
    assert (fingerprint([a, b], P) == fingerprint([c, d], P)) == (shd(a, b, P) == shd(c, d, P))


def test_pick_generic_examples():
    assert pick_generic([(F(0), 1)], [F(3, 10)], P4) == F(3, 8)
    assert pick_generic([], [], P4) == F(1, 8)
    with pytest.raises(EmptyArc):
        pick_generic([(F(0), 0), (F(0), 1)], [], P4)


@given(st.lists(st.tuples(points, st.integers(0, 11)), max_size=3), st.lists(points, max_size=4), orders)
def test_pick_generic_postcondition(cons, avoid, n):
    P = ModelParams(n)
    cons = [(a, k % n) for a, k in cons]
    try:
        x = pick_generic(cons, avoid, P)
    except EmptyArc:
        return
    for a, k in cons:
        assert shd(a, x, P) == k
    assert not any(same_orbit(x, e, P) for e in avoid)


@pytest.mark.parametrize("a, b, expected", [(0, 0, 0), (0, F(1, 8), 1), (0, F(1, 2), 3)])
def test_lascar_distance_examples(a, b, expected):
    assert lascar_distance(F(a), F(b), P4) == expected


@pytest.mark.parametrize("n", range(2, 13))
def test_lascar_antipodal_exceeds_half(n):
    assert lascar_distance(F(0), F(1, 2), ModelParams(n)) > n / 2


@pytest.mark.parametrize("n", range(2, 7))
def test_lascar_formula_matches_grid_search(n):
    # distance is rotation invariant, so one endpoint may be fixed at 0
    P = ModelParams(n)
    for j in range(24 * n):
        b = F(j, 24 * n)
        assert lascar_distance(F(0), b, P) == lascar_distance_grid(F(0), b, P), b


small_points = st.builds(lambda p, q: F(p % q, q), st.integers(0, 1000), st.integers(1, 40))


@settings(max_examples=50)
@given(small_points, small_points, st.integers(2, 8))
def test_lascar_formula_matches_grid_search_random(a, b, n):
    P = ModelParams(n)
    assert lascar_distance(a, b, P) == lascar_distance_grid(a, b, P)
