"""
The circle with a cyclic order and a rotation, in exact rational arithmetic.

Points are :class:`fractions.Fraction` values in ``[0, 1)`` measuring a
fraction of a full turn.  Clockwise means increasing coordinate (mod 1), and
``g`` is the rotation by ``1/n`` of a turn.  Everything here is a pure
function of immutable values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptyArc, LengthMismatch, SameOrbit

CirclePoint = Fraction
PointTuple = tuple  # tuple[Fraction, ...]

_MAX_BISECTION_DEPTH = 64


@dataclass(frozen=True)
class ModelParams:
    """Rotation order ``n`` of the structure (``n >= 2``)."""

    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"rotation order must be an integer >= 2, got {self.n!r}")

    @property
    def step(self) -> Fraction:
        return Fraction(1, self.n)


def point(x) -> Fraction:
    """Coerce ``x`` (int, Fraction, or ``"p/q"`` string) to a point in [0, 1)."""
    return Fraction(x) % 1


def rotate(p: Fraction, i: int, params: ModelParams) -> Fraction:
    """Apply ``g^i``: move ``p`` clockwise by ``i/n`` of a turn."""
    return (p + Fraction(i, params.n)) % 1


def s_pred(a: Fraction, b: Fraction, c: Fraction) -> bool:
    """``S(a, b, c)``: distinct, and ``b`` comes before ``c`` clockwise from ``a``."""
    if a == b or b == c or a == c:
        return False
    return (b - a) % 1 < (c - a) % 1


def s_hat_pred(x: Fraction, y: Fraction, z: Fraction) -> bool:
    return (x != z and s_pred(x, y, z)) or (x == z and x != y)


def canonical_rep(p: Fraction, params: ModelParams) -> Fraction:
    """The orbit element of ``p`` lying in ``[0, 1/n)``."""
    return Fraction(p) % params.step


def same_orbit(p: Fraction, q: Fraction, params: ModelParams) -> bool:
    return ((p - q) * params.n).denominator == 1


def orbit(p: Fraction, params: ModelParams) -> tuple:
    return tuple(rotate(p, i, params) for i in range(params.n))


def shd(a: Fraction, b: Fraction, params: ModelParams) -> int:
    """Sector index ``k`` in ``[0, n)`` with ``b`` strictly between ``g^k(a)`` and ``g^(k+1)(a)``."""
    if same_orbit(a, b, params):
        raise SameOrbit(f"{b} lies in the orbit of {a} (n={params.n})")
    return math.floor(params.n * ((b - a) % 1))


def in_cyclic_interval(r: int, lo: int, hi: int, n: int) -> bool:
    """Whether residue ``r`` is congruent to some integer in ``[lo, hi]`` mod ``n``."""
    if hi < lo:
        return False
    if hi - lo + 1 >= n:
        return True
    return (r - lo) % n <= hi - lo


def shd_between(a: Fraction, b: Fraction, lo: int, hi: int, params: ModelParams) -> bool:
    """Evaluate ``lo <= Sd(a, b) <= hi`` as cyclic-interval membership."""
    return in_cyclic_interval(shd(a, b, params), lo, hi, params.n)


def fingerprint(t: Sequence[Fraction], params: ModelParams) -> tuple:
    """Canonical code for the atomic diagram of the tuple ``t``.

    All points ``g^i(t[j])`` are labelled ``(j, i)`` and read clockwise starting
    from ``t[0]``; coincident points are grouped.  By quantifier elimination two
    tuples have the same type exactly when their codes agree.
    """
    if not t:
        return ()
    origin = t[0]
    labelled = sorted(
        ((rotate(p, i, params) - origin) % 1, (j, i))
        for j, p in enumerate(t)
        for i in range(params.n)
    )
    groups = []
    last = None
    for pos, label in labelled:
        if pos == last:
            groups[-1].append(label)
        else:
            groups.append([label])
            last = pos
    return tuple(tuple(g) for g in groups)


def same_type(t1: Sequence[Fraction], t2: Sequence[Fraction], params: ModelParams) -> bool:
    if len(t1) != len(t2):
        raise LengthMismatch(f"tuples of length {len(t1)} and {len(t2)}")
    return fingerprint(t1, params) == fingerprint(t2, params)


def independent(t: Sequence[Fraction], params: ModelParams) -> bool:
    """Pairwise disjoint orbits, i.e. pairwise disjoint algebraic closures."""
    return all(
        not same_orbit(t[i], t[j], params)
        for i in range(len(t))
        for j in range(i + 1, len(t))
    )


def shd_matrix(t: Sequence[Fraction], params: ModelParams) -> tuple:
    """Residues ``shd(t[i], t[j])`` for ``i < j``, row by row."""
    return tuple(
        shd(t[i], t[j], params) for i in range(len(t)) for j in range(i + 1, len(t))
    )


def _arc_intersection(constraints, params):
    step = params.step
    if not constraints:
        return Fraction(0), step
    anchor, k = constraints[0]
    lo = (anchor + k * step) % 1
    hi = lo + step
    for anchor, k in constraints[1:]:
        s = (anchor + k * step) % 1
        base = math.floor(lo - s)
        for shift in (base - 1, base, base + 1):
            a, b = max(lo, s + shift), min(hi, s + shift + step)
            if a < b:
                lo, hi = a, b
                break
        else:
            raise EmptyArc(f"no point satisfies all of {constraints!r}")
    return lo, hi


def pick_generic(
    constraints: Iterable[tuple],
    avoid: Iterable[Fraction] = (),
    params: ModelParams = None,
) -> Fraction:
    """Deterministically choose a point realizing a finite set of sector constraints.

    Each constraint ``(anchor, k)`` asks for ``shd(anchor, x) == k``.  The result
    lies in the intersection of the corresponding open arcs and its orbit misses
    the orbit of every anchor and every ``avoid`` point.  Candidates are tried in
    bisection order (midpoint, then quarter points, ...).  With no constraints the
    search is seeded at the arc ``(0, 1/n)``.
    """
    constraints = [(Fraction(a), int(k)) for a, k in constraints]
    lo, hi = _arc_intersection(constraints, params)
    excluded = [a for a, _ in constraints] + [Fraction(p) for p in avoid]
    width = hi - lo
    for depth in range(1, _MAX_BISECTION_DEPTH):
        denom = 2**depth
        for i in range(1, denom, 2):
            x = (lo + width * Fraction(i, denom)) % 1
            if not any(same_orbit(x, e, params) for e in excluded):
                return x
    raise EmptyArc("bisection exhausted")  # pragma: no cover - finite exclusions


def lascar_distance(a: Fraction, b: Fraction, params: ModelParams) -> int:
    """Least number of adjacency steps from ``a`` to ``b``.

    Two points are adjacent when equal or strictly less than ``1/n`` apart, so
    with ``theta`` the shorter angular distance the answer is ``floor(n*theta)+1``
    (``n*theta + 1`` when ``n*theta`` is an integer).
    """
    if a == b:
        return 0
    theta = min((b - a) % 1, (a - b) % 1)
    x = params.n * theta
    if x.denominator == 1:
        return int(x) + 1
    return math.floor(x) + 1


def adjacent(a: Fraction, b: Fraction, params: ModelParams) -> bool:
    return a == b or s_pred(a, b, rotate(a, 1, params)) or s_pred(b, a, rotate(b, 1, params))


def fmt_point(p: Fraction) -> str:
    """Serialize as ``"p/q"`` (always with an explicit denominator)."""
    p = Fraction(p)
    return f"{p.numerator}/{p.denominator}"


def parse_point(s: str) -> Fraction:
    text = str(s).strip()
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"rational literal must look like 'p/q', got {s!r}")
    q = int(den)
    if q <= 0:
        raise ValueError(f"denominator must be positive in {s!r}")
    value = Fraction(int(num), q)
    if not 0 <= value < 1:
        raise ValueError(f"point {s!r} is outside [0, 1)")
    return value
