"""
1-shells in ``p_n`` and explicit 2-chains filling them.

A shell is described by residues ``(k1, k2, k3)``: with ``a`` the shared point
of vertex 0, ``s01 ~ [a, c]``, ``s02 ~ [a, b]`` and ``s12 ~ [c', b]`` where
``shd(a, c) = k1``, ``shd(a, b) = k2`` and ``shd(b, c') = k3``.  Its minimal
fill length depends only on ``k4 = k2 - k1 + k3 (mod n)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .chains import Chain, is_shell
from .circle import (
    ModelParams,
    in_cyclic_interval,
    independent,
    lascar_distance,
    pick_generic,
    shd,
)
from .errors import NotCentered, OutOfRange, TooLong
from .simplex import FunctorSimplex, simplex_from_top


@dataclass(frozen=True)
class ShellSpec:
    params: ModelParams
    k1: int
    k2: int
    k3: int

    def __post_init__(self):
        for k in (self.k1, self.k2, self.k3):
            if not 0 <= k < self.params.n:
                raise ValueError(f"residue {k} outside [0, {self.params.n})")

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def k4(self) -> int:
        return (self.k2 - self.k1 + self.k3) % self.n

    @property
    def triple(self) -> tuple:
        return (self.k1, self.k2, self.k3)


@dataclass(frozen=True)
class Shell1:
    s12: FunctorSimplex
    s02: FunctorSimplex
    s01: FunctorSimplex

    @property
    def chain(self) -> Chain:
        return Chain([(self.s12, 1), (self.s02, -1), (self.s01, 1)])

    @classmethod
    def from_chain(cls, c: Chain) -> "Shell1":
        if not is_shell(c) or c.dimension != 1:
            raise ValueError("not a 1-shell")
        v0, v1, v2 = sorted(c.support)
        faces = {f.support: f for f in c}
        if c[faces[(v1, v2)]] < 0:
            c = -c
        return cls(faces[(v1, v2)], faces[(v0, v2)], faces[(v0, v1)])


@dataclass
class FillReport:
    chain: Chain
    method: str  # "construction" | "oracle" | "lascar"
    details: dict = field(default_factory=dict)

    @property
    def length(self) -> int:
        return self.chain.length


def n_s_of(spec: ShellSpec) -> int:
    k4 = spec.k4
    return min(2 * (spec.n - k4) - 1, 2 * k4 + 1)


def build_shell(spec: ShellSpec) -> Shell1:
    P = spec.params
    a = Fraction(0)
    c = pick_generic([(a, spec.k1)], [], P)
    b = pick_generic([(a, spec.k2)], [a, c], P)
    c2 = pick_generic([(b, spec.k3)], [a, b, c], P)
    return Shell1(
        s12=simplex_from_top((1, 2), (c2, b), P),
        s02=simplex_from_top((0, 2), (a, b), P),
        s01=simplex_from_top((0, 1), (a, c), P),
    )


# --- distance walks --------------------------------------------------------

def distance_walk_bounds(k: int, l_seq: Sequence[int]) -> tuple:
    """Closed range ``[k + L_m, k + L_m + m + 1]`` of reachable ``shd(a, d_{m+1})``."""
    L = sum(l_seq)
    return k + L, k + L + len(l_seq)


def _walk_points(k, l_seq, target, P):
    """``a, d_0..d_{m+1}`` with the prescribed residues; ``target`` an integer in range."""
    a = Fraction(0)
    if not l_seq:
        return a, [pick_generic([(a, k)], [a], P)]
    *head, lm = l_seq
    lo, _ = distance_walk_bounds(k, l_seq)
    sub = target - lm if target == lo else target - lm - 1
    a, ds = _walk_points(k, head, sub, P)
    x = pick_generic([(a, target), (ds[-1], lm)], [a] + ds, P)
    return a, ds + [x]


def realize_distance_walk(k: int, l_seq: Sequence[int], target: int, params: ModelParams):
    """Points ``a, d_0, ..., d_{m+1}`` with ``shd(a, d_0) = k``, ``shd(d_i, d_{i+1}) = l_i``
    and ``shd(a, d_{m+1}) = target (mod n)``.

    ``target`` may be given up to a multiple of ``n``; it must be congruent to a
    value of the reachable range.
    """
    l_seq = [int(v) for v in l_seq]
    n = params.n
    if len(l_seq) >= n:
        raise TooLong(f"walk of {len(l_seq)} steps needs m + 1 < n = {n}")
    lo, hi = distance_walk_bounds(k, l_seq)
    if not in_cyclic_interval(target, lo, hi, n):
        raise OutOfRange(f"target {target} is not in [{lo}, {hi}] mod {n}")
    t = lo + (target - lo) % n
    a, ds = _walk_points(k, l_seq, t, params)
    return a, ds


# --- minimal fill ----------------------------------------------------------

def fill_steps(spec: ShellSpec) -> tuple:
    """``(l_seq, target)`` for the minimal fill: ``l_{2i}=0``, ``l_{2i+1}=-1``, ``l_last=-k3-1``."""
    ns = n_s_of(spec)
    ms = (ns - 1) // 2
    l_seq = [0, -1] * ms + [-spec.k3 - 1]
    low = spec.k1 - spec.k3 - ms - 1
    target = low if (low - spec.k2) % spec.n == 0 else spec.k1 - spec.k3 + ms
    return l_seq, target


def construct_min_fill(spec: ShellSpec, shell: Optional[Shell1] = None) -> FillReport:
    P = spec.params
    shell = build_shell(spec) if shell is None else shell
    ns = n_s_of(spec)
    l_seq, target = fill_steps(spec)
    a, d = _walk_points(spec.k1, l_seq, target, P)
    edges = {0: shell.s01, ns: shell.s02}
    for j in range(1, ns):
        edges[j] = simplex_from_top((0, 1) if j % 2 == 0 else (0, 2), (a, d[j]), P)
    terms = []
    for i in range(ns):
        if i == ns - 1:
            top_face = shell.s12
        elif i % 2 == 0:
            top_face = simplex_from_top((1, 2), (d[i], d[i + 1]), P)
        # odd terms reuse the {1,2} face of their even partner
        top = (a, d[i], d[i + 1]) if i % 2 == 0 else (a, d[i + 1], d[i])
        r = simplex_from_top((0, 1, 2), top, P, [edges[i], edges[i + 1], top_face])
        terms.append((r, -1 if i % 2 else 1))
    chain = Chain(terms)
    return FillReport(chain, "construction", {"points": (a, *d), "l": l_seq, "target": target})


# --- Lascar fill -----------------------------------------------------------

def _lascar_points(shell: Shell1, P: ModelParams):
    """``c, a, b, c'`` realizing ``s01 ~ [c, a]``, ``s12 ~ [a, b]``, ``s02 ~ [c', b]``."""
    c, a = shell.s01.top
    a12, b = shell.s12.top
    c2, b02 = shell.s02.top
    if a12 == a and b02 == b and independent([a, b, c], P) and independent([a, b, c2], P):
        return c, a, b, c2
    b = pick_generic([(a, shd(a12, shell.s12.top[1], P))], [a, c], P)
    c2 = pick_generic([(b, shd(b02, shell.s02.top[0], P))], [a, b, c], P)
    return c, a, b, c2


def _lascar_path(c, c2, N, P, avoid=()):
    clockwise = (c2 - c) % 1 <= (c - c2) % 1
    path = [c]
    for i in range(1, N):
        if clockwise:
            cons = [(path[-1], 0), (c2, -(N - i))]
        else:
            cons = [(path[-1], -1), (c2, N - i - 1)]
        path.append(pick_generic(cons, path + [c2, *avoid], P))
    return path + [c2]


def fill_shell_lascar(shell: Shell1, params: ModelParams) -> FillReport:
    """Fill a shell with ``2N + 1`` simplices, ``N`` the Lascar distance between the
    two realizations ``c, c'`` of vertex 0."""
    P = params
    c, a, b, c2 = _lascar_points(shell, P)
    N = lascar_distance(c, c2, P)
    if N == 0:
        r = simplex_from_top((0, 1, 2), (c, a, b), P, [shell.s01, shell.s02, shell.s12])
        return FillReport(Chain.unit(r), "lascar", {"c": c, "c_prime": c2, "N": 0})
    path = _lascar_path(c, c2, N, P, avoid=(a, b))
    es = []
    for i in range(N):
        avoid = [a, b] + path + es
        es.append(pick_generic([(path[i], 0), (path[i + 1], 0)], avoid, P))
    terms = []
    prev_01 = shell.s01
    for i in range(N):
        plus = simplex_from_top((0, 1, 3), (path[i], a, es[i]), P, [prev_01])
        terms.append((plus, 1))
        if i < N - 1:
            minus = simplex_from_top(
                (0, 1, 3), (path[i + 1], a, es[i]), P,
                [plus.face((1, 3)), plus.face((0, 3))],
            )
            terms.append((minus, -1))
            prev_01 = minus.face((0, 1))
    last = terms[-1][0]
    a023 = simplex_from_top((0, 2, 3), (c2, b, es[-1]), P, [shell.s02, last.face((0, 3))])
    a123 = simplex_from_top((1, 2, 3), (a, b, es[-1]), P, [shell.s12, last.face((1, 3)), a023.face((2, 3))])
    terms += [(a023, -1), (a123, 1)]
    return FillReport(Chain(terms), "lascar", {"c": c, "c_prime": c2, "N": N, "path": path, "witnesses": es})


# --- weak 3-amalgamation ---------------------------------------------------

@dataclass(frozen=True)
class WeakAmalgamation:
    holds: bool
    witness: Optional[ShellSpec] = None
    n_s: Optional[int] = None


def check_weak_3a(params: ModelParams) -> WeakAmalgamation:
    """Whether every shell has a fill of length at most 3; else the least failing spec."""
    n = params.n
    for k1 in range(n):
        for k2 in range(n):
            for k3 in range(n):
                spec = ShellSpec(params, k1, k2, k3)
                ns = n_s_of(spec)
                if ns > 3:
                    return WeakAmalgamation(False, spec, ns)
    return WeakAmalgamation(True)


# --- reading points off a walk ----------------------------------------------

def walk_to_points(walk, params: ModelParams):
    """Concrete ``a, d_0..d_{m+1}`` for a walk, with per-term flags ``k_i < k_{i+1}``.

    Each term's top tuple type is ``[a, d_i, d_{i+1}]`` (flag true) or
    ``[a, d_{i+1}, d_i]`` (flag false).
    """
    ctr, seq = walk.center, walk.sequence
    for _, t in walk.terms:
        if ctr not in t.support:
            raise NotCentered(f"term {t!r} does not contain the center {ctr}")
    a = Fraction(0)
    _, t0 = walk.terms[0]
    ds = [pick_generic([(a, shd(t0.point_at(ctr), t0.point_at(seq[0]), params))], [a], params)]
    flags = []
    for i, (_, t) in enumerate(walk.terms):
        pc, p0, p1 = t.point_at(ctr), t.point_at(seq[i]), t.point_at(seq[i + 1])
        cons = [(a, shd(pc, p1, params)), (ds[-1], shd(p0, p1, params))]
        ds.append(pick_generic(cons, [a] + ds, params))
        flags.append(seq[i] < seq[i + 1])
    return a, ds, flags
