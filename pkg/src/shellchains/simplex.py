"""
Normalized closed independent functors over the empty base in ``p_n``.

A :class:`FunctorSimplex` on support ``s`` stores, for every nonempty
``u <= s``, a tuple of circle points indexed by the vertices of ``u`` in
increasing order.  Transition maps are never stored: the map from level
``u`` to level ``v`` sends the ``i``-th point of ``u``'s tuple to the point
of ``v``'s tuple at the same vertex.  Singleton levels hold canonical orbit
representatives; since ``p_n`` is the unique 1-type they carry no type
constraint, and all builders here use the point ``0``.

Localized simplices (see :meth:`FunctorSimplex.localize`) carry a nonempty
``base``: their level keys all contain the base vertices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .circle import (
    ModelParams,
    canonical_rep,
    fmt_point,
    independent,
    pick_generic,
    shd,
    shd_matrix,
)
from .errors import (
    DependentLevel,
    EmptyArc,
    FaceMismatch,
    IncompatibleLevels,
    InconsistentSpec,
    MissingLevel,
    NotInSupport,
)

VERTEX_POINT = Fraction(0)


def _key(vertices) -> tuple:
    return tuple(sorted(int(v) for v in vertices))


def _subsets(vertices, min_size=1):
    vs = _key(vertices)
    for r in range(min_size, len(vs) + 1):
        yield from combinations(vs, r)


@dataclass(frozen=True, eq=False)
class FunctorSimplex:
    support: tuple
    levels: tuple  # sorted ((vertex-key, point-tuple), ...)
    base: tuple = ()
    _lookup: dict = field(default=None, init=False, repr=False)
    _hash: int = field(default=0, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", dict(self.levels))
        object.__setattr__(self, "_hash", hash((self.support, self.levels, self.base)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, FunctorSimplex):
            return NotImplemented
        return self is other or (
            self._hash == other._hash
            and self.support == other.support
            and self.base == other.base
            and self.levels == other.levels
        )

    # --- access -----------------------------------------------------------
    def level(self, u) -> tuple:
        """Point tuple at the object ``u`` (absolute labels, base included)."""
        return self._lookup[_key(u)]

    @property
    def vertices(self) -> tuple:
        return _key(self.base + self.support)

    @property
    def top(self) -> tuple:
        return self._lookup[self.vertices]

    @property
    def dim(self) -> int:
        return len(self.support) - 1

    def point_at(self, vertex: int, u=None) -> Fraction:
        """Point of ``vertex`` inside level ``u`` (top level by default)."""
        u = self.vertices if u is None else _key(u)
        return self._lookup[u][u.index(vertex)]

    @cached_property
    def _sort_key(self):
        return (
            len(self.support),
            self.support,
            self.base,
            tuple(
                (k, tuple((p.numerator, p.denominator) for p in pts))
                for k, pts in self.levels
            ),
        )

    def sort_key(self):
        return self._sort_key

    def __repr__(self):
        sup = ",".join(map(str, self.support))
        pts = ", ".join(fmt_point(p) for p in self.top)
        base = f" | base {self.base}" if self.base else ""
        return f"<{sup}: {pts}{base}>"

    # --- simplex contract -------------------------------------------------
    def face(self, u) -> "FunctorSimplex":
        u = _key(u)
        if not set(u) <= set(self.support):
            raise NotInSupport(f"{u} is not contained in the support {self.support}")
        if not u and not self.base:
            raise NotInSupport("the empty face of an unbased simplex is the base itself")
        keep = set(self.base) | set(u)
        levels = tuple((k, p) for k, p in self.levels if set(k) <= keep)
        return FunctorSimplex(u, levels, self.base)

    def permute(self, sigma) -> "FunctorSimplex":
        """``f o sigma^{-1}``: relabel vertices and transport level tuples."""
        levels = []
        for k, pts in self.levels:
            image = {sigma(v): p for v, p in zip(k, pts)}
            nk = _key(image)
            levels.append((nk, tuple(image[v] for v in nk)))
        return FunctorSimplex(
            sigma.image(self.support), tuple(sorted(levels)), sigma.image(self.base)
        )

    def localize(self, t) -> "FunctorSimplex":
        """``f|_t``: support ``supp(f) - t``, level at ``v`` is this simplex's level at ``t | v``."""
        t = _key(t)
        if not set(t) <= set(self.support):
            raise NotInSupport(f"{t} is not contained in the support {self.support}")
        if not t:
            return self
        new_base = _key(self.base + t)
        levels = tuple((k, p) for k, p in self.levels if set(new_base) <= set(k))
        rest = tuple(v for v in self.support if v not in t)
        return FunctorSimplex(rest, levels, new_base)


def _normalize_levels(support, levels: Mapping, base, params) -> dict:
    out = {}
    for k, pts in levels.items():
        k = _key(k)
        pts = tuple(Fraction(p) % 1 for p in pts)
        if len(k) == 1 and not base:
            pts = (canonical_rep(pts[0], params),)
        out[k] = pts
    return out


def make_simplex(
    support: Iterable[int],
    levels: Mapping,
    params: ModelParams,
    base: Iterable[int] = (),
) -> FunctorSimplex:
    """Validate level data and build a :class:`FunctorSimplex`.

    Raises
    ------
    MissingLevel
        If some object of the power set has no tuple of the right length.
    DependentLevel
        If two points of one level share an orbit.
    IncompatibleLevels
        If a level and the restriction of a level one vertex larger differ in type.
    """
    support = _key(support)
    base = _key(base)
    if len(set(support)) != len(support) or set(support) & set(base):
        raise ValueError(f"bad support {support} / base {base}")
    data = _normalize_levels(support, levels, base, params)
    expected = [_key(base + u) for u in _subsets(support, min_size=0) if base or u]
    missing = [k for k in expected if k not in data]
    if missing:
        raise MissingLevel(f"no level for {missing[0]}")
    extra = set(data) - set(expected)
    if extra:
        raise MissingLevel(f"unexpected level keys {sorted(extra)}")
    for k in expected:
        pts = data[k]
        if len(pts) != len(k):
            raise MissingLevel(f"level {k} has {len(pts)} points")
        if not independent(pts, params):
            raise DependentLevel(f"level {k} has points in a common orbit: {pts}")
    for v in expected:
        if len(v) < 2:
            continue
        for drop in v:
            if drop in base:
                continue
            u = tuple(x for x in v if x != drop)
            if len(u) == 1 and not base:
                continue
            restricted = tuple(data[v][v.index(x)] for x in u)
            # levels are independent here, so residues decide the type
            if shd_matrix(data[u], params) != shd_matrix(restricted, params):
                raise IncompatibleLevels(f"level {u} does not embed elementarily into {v}")
    return FunctorSimplex(support, tuple(sorted((k, data[k]) for k in expected)), base)


def simplex_from_top(
    support: Iterable[int],
    top: Sequence[Fraction],
    params: ModelParams,
    faces: Iterable[FunctorSimplex] = (),
) -> FunctorSimplex:
    """Simplex with the given top tuple; lower levels copied from ``faces`` where supplied.

    Every level not covered by a supplied face is the restriction of ``top``;
    singleton levels are the vertex point.  Two faces prescribing different data
    for the same object raise :class:`FaceMismatch`.
    """
    support = _key(support)
    top = tuple(Fraction(p) for p in top)
    if len(top) != len(support):
        raise MissingLevel("top tuple length differs from support size")
    levels: dict = {}
    for g in faces:
        if not set(g.support) <= set(support) or g.base:
            raise FaceMismatch(f"{g!r} is not a face over support {support}")
        for k, pts in g.levels:
            if k in levels and levels[k] != pts:
                raise FaceMismatch(f"faces disagree on level {k}")
            levels[k] = pts
    for u in _subsets(support):
        if u in levels:
            continue
        if len(u) == 1:
            levels[u] = (VERTEX_POINT,)
        else:
            levels[u] = tuple(top[support.index(v)] for v in u)
    return make_simplex(support, levels, params)


def vertex_simplex(v: int, params: ModelParams) -> FunctorSimplex:
    return make_simplex((v,), {(v,): (VERTEX_POINT,)}, params)


def _as_spec(spec, size: int) -> dict:
    """Map ``(i, j) -> residue`` over positions of a support of the given size."""
    pairs = list(combinations(range(size), 2))
    if isinstance(spec, int):
        spec = (spec,)
    spec = tuple(int(r) for r in spec)
    if len(spec) != len(pairs):
        raise InconsistentSpec(f"need {len(pairs)} residues, got {len(spec)}")
    return dict(zip(pairs, spec))


def spec_consistent(spec, size: int, params: ModelParams) -> bool:
    """Triangle check: ``shd(x,z)`` is ``shd(x,y)+shd(y,z)`` or one more, mod n."""
    n = params.n
    res = _as_spec(spec, size)
    if any(not 0 <= r < n for r in res.values()):
        return False
    for i, j, k in combinations(range(size), 3):
        a, b, c = res[(i, j)], res[(j, k)], res[(i, k)]
        if (c - a - b) % n not in (0, 1):
            return False
    return True


def realize_spec(spec, size: int, params: ModelParams, start=VERTEX_POINT, avoid=()) -> tuple:
    """A tuple with pairwise disjoint orbits whose residue matrix is ``spec``."""
    if not spec_consistent(spec, size, params):
        raise InconsistentSpec(f"residues {spec} violate the composition bounds (n={params.n})")
    res = _as_spec(spec, size)
    pts = [Fraction(start)]
    for j in range(1, size):
        cons = [(pts[i], res[(i, j)]) for i in range(j)]
        try:
            pts.append(pick_generic(cons, list(avoid) + pts, params))
        except EmptyArc as exc:
            raise InconsistentSpec(f"residues {spec} are not jointly realizable") from exc
    return tuple(pts)


def simplex_from_distances(
    support: Iterable[int],
    spec,
    params: ModelParams,
    shared_faces: Iterable[FunctorSimplex] = (),
) -> FunctorSimplex:
    """Build a simplex whose top tuple has the prescribed pairwise residues.

    ``spec`` is the flattened upper triangle of the residue matrix: ``k`` for an
    edge, ``(r01, r02, r12)`` for a triangle, and so on.  Shared faces are reused
    verbatim; each must already have the residues the spec demands.
    """
    support = _key(support)
    shared_faces = list(shared_faces)
    res = _as_spec(spec, len(support))
    if not spec_consistent(spec, len(support), params):
        raise InconsistentSpec(f"residues {spec} violate the composition bounds (n={params.n})")
    for g in shared_faces:
        gs = g.support
        for a, b in combinations(gs, 2):
            ia, ib = support.index(a), support.index(b)
            got = shd(g.point_at(a, (a, b)), g.point_at(b, (a, b)), params)
            if got != res[(ia, ib)]:
                raise FaceMismatch(f"shared face on {gs} has residue {got} on ({a},{b})")
    # reuse a shared face's top literally when there is one, then extend generically
    placed: dict = {}
    if shared_faces:
        first = max(shared_faces, key=lambda g: len(g.support))
        placed = dict(zip(first.support, first.top))
    else:
        placed[support[0]] = VERTEX_POINT
    for v in support:
        if v in placed:
            continue
        iv = support.index(v)
        cons = []
        for u, p in placed.items():
            iu = support.index(u)
            r = res[(iu, iv)] if iu < iv else (-res[(iv, iu)] - 1) % params.n
            cons.append((p, r))
        try:
            placed[v] = pick_generic(cons, list(placed.values()), params)
        except EmptyArc as exc:
            raise InconsistentSpec(f"residues {spec} are not jointly realizable") from exc
    top = tuple(placed[v] for v in support)
    try:
        return simplex_from_top(support, top, params, shared_faces)
    except IncompatibleLevels as exc:
        raise FaceMismatch(str(exc)) from exc


def amalgamate(faces: Sequence[FunctorSimplex], params: ModelParams) -> FunctorSimplex:
    """A simplex on the union of the supports having every given simplex as a face.

    Faces must pairwise agree on their common vertices.  The top tuple starts
    from the first face and each further vertex is placed generically subject to
    the residues prescribed by every face containing it.  Raises
    :class:`FaceMismatch` on disagreeing faces and :class:`EmptyArc` or
    :class:`IncompatibleLevels` when the prescribed types do not fit together.
    """
    faces = list(faces)
    if any(f.base for f in faces):
        raise ValueError("amalgamation is only provided over the empty base")
    for f, g in combinations(faces, 2):
        common = _key(set(f.support) & set(g.support))
        if common and f.face(common) != g.face(common):
            raise FaceMismatch(f"{f!r} and {g!r} disagree on {common}")
    union = _key(set().union(*(f.support for f in faces)))
    for f in faces:
        if f.support == union:
            return f
    literal: dict = {}
    for g in faces:
        for v, p in zip(g.support, g.top):
            literal.setdefault(v, set()).add(p)
    if all(len(ps) == 1 for ps in literal.values()):
        top = {v: next(iter(ps)) for v, ps in literal.items()}
        if independent(list(top.values()), params):
            levels = {}
            for u in _subsets(union):
                owner = next((g for g in faces if set(u) <= set(g.support)), None)
                levels[u] = owner.level(u) if owner is not None else tuple(top[v] for v in u)
            try:
                return make_simplex(union, levels, params)
            except IncompatibleLevels:
                pass
    top = dict(zip(faces[0].support, faces[0].top))
    for v in union:
        if v in top:
            continue
        cons = []
        for g in faces:
            if v in g.support:
                gv = g.point_at(v)
                cons += [(top[u], shd(g.point_at(u), gv, params)) for u in g.support if u in top]
        top[v] = pick_generic(cons, list(top.values()), params)
    levels = {}
    for u in _subsets(union):
        owner = next((g for g in faces if set(u) <= set(g.support)), None)
        levels[u] = owner.level(u) if owner is not None else tuple(top[v] for v in u)
    return make_simplex(union, levels, params)


@lru_cache(maxsize=65536)
def strong_amalgam(f: FunctorSimplex, g: FunctorSimplex, params: ModelParams) -> FunctorSimplex:
    """A simplex on ``supp f | supp g`` whose faces on the two supports are ``f`` and ``g``."""
    return amalgamate([f, g], params)


def extend_vertex(f: FunctorSimplex, v: int, params: ModelParams, residue: int = 0) -> FunctorSimplex:
    """1-amalgamation: extend a 0-simplex to a 1-simplex on ``{u, v}``."""
    (u,) = f.support
    a = VERTEX_POINT
    b = pick_generic([(a, residue)], [a], params)
    pts = {u: a, v: b}
    support = _key((u, v))
    return make_simplex(support, {(u,): f.top, (v,): (VERTEX_POINT,), support: tuple(pts[x] for x in support)}, params)
