"""
Rewriting calculus on 2-chains with a 1-shell boundary.

Two boundary-preserving moves act on chains: the crossing move (CR) trades
two 2-simplices glued along a cancelling edge for the two complementary faces
of a 3-simplex amalgam, and the renaming move (RS) relabels a vertex that
vanishes from a subchain's boundary.  On top of these sit chain-walks (fans
of terms around a center vertex), their reducts, RN/NR classification, a
budgeted minimality check and the reduction of RN chains to standard form.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from .chains import Chain, Permutation, boundary, is_shell, sigma_star, subchain_of
from .circle import ModelParams
from .errors import (
    BudgetExhausted,
    HypothesisFails,
    InvalidSite,
    MixedDimension,
    NotMinimal,
    NotOneShellBoundary,
    NotRN,
    NotVanishing,
    VertexInUse,
)
from .serialize import RewriteTrace
from .simplex import FunctorSimplex, strong_amalgam

DEFAULT_BUDGET = 10_000


class ChainKind(str, enum.Enum):
    RN = "RN"
    NR = "NR"


def _rank_sign(v: int, vertices) -> int:
    return -1 if sorted(vertices).index(v) % 2 else 1


def signed_face(sign: int, b: FunctorSimplex, edge) -> tuple:
    """``(s, face)`` with ``s * face`` the part of ``d(sign * b)`` supported on ``edge``."""
    edge = tuple(sorted(edge))
    (missing,) = [v for v in b.support if v not in edge]
    return sign * _rank_sign(missing, b.support), b.face(edge)


def _fresh(c: Chain) -> int:
    return max(c.support) + 1


def _shell_faces(c: Chain):
    """Vertices and edges of a positively oriented shell boundary ``f12 - f02 + f01``."""
    bd = boundary(c)
    if not is_shell(bd) or bd.dimension != 1:
        raise NotOneShellBoundary("boundary is not a 1-shell")
    v0, v1, v2 = sorted(bd.support)
    faces = {f.support: f for f in bd}
    f01, f02, f12 = faces[(v0, v1)], faces[(v0, v2)], faces[(v1, v2)]
    return (v0, v1, v2), f01, f02, f12, bd[f12]


def _require_shell(c: Chain):
    bd = boundary(c)
    try:
        ok = is_shell(bd) and bd.dimension == 1
    except MixedDimension:
        ok = False
    if not ok:
        raise NotOneShellBoundary("boundary is not a 1-shell")


# --- CR --------------------------------------------------------------------

@dataclass(frozen=True)
class CrSite:
    alpha1: FunctorSimplex
    eps1: int
    alpha2: FunctorSimplex
    eps2: int
    k1: int
    k2: int
    l1: int
    l2: int

    def to_json(self) -> dict:
        return {
            "eps1": self.eps1,
            "eps2": self.eps2,
            "k1": self.k1,
            "k2": self.k2,
            "l1": self.l1,
            "l2": self.l2,
        }


def cr_site(first: tuple, second: tuple) -> Optional[CrSite]:
    """The CR site on two signed 2-simplices, or ``None`` if they do not form one."""
    (e1, a1), (e2, a2) = first, second
    if a1.sort_key() > a2.sort_key():
        (e1, a1), (e2, a2) = (e2, a2), (e1, a1)
    if len(a1.support) != 3 or len(a2.support) != 3 or a1 == a2:
        return None
    common = tuple(sorted(set(a1.support) & set(a2.support)))
    if len(common) != 2:
        return None
    s1, g1 = signed_face(e1, a1, common)
    s2, g2 = signed_face(e2, a2, common)
    if g1 != g2 or s1 + s2 != 0:
        return None
    (k1,) = set(a1.support) - set(common)
    (k2,) = set(a2.support) - set(common)
    return CrSite(a1, e1, a2, e2, k1, k2, common[0], common[1])


def find_cr_sites(c: Chain) -> list:
    """All CR sites among pairs of distinct terms, in canonical order."""
    if not c:
        return []
    if c.dimension != 2:
        raise MixedDimension("CR sites live in 2-chains")
    items = c.sorted_items()
    out = []
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            (a, m), (b, k) = items[i], items[j]
            site = cr_site((1 if m > 0 else -1, a), (1 if k > 0 else -1, b))
            if site is not None:
                out.append(site)
    return out


def cr_products(site: CrSite, params: ModelParams) -> Chain:
    """``w'`` for a site, from the sign rule forced by ``dd(mu) = 0``."""
    mu = strong_amalgam(site.alpha1, site.alpha2, params)
    V = (site.k1, site.k2, site.l1, site.l2)
    sigma = site.eps1 * _rank_sign(site.k2, V)
    beta1 = mu.face((site.k1, site.k2, site.l1))
    beta2 = mu.face((site.k1, site.k2, site.l2))
    return Chain(
        [
            (beta1, -sigma * _rank_sign(site.l2, V)),
            (beta2, -sigma * _rank_sign(site.l1, V)),
        ]
    )


def apply_cr(c: Chain, site: CrSite, params: ModelParams, trace: RewriteTrace = None) -> Chain:
    w = Chain([(site.alpha1, site.eps1), (site.alpha2, site.eps2)])
    if not subchain_of(w, c):
        raise InvalidSite("the site's terms are not a subsummand of the chain")
    if cr_site((site.eps1, site.alpha1), (site.eps2, site.alpha2)) != site:
        raise InvalidSite("the two terms do not cancel along a shared edge")
    out = c - w + cr_products(site, params)
    if trace is not None:
        trace.record("CR", site.to_json(), c, out)
    return out


# --- RS --------------------------------------------------------------------

def apply_rs(c: Chain, d: Chain, j: int, k: int, trace: RewriteTrace = None) -> Chain:
    if not subchain_of(d, c):
        raise InvalidSite("d is not a subsummand of the chain")
    if j not in d.support or j in boundary(d).support:
        raise NotVanishing(f"vertex {j} is not a vanishing support of the subchain")
    if k in c.support:
        raise VertexInUse(f"vertex {k} already occurs in the chain")
    out = c - d + sigma_star(Permutation.transposition(j, k), d)
    if trace is not None:
        trace.record("RS", {"j": j, "k": k, "terms": len(d)}, c, out)
    return out


# --- balanced sub-selections ---------------------------------------------

def _balanced(items, contributions, limit=None) -> Iterator[dict]:
    """Nonzero ``x`` with ``0 <= x_t <= cap_t`` and ``sum_t x_t * contrib_t = 0``.

    ``items`` lists capacities, ``contributions[t]`` maps nodes to per-unit
    amounts.  Yields minimal solutions (never extends a balanced selection).
    """
    caps = list(items)
    by_node: dict = {}
    for t, contrib in enumerate(contributions):
        for node, amount in contrib.items():
            by_node.setdefault(node, []).append((t, amount))
    found = 0
    seen: set = set()
    for seed in range(len(caps)):
        x = {seed: 1}
        imbalance = {nd: a for nd, a in contributions[seed].items() if a}
        stack = [(x, imbalance)]
        while stack:
            x, imbalance = stack.pop()
            key = frozenset(x.items())
            if key in seen:
                continue
            seen.add(key)
            if not imbalance:
                yield dict(x)
                found += 1
                if limit is not None and found >= limit:
                    return
                continue
            node = min(imbalance, key=repr)
            need = imbalance[node]
            for t, amount in by_node.get(node, ()):
                if t < seed or x.get(t, 0) >= caps[t] or amount * need >= 0:
                    continue
                nx = dict(x)
                nx[t] = nx.get(t, 0) + 1
                ni = dict(imbalance)
                for nd, a in contributions[t].items():
                    v = ni.get(nd, 0) + a
                    if v:
                        ni[nd] = v
                    else:
                        ni.pop(nd, None)
                stack.append((nx, ni))


def _face_contributions(f: FunctorSimplex, sign: int, only_vertex=None) -> dict:
    out: dict = {}
    s = f.support
    for i in range(len(s)):
        edge = s[:i] + s[i + 1:]
        if only_vertex is not None and only_vertex not in edge:
            continue
        face = f.face(edge)
        out[face] = out.get(face, 0) + sign * (-1 if i % 2 else 1)
    return {k: v for k, v in out.items() if v}


def vanishing_subsummands(c: Chain, j: int, limit=None) -> Iterator[Chain]:
    """Subsummands of ``c`` in which ``j`` occurs but vanishes from the boundary."""
    items = [(f, k) for f, k in c.sorted_items() if j in f.support]
    contribs = [_face_contributions(f, 1 if k > 0 else -1, only_vertex=j) for f, k in items]
    for x in _balanced([abs(k) for _, k in items], contribs, limit):
        yield Chain((items[t][0], (1 if items[t][1] > 0 else -1) * m) for t, m in x.items())


def find_vanishing(c: Chain):
    """``(j, d)`` for the first vertex ``j`` with a vanishing subsummand ``d``, else ``None``."""
    for j in sorted(c.support):
        for d in vanishing_subsummands(c, j, limit=1):
            return j, d
    return None


def zero_boundary_subsummand(c: Chain) -> Optional[Chain]:
    items = c.sorted_items()
    contribs = [_face_contributions(f, 1 if k > 0 else -1) for f, k in items]
    for x in _balanced([abs(k) for _, k in items], contribs, limit=1):
        return Chain((items[t][0], (1 if items[t][1] > 0 else -1) * m) for t, m in x.items())
    return None


def classify(c: Chain) -> ChainKind:
    _require_shell(c)
    return ChainKind.RN if find_vanishing(c) is not None else ChainKind.NR


# --- chain-walks ---------------------------------------------------------

@dataclass(frozen=True)
class ChainWalk:
    """An ordered fan of signed 2-simplices around ``center`` inside ``chain``."""

    chain: Chain
    center: int
    start: tuple  # (sign, 1-simplex)
    end: tuple
    terms: tuple  # ((sign, 2-simplex), ...)
    sequence: tuple

    @property
    def as_chain(self) -> Chain:
        return Chain((f, s) for s, f in self.terms)

    @property
    def length(self) -> int:
        return len(self.terms)

    def is_valid(self) -> bool:
        return _walk_ok(self)


def _other(edge: FunctorSimplex, center: int) -> int:
    (k,) = [v for v in edge.support if v != center]
    return k


def _walk_ok(w: ChainWalk) -> bool:
    if not w.terms or not subchain_of(w.as_chain, w.chain):
        return False
    seq = w.sequence
    if len(seq) != len(w.terms) + 1:
        return False
    if seq[0] != _other(w.start[1], w.center) or seq[-1] != _other(w.end[1], w.center):
        return False
    for i, (s, b) in enumerate(w.terms):
        if set(b.support) != {w.center, seq[i], seq[i + 1]}:
            return False
    s0, b0 = w.terms[0]
    if signed_face(s0, b0, (w.center, seq[0])) != w.start:
        return False
    sm, bm = w.terms[-1]
    if signed_face(sm, bm, (w.center, seq[-1])) != w.end:
        return False
    for i in range(len(w.terms) - 1):
        e = (w.center, seq[i + 1])
        a, fa = signed_face(*w.terms[i], e)
        b, fb = signed_face(*w.terms[i + 1], e)
        if fa != fb or a + b != 0:
            return False
    return True


def _as_signed_edge(x) -> tuple:
    if isinstance(x, Chain):
        ((f, k),) = x.items()
        return (k, f)
    if isinstance(x, tuple):
        return x
    return (1, x)


def extract_chain_walk(
    c: Chain,
    start,
    end,
    center: int = None,
    must_end_with: tuple = None,
    node_limit: int = 200_000,
) -> ChainWalk:
    """A maximal chain-walk in ``c`` from the signed edge ``start`` to ``end``.

    The search is exhaustive depth-first (bounded by ``node_limit`` expanded
    nodes); among longest walks the one with the smallest term encoding wins.
    """
    _require_shell(c)
    start, end = _as_signed_edge(start), _as_signed_edge(end)
    if center is None:
        (center,) = set(start[1].support) & set(end[1].support)
    k0 = _other(start[1], center)
    units = {f: abs(k) for f, k in c.items() if center in f.support}
    signs = {f: (1 if k > 0 else -1) for f, k in c.items()}
    incident: dict = {}
    for f in sorted(units, key=lambda f: f.sort_key()):
        for v in f.support:
            if v != center:
                incident.setdefault(f.face(tuple(sorted((center, v)))), []).append(f)

    best = {"terms": None, "seq": None, "key": None}
    nodes = [0]

    def consider(terms, seq):
        if must_end_with is not None and terms[-1] != must_end_with:
            return
        key = (-len(terms), [(t[1].sort_key(), t[0]) for t in terms])
        if best["key"] is None or key < best["key"]:
            best.update(terms=list(terms), seq=list(seq), key=key)

    def dfs(need, k, terms, seq):
        # ``need`` is the signed edge the next term must produce on {center, k}
        nodes[0] += 1
        if nodes[0] > node_limit:
            return
        for f in incident.get(need[1], ()):
            if units[f] == 0 or k not in f.support:
                continue
            sgn = signs[f]
            if signed_face(sgn, f, (center, k)) != need:
                continue
            (nk,) = [v for v in f.support if v not in (center, k)]
            out = signed_face(sgn, f, (center, nk))
            units[f] -= 1
            terms.append((sgn, f))
            seq.append(nk)
            if out == end:
                consider(terms, seq)
            dfs((-out[0], out[1]), nk, terms, seq)
            terms.pop()
            seq.pop()
            units[f] += 1

    dfs(start, k0, [], [k0])
    if best["terms"] is None:
        raise NotOneShellBoundary("no chain-walk joins the given edges")
    return ChainWalk(c, center, start, end, tuple(best["terms"]), tuple(best["seq"]))


def _swap_in(walk: ChainWalk, lo: int, hi: int, chain: Chain, term: tuple) -> ChainWalk:
    terms = walk.terms[:lo] + (term,) + walk.terms[hi + 1:]
    seq = walk.sequence[: lo + 1] + walk.sequence[hi + 1:]
    return ChainWalk(chain, walk.center, walk.start, walk.end, terms, seq)


def _merge_pair(walk: ChainWalk, i: int, params: ModelParams, trace) -> ChainWalk:
    """CR on walk terms ``i`` and ``i+1``; the product through the center stays in the walk."""
    site = cr_site(walk.terms[i], walk.terms[i + 1])
    if site is None:
        raise HypothesisFails("adjacent walk terms do not form a CR site")
    products = cr_products(site, params)
    chain = apply_cr(walk.chain, site, params, trace)
    ((f, k),) = [(f, k) for f, k in products.items() if walk.center in f.support]
    return _swap_in(walk, i, i + 1, chain, (k, f))


def reduct_allowed(seq, i: int, j: int) -> bool:
    """Whether terms ``i..j`` of a walk with label sequence ``seq`` may be collapsed."""
    right = all(seq[t] != seq[j + 1] for t in range(i, j + 1))
    left = all(seq[t] != seq[i] for t in range(i + 1, j + 2))
    return right or left


def reduct(walk: ChainWalk, section: tuple, params: ModelParams, trace: RewriteTrace = None) -> ChainWalk:
    """Collapse terms ``section[0]..section[1]`` (inclusive) into one term by repeated CR."""
    i, j = section
    if not 0 <= i <= j < walk.length:
        raise HypothesisFails(f"section {section} outside the walk")
    seq = walk.sequence
    right = all(seq[t] != seq[j + 1] for t in range(i, j + 1))
    left = all(seq[t] != seq[i] for t in range(i + 1, j + 2))
    if not (right or left):
        raise HypothesisFails(f"labels repeat inside section {section} of {seq}")
    while j > i:
        walk = _merge_pair(walk, j - 1 if right else i, params, trace)
        j -= 1
    if not walk.is_valid():
        raise HypothesisFails("collapsed walk collided with other terms")
    return walk


def plan_reduction(seq, target) -> list:
    """Shortest list of sections turning label sequence ``seq`` into ``target``."""
    seq, target = tuple(seq), tuple(target)
    prev = {seq: None}
    queue = deque([seq])
    while queue:
        s = queue.popleft()
        if s == target:
            moves = []
            while prev[s] is not None:
                s, move = prev[s]
                moves.append(move)
            return moves[::-1]
        m = len(s) - 1
        for i in range(m):
            for j in range(i + 1, m):
                if reduct_allowed(s, i, j):
                    t = s[: i + 1] + s[j + 1:]
                    if t not in prev:
                        prev[t] = (s, (i, j))
                        queue.append(t)
    raise HypothesisFails(f"{seq} does not reduce to {target}")


# --- minimality ----------------------------------------------------------

def _relabel_interior(c: Chain) -> Chain:
    fixed = boundary(c).support
    top = max(fixed) if fixed else -1
    interior = sorted(v for v in c.support if v not in fixed)
    mapping = {v: top + 1 + i for i, v in enumerate(interior)}
    sigma = Permutation.from_mapping(
        {**mapping, **_complete_cycle(mapping)}
    ) if mapping else Permutation.identity()
    return sigma_star(sigma, c) if mapping else c


def _complete_cycle(mapping: dict) -> dict:
    """Extend an injective partial map to a bijection on ``domain | image``."""
    free_src = sorted(set(mapping.values()) - set(mapping))
    free_dst = sorted(set(mapping) - set(mapping.values()))
    return dict(zip(free_src, free_dst))


def equivalence_neighbours(c: Chain, params: ModelParams, rs_limit: int = 16) -> Iterator[Chain]:
    for site in find_cr_sites(c):
        yield apply_cr(c, site, params)
    k = _fresh(c)
    for j in sorted(c.support):
        for d in vanishing_subsummands(c, j, limit=rs_limit):
            yield apply_rs(c, d, j, k)


def is_minimal(c: Chain, params: ModelParams, budget: int = DEFAULT_BUDGET) -> bool:
    """Budgeted search of the CR/RS orbit for a length drop or a closed subsummand.

    Returns ``True`` once the explored orbit is closed, ``False`` on a witness,
    and raises :class:`BudgetExhausted` when ``budget`` states did not settle it.
    """
    _require_shell(c)
    if find_vanishing(c) is None:
        return True
    length = c.length
    first = _relabel_interior(c)
    seen = {first}
    queue = deque([first])
    while queue:
        state = queue.popleft()
        if state.length < length or zero_boundary_subsummand(state) is not None:
            return False
        for nxt in equivalence_neighbours(state, params):
            nxt = _relabel_interior(nxt)
            if nxt not in seen:
                if len(seen) >= budget:
                    raise BudgetExhausted(f"{budget} states explored without a verdict")
                seen.add(nxt)
                queue.append(nxt)
    return True


# --- standard form -------------------------------------------------------

def _recentre(chain, start, end, center, avoid_edge, params, trace, keep=None):
    """Grow a maximal walk around ``center`` until it is the whole chain."""
    for _ in range(4 * chain.length + 8):
        walk = extract_chain_walk(chain, start, end, center, must_end_with=keep)
        wc = walk.as_chain
        if wc == chain:
            return walk
        gamma = chain - wc
        if center in gamma.support:
            chain = apply_rs(chain, gamma, center, _fresh(chain), trace)
            continue
        outer = Chain(
            (f, k) for f, k in boundary(wc).items() if center not in f.support
        ) - Chain.unit(avoid_edge)
        if not outer:
            raise NotMinimal("a proper subchain is closed")
        site = None
        for e, s in outer.sorted_items():
            sgn = 1 if s > 0 else -1
            outs = [
                t for t in walk.terms
                if t != keep and set(e.support) <= set(t[1].support)
                and signed_face(*t, e.support) == (sgn, e)
            ]
            ins = [
                (1 if k > 0 else -1, f) for f, k in gamma.sorted_items()
                if set(e.support) <= set(f.support)
                and signed_face(1 if k > 0 else -1, f, e.support) == (-sgn, e)
            ]
            if outs and ins:
                site = cr_site(outs[0], ins[0])
                break
        if site is None:
            raise NotMinimal("no crossing move extends the walk")
        chain = apply_cr(chain, site, params, trace)
    raise NotMinimal("walk extension did not terminate")


def _standard_ok(walk: ChainWalk, verts, f02, f12) -> bool:
    v0, v1, v2 = verts
    if walk.as_chain != walk.chain or walk.length < 3 or walk.center != v0:
        return False
    s0, _ = walk.terms[0]
    sl, last = walk.terms[-1]
    return (
        walk.is_valid()
        and s0 == 1
        and sl == 1
        and last.support == (v0, v1, v2)
        and last.face((v1, v2)) == f12
        and last.face((v0, v2)) == f02
    )


def _standard_candidate(c: Chain, verts, f01, f02, f12) -> Optional[ChainWalk]:
    v0, v1, v2 = verts
    for f, k in c.sorted_items():
        if k > 0 and f.support == (v0, v1, v2) and f.face((v1, v2)) == f12 and f.face((v0, v2)) == f02:
            try:
                w = extract_chain_walk(c, (1, f01), (-1, f02), v0, must_end_with=(1, f))
            except NotOneShellBoundary:
                continue
            if _standard_ok(w, verts, f02, f12):
                return w
    return None


def standard_walk(
    c: Chain,
    params: ModelParams,
    budget: int = 200,
    trace: RewriteTrace = None,
) -> ChainWalk:
    """An equivalent chain in standard representation, as a chain-walk around the first vertex.

    The minimality precondition is checked with a small budget; an exhausted
    budget is not treated as failure, the output postconditions are checked
    instead.
    """
    verts, f01, f02, f12, orientation = _shell_faces(c)
    if orientation < 0:
        raise NotOneShellBoundary("shell is negatively oriented; standardize the negated chain")
    if classify(c) is ChainKind.NR:
        raise NotRN("no subsummand has a vanishing support")
    try:
        if not is_minimal(c, params, budget):
            raise NotMinimal("the chain is equivalent to a shorter or reducible one")
    except BudgetExhausted:
        pass
    done = _standard_candidate(c, verts, f01, f02, f12)
    if done is not None:
        return done
    v0, v1, v2 = verts
    chain = c
    # inflate the support, then centre at v2
    if len(chain.support) == 3:
        j, d = find_vanishing(chain)
        chain = apply_rs(chain, d, j, _fresh(chain), trace)
    walk = _recentre(chain, (-1, f02), (1, f12), v2, f01, params, trace)
    # collapse the walk around v2 to a single term on {v0, v1, v2}
    for section in plan_reduction(walk.sequence, (v0, v1)):
        walk = reduct(walk, section, params, trace)
    ((sign, c_term),) = walk.terms
    if sign != 1:
        raise NotMinimal("collapsed term has the wrong orientation")
    walk = _recentre(walk.chain, (1, f01), (-1, f02), v0, f12, params, trace, keep=(1, c_term))
    if not _standard_ok(walk, verts, f02, f12):
        raise NotMinimal("standard-form postconditions fail")
    if boundary(walk.chain) != boundary(c) or walk.chain.length != c.length:
        raise NotMinimal("reduction changed the boundary or the length")
    return walk


def to_standard_rn(c: Chain, params: ModelParams, budget: int = 200, trace: RewriteTrace = None) -> Chain:
    return standard_walk(c, params, budget, trace).chain


def is_standard(c: Chain) -> bool:
    try:
        verts, f01, f02, f12, orientation = _shell_faces(c)
    except NotOneShellBoundary:
        return False
    return orientation > 0 and _standard_candidate(c, verts, f01, f02, f12) is not None
