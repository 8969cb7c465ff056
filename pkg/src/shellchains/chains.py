"""
Integer chains over an arbitrary simplex type.

A simplex is any hashable value providing

* ``support``: strictly increasing tuple of vertex labels,
* ``face(u)``: restriction to a nonempty subset ``u`` of the support,
* ``permute(sigma)``: relabelling through a :class:`Permutation`,
* ``localize(t)``: localization at a subset ``t`` of the support,
* ``sort_key()``: a totally ordered key used for canonical term order.

Chains are immutable and always in standard form: distinct simplices with
nonzero integer coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping, Protocol

from .errors import MixedDimension


class Simplex(Protocol, Hashable):
    support: tuple

    def face(self, u) -> "Simplex": ...

    def permute(self, sigma: "Permutation") -> "Simplex": ...

    def localize(self, t) -> "Simplex": ...

    def sort_key(self): ...


class Chain(Mapping):
    """A finite formal sum ``sum n_i f_i`` with distinct ``f_i`` and ``n_i != 0``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for simplex, coeff in items:
            if coeff:
                acc[simplex] = acc.get(simplex, 0) + int(coeff)
        self._terms = {f: c for f, c in acc.items() if c}
        self._hash = None

    @classmethod
    def unit(cls, simplex, coeff: int = 1) -> "Chain":
        return cls([(simplex, coeff)])

    @classmethod
    def zero(cls) -> "Chain":
        return cls()

    # Mapping protocol
    def __getitem__(self, simplex):
        return self._terms[simplex]

    def __iter__(self) -> Iterator:
        return iter(self.sorted_simplices())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Chain):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # group structure
    def __add__(self, other: "Chain") -> "Chain":
        return Chain(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "Chain":
        return Chain((f, -c) for f, c in self._terms.items())

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __mul__(self, k: int) -> "Chain":
        return Chain((f, k * c) for f, c in self._terms.items())

    __rmul__ = __mul__

    def __repr__(self):
        parts = [f"{c:+d}*{f!r}" for f, c in self.sorted_items()]
        return "Chain(" + " ".join(parts) + ")"

    # inspection
    def sorted_simplices(self) -> list:
        return sorted(self._terms, key=lambda f: f.sort_key())

    def sorted_items(self) -> list:
        return [(f, self._terms[f]) for f in self.sorted_simplices()]

    @property
    def length(self) -> int:
        """``|c| = sum |n_i|``."""
        return sum(abs(c) for c in self._terms.values())

    @property
    def support(self) -> frozenset:
        """Union of the supports of all terms (a set of vertex labels)."""
        out: set = set()
        for f in self._terms:
            out.update(f.support)
        return frozenset(out)

    @property
    def dimension(self):
        """Common simplex dimension, ``None`` for the zero chain."""
        sizes = {len(f.support) for f in self._terms}
        if not sizes:
            return None
        if len(sizes) > 1:
            raise MixedDimension(f"chain mixes support sizes {sorted(sizes)}")
        return sizes.pop() - 1

    def restrict_to_support(self, vertices) -> "Chain":
        """The subchain ``c^{j0..jk}`` of terms whose support is exactly ``vertices``."""
        target = tuple(sorted(vertices))
        return Chain((f, c) for f, c in self._terms.items() if f.support == target)

    def units(self) -> list:
        """Terms split into unit multiples, as ``(sign, simplex)`` pairs in canonical order."""
        out = []
        for f, c in self.sorted_items():
            sign = 1 if c > 0 else -1
            out.extend([(sign, f)] * abs(c))
        return out


def boundary(c: Chain) -> Chain:
    """Alternating face sum ``sum_i (-1)^i d^i``, extended linearly."""
    dim = c.dimension
    if dim is None or dim == 0:
        return Chain()
    out = []
    for f, coeff in c.items():
        s = f.support
        for i in range(len(s)):
            out.append((f.face(s[:i] + s[i + 1:]), coeff if i % 2 == 0 else -coeff))
    return Chain(out)


def is_cycle(c: Chain) -> bool:
    return not boundary(c)


def is_shell(c: Chain) -> bool:
    """Whether ``c = +-sum_i (-1)^i f_i`` with ``d^i f_j = d^(j-1) f_i`` for ``i < j``."""
    if not c:
        return False
    try:
        dim = c.dimension
    except MixedDimension:
        return False
    if len(c) != dim + 2 or any(abs(k) != 1 for k in c.values()):
        return False
    full = sorted(c.support)
    if len(full) != dim + 2:
        return False
    ordered = [None] * (dim + 2)
    for f in c:
        missing = set(full) - set(f.support)
        if len(missing) != 1:
            return False
        i = full.index(missing.pop())
        if ordered[i] is not None:
            return False
        ordered[i] = f
    signs = {c[f] * (-1) ** i for i, f in enumerate(ordered)}
    if len(signs) != 1:
        return False
    if dim == 0:
        return True
    for i, j in combinations(range(dim + 2), 2):
        common = tuple(v for v in full if v not in (full[i], full[j]))
        if ordered[j].face(common) != ordered[i].face(common):
            return False
    return True


@dataclass(frozen=True)
class Permutation:
    """Finitely supported bijection of the naturals, stored as its moved pairs."""

    moved: tuple = ()

    def __post_init__(self):
        pairs = tuple(sorted((int(a), int(b)) for a, b in self.moved if a != b))
        src = [a for a, _ in pairs]
        dst = sorted(b for _, b in pairs)
        if len(set(src)) != len(src) or sorted(src) != dst:
            raise ValueError(f"not a bijection on its moved set: {self.moved!r}")
        object.__setattr__(self, "moved", pairs)

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> "Permutation":
        return cls(tuple(mapping.items()))

    @classmethod
    def transposition(cls, a: int, b: int) -> "Permutation":
        return cls(((a, b), (b, a)))

    @classmethod
    def identity(cls) -> "Permutation":
        return cls()

    def __call__(self, x: int) -> int:
        for a, b in self.moved:
            if a == x:
                return b
        return x

    def inverse(self) -> "Permutation":
        return Permutation(tuple((b, a) for a, b in self.moved))

    def image(self, vertices: Iterable[int]) -> tuple:
        return tuple(sorted(self(v) for v in vertices))

    def sign_on(self, support: tuple) -> int:
        """Sign of the permutation of positions induced on a sorted support."""
        target = self.image(support)
        perm = [target.index(self(v)) for v in support]
        inversions = sum(
            1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
        )
        return -1 if inversions % 2 else 1


def sigma_star(sigma: Permutation, c: Chain) -> Chain:
    """Relabel every term through ``sigma`` and multiply by the induced sign."""
    return Chain((f.permute(sigma), coeff * sigma.sign_on(f.support)) for f, coeff in c.items())


def subchain_of(d: Chain, c: Chain) -> bool:
    """``d`` is a subsummand of ``c``: same signs, no larger magnitudes."""
    for f, m in d.items():
        n = c.get(f, 0)
        if m * n <= 0 or abs(m) > abs(n):
            return False
    return True


def replace_subsummand(c: Chain, d: Chain, d_new: Chain) -> Chain:
    return c - d + d_new


def localize(f, t):
    """``f|_t``: the simplex on ``supp(f) - t`` whose level at ``v`` is ``f``'s level at ``t | v``."""
    return f.localize(t)


def sub_selections(c: Chain, terms=None) -> Iterator[Chain]:
    """Every nonzero subsummand of ``c`` (optionally restricted to the given simplices)."""
    items = [(f, c[f]) for f in (terms if terms is not None else c.sorted_simplices())]

    def rec(i):
        if i == len(items):
            yield []
            return
        f, n = items[i]
        sign = 1 if n > 0 else -1
        for rest in rec(i + 1):
            for m in range(abs(n) + 1):
                yield ([(f, sign * m)] if m else []) + rest

    for sel in rec(0):
        if sel:
            yield Chain(sel)


@dataclass(frozen=True)
class PrimitiveCategory:
    """A nonempty downward-closed family of finite vertex sets."""

    objects: frozenset

    def __post_init__(self):
        objs = frozenset(frozenset(u) for u in self.objects)
        if not objs:
            raise ValueError("a primitive category is nonempty")
        for v in objs:
            for r in range(len(v)):
                for u in combinations(sorted(v), r):
                    if frozenset(u) not in objs:
                        raise ValueError(f"not downward closed: {sorted(u)} below {sorted(v)}")
        object.__setattr__(self, "objects", objs)

    @classmethod
    def power_set(cls, s: Iterable[int]) -> "PrimitiveCategory":
        s = sorted(s)
        return cls(frozenset(frozenset(u) for r in range(len(s) + 1) for u in combinations(s, r)))

    def __contains__(self, u) -> bool:
        return frozenset(u) in self.objects

    def avoiding(self, t) -> "PrimitiveCategory":
        """``X_t``: objects disjoint from ``t``."""
        t = frozenset(t)
        return PrimitiveCategory(frozenset(k for k in self.objects if not (k & t)))

    def localized(self, t) -> "PrimitiveCategory":
        """``X|_t``: objects ``k`` disjoint from ``t`` with ``t | k`` an object."""
        t = frozenset(t)
        return PrimitiveCategory(
            frozenset(k for k in self.objects if not (k & t) and (k | t) in self.objects)
        )

    def __add__(self, other: "PrimitiveCategory") -> "PrimitiveCategory":
        return PrimitiveCategory(frozenset(a | b for a in self.objects for b in other.objects))

    def splits_at(self, t) -> bool:
        return self.avoiding(t) == self.localized(t)
