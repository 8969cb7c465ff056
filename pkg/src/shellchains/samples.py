"""
Small reference chains used by the tests, demos and CLI examples.

All triangles here live on one open ``1/n`` arc, so every pairwise residue is
0 and any choice of face data with distinct points is type-compatible.
"""
from __future__ import annotations

from fractions import Fraction

from .chains import Chain
from .circle import ModelParams
from .simplex import FunctorSimplex, simplex_from_distances, simplex_from_top


def _arc_point(i: int, params: ModelParams) -> Fraction:
    """Distinct points inside ``(0, 1/n)``, none in the orbit of another."""
    return Fraction(1, params.n) * Fraction(2 * i + 1, 2 * i + 3) / 2


def _edge(support, i: int, params: ModelParams) -> FunctorSimplex:
    return simplex_from_top(support, (0, _arc_point(i, params)), params)


def _triangle(faces, params: ModelParams, slot: int = 0) -> FunctorSimplex:
    # top tuple of type (0, 0, 0); the top level is free as long as it is generic
    top = (0, Fraction(1, 3 * params.n) + Fraction(slot, 97 * params.n), Fraction(2, 3 * params.n))
    return simplex_from_top((0, 1, 2), top, params, faces)


def tetrahedron_faces(params: ModelParams) -> list:
    """``[f0, f1, f2, f3]``, ``fi`` the face of one 3-simplex on ``{0,1,2,3}`` missing ``i``."""
    F = simplex_from_distances((0, 1, 2, 3), (1, 2, 3, 0, 1, 1), params) if params.n > 3 else (
        simplex_from_distances((0, 1, 2, 3), (0, 0, 0, 0, 0, 0), params)
    )
    return [F.face(tuple(v for v in range(4) if v != i)) for i in range(4)]


def example_proper(params: ModelParams) -> tuple:
    """``(f0 - f1 + f2, f3)``: a length-3 chain and the single simplex it reduces to."""
    f = tetrahedron_faces(params)
    return Chain([(f[0], 1), (f[1], -1), (f[2], 1)]), f[3]


def nr_five_term(params: ModelParams) -> Chain:
    """``a1 + a2 + a3 - a4 - a5`` on ``{0,1,2}`` with the face pattern

    ``a2, a4`` share the ``{1,2}``-face, ``a3, a5`` too; ``a1, a5`` and ``a3, a4``
    share ``{0,2}``-faces; ``a1, a4`` and ``a2, a5`` share ``{0,1}``-faces.
    """
    P = params
    F1, F2, F3 = (_edge((1, 2), i, P) for i in range(3))
    G1, G2, G3 = (_edge((0, 2), i, P) for i in range(3, 6))
    H1, H2, H3 = (_edge((0, 1), i, P) for i in range(6, 9))
    a1 = _triangle([F1, G1, H1], P)
    a2 = _triangle([F2, G2, H2], P)
    a3 = _triangle([F3, G3, H3], P)
    a4 = _triangle([F2, G3, H1], P)
    a5 = _triangle([F3, G1, H2], P)
    return Chain([(a1, 1), (a2, 1), (a3, 1), (a4, -1), (a5, -1)])


def off_centre_chain(params: ModelParams) -> tuple:
    """``(c0 + c1 - c2, c0)`` where the whole chain is a walk around 1, not around 0.

    ``d c0 = g12 - f02 + f01``, ``d c1 = f12 - g02 + g01``, ``d c2 = g12 - g02 + g01``.
    """
    P = params
    f12, f02, f01 = _edge((1, 2), 0, P), _edge((0, 2), 1, P), _edge((0, 1), 2, P)
    g12, g02, g01 = _edge((1, 2), 3, P), _edge((0, 2), 4, P), _edge((0, 1), 5, P)
    c0 = _triangle([g12, f02, f01], P)
    c1 = _triangle([f12, g02, g01], P)
    c2 = _triangle([g12, g02, g01], P)
    return Chain([(c0, 1), (c1, 1), (c2, -1)]), c0
