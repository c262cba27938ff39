"""Toric-downgrade cross-check.

A divisor over ``P^1`` supported in at most two points ``0`` and ``inf``,
without colors, describes a toric variety for the bigger torus with lattice
``N + Z``.  Its cone is generated by ``(v, 1)`` for vertices ``v`` of
``D_0``, ``(w, -1)`` for vertices ``w`` of ``D_inf`` and ``(sigma, 0)``.  The
usual toric criteria then apply: Q-Gorenstein iff a linear form takes the
value -1 on every primitive extreme ray (such a variety is log terminal),
canonical iff no nonzero lattice point has value > -1, terminal iff the only
lattice points with value >= -1 besides the origin are the ray generators.

This module deliberately shares no code with :mod:`horosing.weight` or
:mod:`horosing.geometry`; it is built on sympy matrices and a box scan.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd, lcm
from functools import reduce

import sympy

from .divisor import ColoredPolyhedralDivisor, support

__all__ = ["eligible", "toric_cone_generators", "toric_verdicts"]


def eligible(d: ColoredPolyhedralDivisor):
    """``(ok, reason)``: can this divisor be checked against the toric model?"""
    if not d.curve.complete or d.curve.genus != 0:
        return False, "curve must be the complete projective line"
    if d.colors:
        return False, "colors are not supported"
    if len(support(d)) > 2:
        return False, "support has more than two points"
    if d.tail.dim != d.rank:
        return False, "tail cone must be full-dimensional"
    return True, None


def _prim(v):
    den = reduce(lcm, (Fraction(x).denominator for x in v), 1)
    ints = [int(Fraction(x) * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints))
    return tuple(x // g for x in ints)


def toric_cone_generators(d: ColoredPolyhedralDivisor) -> list[tuple[int, ...]]:
    supp = support(d)
    labels = supp + [None] * (2 - len(supp))
    gens = set()
    for label, sign in zip(labels, (1, -1)):
        verts = d.coefficients[label].vertices if label is not None else [(0,) * d.rank]
        for v in verts:
            gens.add(_prim(tuple(v) + (sign,)))
    for r in d.tail.generators:
        gens.add(_prim(tuple(r) + (0,)))
    return sorted(gens)


def _facets(gens, dim):
    out = set()
    for sub in combinations(gens, dim - 1):
        m = sympy.Matrix(sub)
        if m.rank() != dim - 1:
            continue
        nvec = m.nullspace()[0]
        vals = [sum(nvec[i] * g[i] for i in range(dim)) for g in gens]
        if all(v >= 0 for v in vals):
            out.add(_prim(list(nvec)))
        elif all(v <= 0 for v in vals):
            out.add(_prim([-x for x in nvec]))
    return sorted(out)


def _dot(a, b):
    return sum(Fraction(x) * Fraction(y) for x, y in zip(a, b))


def toric_verdicts(d: ColoredPolyhedralDivisor) -> dict:
    """Verdicts of the toric model: q_gorenstein, log_terminal, log_canonical, canonical, terminal."""
    ok, reason = eligible(d)
    if not ok:
        raise ValueError(f"not eligible for the toric check: {reason}")
    dim = d.rank + 1
    gens = toric_cone_generators(d)
    if sympy.Matrix(gens).rank() != dim:
        raise ValueError("toric cone is not full-dimensional")
    facets = _facets(gens, dim)
    if sympy.Matrix(facets).rank() != dim:
        raise ValueError("toric cone is not pointed")
    rays = [g for g in gens
            if sympy.Matrix([f for f in facets if _dot(f, g) == 0] or [[0] * dim]).rank() == dim - 1]
    a = sympy.Matrix(rays)
    b = sympy.Matrix([-1] * len(rays))
    if a.rank() != a.row_join(b).rank():
        return {"q_gorenstein": False}
    sol, params = a.gauss_jordan_solve(b)
    m = [Fraction(str(x)) for x in sol.subs({p: 0 for p in params})]
    # {x in cone : m.x >= -1} is conv(0, rays) since m = -1 on every ray
    lows = [min(0, *(r[i] for r in rays)) for i in range(dim)]
    highs = [max(0, *(r[i] for r in rays)) for i in range(dim)]
    canonical = terminal = True
    ray_set = set(rays)
    for x in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        if not any(x) or any(_dot(f, x) < 0 for f in facets):
            continue
        val = _dot(m, x)
        if val > -1:
            canonical = terminal = False
            break
        if val == -1 and x not in ray_set:
            terminal = False
    return {
        "q_gorenstein": True,
        "log_terminal": True,
        "log_canonical": True,
        "canonical": canonical,
        "terminal": terminal,
    }
