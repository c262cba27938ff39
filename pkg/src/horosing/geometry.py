"""Exact rational lattice and convex geometry.

Everything here works over :class:`fractions.Fraction`; there is no floating
point anywhere.  Rational vectors are tuples of ``Fraction`` and lattice
vectors are tuples of ``int``.

Cones are stored by generators.  Their H-description (span equations plus
facet normals) is derived on demand by enumerating hyperplanes spanned by
generators, which is fine for the small ranks (<= 6) this package targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations

from . import _linalg as la
from .errors import NotPointed, RankMismatch, UnboundedRegion, ZeroVector

__all__ = [
    "as_rational",
    "as_vector",
    "primitive_vector",
    "kappa",
    "is_integral",
    "extreme_rays",
    "Cone",
    "Polyhedron",
    "Interval",
    "minkowski_sum",
    "ray_hits",
    "lattice_points",
]


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def as_vector(v) -> tuple[Fraction, ...]:
    return tuple(as_rational(x) for x in v)


def primitive_vector(v) -> tuple[int, ...]:
    """The integral vector with coprime entries on the ray through ``v``.

    >>> primitive_vector([Fraction(-3, 2), Fraction(9, 4)])
    (-2, 3)
    """
    q = as_vector(v)
    if not any(q):
        raise ZeroVector("the zero vector spans no ray")
    den = kappa(q)
    ints = [int(x * den) for x in q]
    g = reduce(math.gcd, (abs(x) for x in ints))
    return tuple(x // g for x in ints)


def kappa(v) -> int:
    """Smallest positive integer ``l`` with ``l * v`` integral."""
    return reduce(math.lcm, (as_rational(x).denominator for x in v), 1)


def is_integral(v) -> bool:
    return kappa(v) == 1


def _normalize_normal(a):
    """Scale a nonzero rational vector to a primitive integer vector."""
    return primitive_vector(a)


class Cone:
    """A rational polyhedral cone given by generators.

    Generators are stored as primitive lattice vectors with duplicates and
    zeros dropped, so ``Cone([(2, 0), (1, 0)]) == Cone([(1, 0)])``.
    """

    def __init__(self, generators=(), rank=None):
        gens = [as_vector(g) for g in generators]
        if rank is None:
            if not gens:
                raise ValueError("rank is required for a cone without generators")
            rank = len(gens[0])
        for g in gens:
            if len(g) != rank:
                raise RankMismatch(f"generator {g} does not have length {rank}")
        self.rank = rank
        self.generators = tuple(sorted({primitive_vector(g) for g in gens if any(g)}))

    def __repr__(self):
        return f"Cone({list(map(list, self.generators))}, rank={self.rank})"

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        if self.rank != other.rank:
            return False
        return all(other.contains(g) for g in self.generators) and all(
            self.contains(g) for g in other.generators
        )

    def __hash__(self):
        return hash((self.rank, self.dim))

    @cached_property
    def _span(self):
        """(row basis of the span, equations cutting out the span)."""
        rows = [list(g) for g in self.generators]
        basis = la.rref(rows)[0] if rows else []
        eqs = la.nullspace(rows, self.rank) if rows else [
            [Fraction(int(i == j)) for j in range(self.rank)] for i in range(self.rank)
        ]
        return basis, [_normalize_normal(e) for e in eqs]

    @property
    def dim(self) -> int:
        return len(self._span[0])

    @property
    def equations(self) -> tuple[tuple[int, ...], ...]:
        """Integer normals ``e`` with ``e . x = 0`` on the linear span."""
        return tuple(self._span[1])

    @cached_property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        """Inward facet normals, taken inside the linear span."""
        basis, _ = self._span
        k = len(basis)
        if k == 0:
            return ()
        gens = self.generators
        found = set()
        for subset in combinations(gens, k - 1):
            rows = [[la.dot(b, s) for b in basis] for s in subset]
            ns = la.nullspace(rows, k) if rows else [[Fraction(1)]]
            if len(ns) != 1:
                continue
            mu = ns[0]
            a = [sum((mu[i] * basis[i][j] for i in range(k)), Fraction(0))
                 for j in range(self.rank)]
            signs = {(la.dot(a, g) > 0) - (la.dot(a, g) < 0) for g in gens}
            if -1 not in signs:
                found.add(_normalize_normal(a))
            elif 1 not in signs:
                found.add(_normalize_normal([-x for x in a]))
        return tuple(sorted(found))

    @cached_property
    def is_pointed(self) -> bool:
        rows = [list(e) for e in self.equations] + [list(f) for f in self.facets]
        return la.rank(rows) == self.rank if rows else self.rank == 0

    @cached_property
    def extreme_rays(self) -> tuple[tuple[int, ...], ...]:
        """Primitive generators of the one-dimensional faces."""
        if not self.is_pointed:
            raise NotPointed("cone contains a line")
        eqs = [list(e) for e in self.equations]
        rays = []
        for g in self.generators:
            tight = eqs + [list(f) for f in self.facets if la.dot(f, g) == 0]
            if la.rank(tight) == self.rank - 1:
                rays.append(g)
        return tuple(rays)

    def contains(self, point, mode="boundary") -> bool:
        """Membership in the cone, or in its relative interior.

        ``mode`` is ``"boundary"`` (closed cone) or ``"relative_interior"``.
        """
        x = as_vector(point)
        if len(x) != self.rank:
            raise RankMismatch(f"point {x} does not have length {self.rank}")
        if any(la.dot(e, x) != 0 for e in self.equations):
            return False
        if mode == "boundary":
            return all(la.dot(f, x) >= 0 for f in self.facets)
        if mode == "relative_interior":
            return all(la.dot(f, x) > 0 for f in self.facets)
        raise ValueError(f"unknown mode {mode!r}")

    def transform(self, matrix) -> "Cone":
        """Image under the linear map ``x -> matrix @ x``."""
        return Cone([_matvec(matrix, g) for g in self.generators], rank=len(matrix))


def _matvec(matrix, v):
    return tuple(sum((as_rational(a) * b for a, b in zip(row, v)), Fraction(0)) for row in matrix)


def extreme_rays(generators, rank=None) -> list[tuple[int, ...]]:
    """Primitive extreme rays of the conic hull of ``generators``.

    Raises :class:`NotPointed` when the hull contains a line.
    """
    return list(Cone(generators, rank=rank).extreme_rays)


class Polyhedron:
    """A pointed polyhedron ``conv(vertices) + recession``.

    Redundant and duplicate vertices are dropped at construction.
    """

    def __init__(self, vertices, recession: Cone | None = None):
        verts = {as_vector(v) for v in vertices}
        if not verts:
            raise ValueError("a polyhedron needs at least one vertex")
        rank = len(next(iter(verts)))
        if any(len(v) != rank for v in verts):
            raise RankMismatch("vertices of different lengths")
        if recession is None:
            recession = Cone((), rank=rank)
        if recession.rank != rank:
            raise RankMismatch("recession cone rank differs from vertex rank")
        self.rank = rank
        self.recession = recession
        self.vertices = tuple(sorted(_irredundant(sorted(verts), recession)))

    def __repr__(self):
        vs = [[str(x) for x in v] for v in self.vertices]
        return f"Polyhedron({vs}, recession={self.recession!r})"

    def __eq__(self, other):
        if not isinstance(other, Polyhedron):
            return NotImplemented
        return (self.rank == other.rank and self.vertices == other.vertices
                and self.recession == other.recession)

    def __hash__(self):
        return hash((self.rank, self.vertices))

    def __add__(self, other):
        return minkowski_sum([self, other])

    @cached_property
    def homogenization(self) -> Cone:
        """The cone generated by ``(v, 1)`` for vertices and ``(r, 0)`` for rays."""
        gens = [tuple(v) + (Fraction(1),) for v in self.vertices]
        gens += [tuple(r) + (0,) for r in self.recession.generators]
        return Cone(gens, rank=self.rank + 1)

    def contains(self, point) -> bool:
        return self.homogenization.contains(tuple(as_vector(point)) + (Fraction(1),))

    @property
    def is_lattice(self) -> bool:
        return all(is_integral(v) for v in self.vertices)

    def translate(self, shift) -> "Polyhedron":
        s = as_vector(shift)
        return Polyhedron([tuple(a + b for a, b in zip(v, s)) for v in self.vertices], self.recession)

    def transform(self, matrix) -> "Polyhedron":
        return Polyhedron([_matvec(matrix, v) for v in self.vertices], self.recession.transform(matrix))


def _irredundant(verts, recession):
    if len(verts) == 1:
        return verts
    keep = list(verts)
    for v in verts:
        others = [w for w in keep if w != v]
        if not others:
            break
        gens = [tuple(w) + (Fraction(1),) for w in others]
        gens += [tuple(r) + (0,) for r in recession.generators]
        if Cone(gens, rank=len(v) + 1).contains(tuple(v) + (Fraction(1),)):
            keep = others
    return keep


def minkowski_sum(ps) -> Polyhedron:
    """Minkowski sum of polyhedra of equal rank."""
    ps = list(ps)
    if not ps:
        raise ValueError("empty Minkowski sum")
    rank = ps[0].rank
    if any(p.rank != rank for p in ps):
        raise RankMismatch("summands have different ranks")
    acc = ps[0]
    for p in ps[1:]:
        verts = [tuple(a + b for a, b in zip(u, v)) for u in acc.vertices for v in p.vertices]
        if acc.recession == p.recession:
            rec = acc.recession
        else:
            rec = Cone(acc.recession.generators + p.recession.generators, rank=rank)
        acc = Polyhedron(verts, rec)
    return acc


@dataclass(frozen=True)
class Interval:
    """A subinterval of the positive rationals.

    ``upper is None`` means unbounded above; ``lower_open`` is only ever true
    for ``lower == 0`` (the ray parameter is required to be positive).
    """

    lower: Fraction
    upper: Fraction | None
    lower_open: bool = False

    def __contains__(self, t):
        t = as_rational(t)
        if t < self.lower or (self.lower_open and t == self.lower):
            return False
        return self.upper is None or t <= self.upper


def ray_hits(direction, target: Polyhedron) -> Interval | None:
    """``{t > 0 : t * direction in target}`` as an exact interval, or None."""
    d = tuple(as_rational(x) for x in direction) + (Fraction(0),)
    if len(d) != target.rank + 1:
        raise RankMismatch("direction rank differs from the polyhedron rank")
    hom = target.homogenization
    lo, lo_open, hi = Fraction(0), True, None
    # constraint rows: coeff * t + const (== 0 | >= 0), with (t d, 1)
    for e in hom.equations:
        c, k = la.dot(e, d), Fraction(e[-1])
        if c == 0:
            if k != 0:
                return None
            continue
        t = -k / c
        if t < lo or (lo_open and t == lo) or (hi is not None and t > hi):
            return None
        lo, lo_open, hi = t, False, t
    for f in hom.facets:
        c, k = la.dot(f, d), Fraction(f[-1])
        if c == 0:
            if k < 0:
                return None
        elif c > 0:
            t = -k / c
            if t > lo:
                lo, lo_open = t, False
        else:
            t = -k / c
            if hi is None or t < hi:
                hi = t
    if hi is not None and (hi < lo or (hi == lo and lo_open)):
        return None
    return Interval(lo, hi, lo_open)


def _fm_eliminate(ineqs, j):
    """Fourier-Motzkin: project ``a . x >= b`` rows along variable ``j``."""
    pos, neg, out = [], [], []
    for a, b in ineqs:
        (pos if a[j] > 0 else neg if a[j] < 0 else out).append((a, b))
    for ap, bp in pos:
        for an, bn in neg:
            sp, sn = -an[j], ap[j]
            a = [sp * x + sn * y for x, y in zip(ap, an)]
            out.append((a, sp * bp + sn * bn))
    return _dedupe(out)


def _dedupe(ineqs):
    seen = {}
    for a, b in ineqs:
        if not any(a):
            if b > 0:
                seen[("infeasible",)] = ([Fraction(0)] * len(a), Fraction(1))
            continue
        scale = max(abs(x) for x in a)
        key = (tuple(x / scale for x in a), b / scale)
        seen[key] = ([x / scale for x in a], b / scale)
    return list(seen.values())


def lattice_points(cone: Cone, linear_form, threshold) -> list[tuple[int, ...]]:
    """Integral points ``x`` of ``cone`` with ``<linear_form, x> >= threshold``.

    The form must be strictly negative on every extreme ray so the region is
    a polytope.  Coordinates are scanned with exact bounds obtained by
    Fourier-Motzkin projection, then each candidate is rechecked.  The result
    is sorted lexicographically.
    """
    form = as_vector(linear_form)
    t = as_rational(threshold)
    n = cone.rank
    if len(form) != n:
        raise RankMismatch("linear form length differs from cone rank")
    if not cone.is_pointed:
        raise UnboundedRegion("cone is not pointed")
    for r in cone.extreme_rays:
        if la.dot(form, r) >= 0:
            raise UnboundedRegion(f"linear form is not negative on ray {r}")
    if n == 0:
        return [()] if t <= 0 else []
    system = [([Fraction(x) for x in e], Fraction(0)) for e in cone.equations]
    system += [([-Fraction(x) for x in e], Fraction(0)) for e in cone.equations]
    system += [([Fraction(x) for x in f], Fraction(0)) for f in cone.facets]
    system.append((list(form), t))
    projected = [None] * n
    projected[n - 1] = _dedupe(system)
    for k in range(n - 1, 0, -1):
        projected[k - 1] = _fm_eliminate(projected[k], k)

    out = []
    prefix = [0] * n

    def scan(k):
        lo = hi = None
        for a, b in projected[k]:
            s = b - sum((a[i] * prefix[i] for i in range(k)), Fraction(0))
            if a[k] > 0:
                v = s / a[k]
                lo = v if lo is None or v > lo else lo
            elif a[k] < 0:
                v = s / a[k]
                hi = v if hi is None or v < hi else hi
            elif s > 0:
                return
        if lo is None or hi is None:
            raise UnboundedRegion("region is unbounded")
        for x in range(math.ceil(lo), math.floor(hi) + 1):
            prefix[k] = x
            if k == n - 1:
                p = tuple(prefix)
                if cone.contains(p) and la.dot(form, p) >= t:
                    out.append(p)
            else:
                scan(k + 1)
        prefix[k] = 0

    scan(0)
    return sorted(out)
