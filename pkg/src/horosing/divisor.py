"""Colored polyhedral divisors over a smooth curve.

A divisor is a tail cone ``sigma`` in ``N_Q``, a curve (only its genus, the
completeness flag and a list of point labels matter), one polyhedron per
point with recession cone ``sigma`` and a list of colors.  Points missing
from the coefficient map carry the trivial coefficient ``sigma``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la
from .errors import HyperbolicIncompatible, ValidationError
from .geometry import (
    Cone,
    Polyhedron,
    as_rational,
    as_vector,
    minkowski_sum,
    primitive_vector,
)

__all__ = [
    "CurveData",
    "ColorRecord",
    "ColoredPolyhedralDivisor",
    "CayleyCone",
    "validate",
    "support",
    "degree",
    "cayley_cone",
    "evaluate",
    "from_kstar",
    "lc_quadruple_member",
]


@dataclass(frozen=True)
class CurveData:
    genus: int
    complete: bool
    points: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(str(p) for p in self.points))

    @property
    def canonical_degree(self) -> int:
        return 2 * self.genus - 2


@dataclass(frozen=True)
class ColorRecord:
    label: str
    vector: tuple[int, ...]
    a: int

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(int(x) for x in self.vector))


@dataclass(frozen=True, eq=False)
class ColoredPolyhedralDivisor:
    rank: int
    tail: Cone
    curve: CurveData
    coefficients: dict = field(default_factory=dict)
    colors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", dict(self.coefficients))
        object.__setattr__(self, "colors", tuple(self.colors))

    def __eq__(self, other):
        if not isinstance(other, ColoredPolyhedralDivisor):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.tail == other.tail
            and self.curve == other.curve
            and self.colors == other.colors
            and {y: self.coefficient(y) for y in self.curve.points}
            == {y: other.coefficient(y) for y in other.curve.points}
        )

    @property
    def trivial(self) -> Polyhedron:
        return Polyhedron([(0,) * self.rank], self.tail)

    def coefficient(self, y) -> Polyhedron:
        return self.coefficients.get(y, self.trivial)

    def transform(self, matrix) -> "ColoredPolyhedralDivisor":
        """Apply a lattice automorphism of ``N`` to all data."""
        colors = [
            ColorRecord(c.label, tuple(int(x) for x in _apply(matrix, c.vector)), c.a)
            for c in self.colors
        ]
        return ColoredPolyhedralDivisor(
            self.rank,
            self.tail.transform(matrix),
            self.curve,
            {y: p.transform(matrix) for y, p in self.coefficients.items()},
            colors,
        )

    def shift(self, shifts) -> "ColoredPolyhedralDivisor":
        """Translate ``D_y`` by ``shifts[y]`` (points absent are left alone)."""
        coeffs = dict(self.coefficients)
        for y, s in shifts.items():
            coeffs[y] = self.coefficient(y).translate(s)
        return ColoredPolyhedralDivisor(self.rank, self.tail, self.curve, coeffs, self.colors)


def _apply(matrix, v):
    return tuple(sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in matrix)


@dataclass(frozen=True)
class CayleyCone:
    """The cone over ``(D_y, 1)`` and ``(sigma, 0)`` in ``N_Q + Q``."""

    point: str
    cone: Cone
    vertex_rays: tuple[tuple[int, ...], ...]
    tail_rays: tuple[tuple[int, ...], ...]

    @property
    def rays(self):
        return self.vertex_rays + self.tail_rays


def validate(d: ColoredPolyhedralDivisor) -> None:
    """Raise :class:`ValidationError` on the first broken invariant.

    Non-fatal problems (a color vector outside the tail cone, a degree
    polyhedron containing the origin) only emit a :class:`UserWarning`.
    """
    if d.rank < 1:
        raise ValidationError("rank must be at least 1")
    if d.tail.rank != d.rank:
        raise ValidationError(f"tail cone has rank {d.tail.rank}, expected {d.rank}")
    if not d.tail.is_pointed:
        raise ValidationError("tail cone is not pointed")
    if d.curve.genus < 0:
        raise ValidationError("genus must be non-negative")
    if len(set(d.curve.points)) != len(d.curve.points):
        raise ValidationError("curve point labels are not distinct")
    for y, p in d.coefficients.items():
        if y not in d.curve.points:
            raise ValidationError(f"coefficient at unknown point {y!r}")
        if p.rank != d.rank:
            raise ValidationError(f"coefficient at {y!r} has rank {p.rank}, expected {d.rank}")
        if p.recession != d.tail:
            raise ValidationError(f"coefficient at {y!r} has recession cone different from the tail cone")
    for c in d.colors:
        if len(c.vector) != d.rank:
            raise ValidationError(f"color {c.label!r} has a vector of the wrong length")
        if not any(c.vector):
            raise ValidationError(f"color {c.label!r} has the zero vector")
        if not d.tail.contains(c.vector):
            warnings.warn(f"color {c.label!r} vector {c.vector} lies outside the tail cone", stacklevel=2)
    if d.curve.complete:
        deg = degree(d)
        bad = [v for v in deg.vertices if not d.tail.contains(v)]
        if bad:
            shown = ", ".join("(" + ", ".join(map(str, v)) + ")" for v in bad)
            raise ValidationError(f"degree polyhedron is not contained in the tail cone: vertex {shown}")
        if deg.contains((0,) * d.rank):
            warnings.warn("degree polyhedron contains the origin; the divisor is not proper", stacklevel=2)


def support(d: ColoredPolyhedralDivisor) -> list[str]:
    """Labels whose coefficient differs from the tail cone, in curve order."""
    triv = d.trivial
    return [y for y in d.curve.points if y in d.coefficients and d.coefficients[y] != triv]


def degree(d: ColoredPolyhedralDivisor) -> Polyhedron | None:
    """Minkowski sum of all coefficients, or None when the curve is affine."""
    if not d.curve.complete:
        return None
    return minkowski_sum([d.trivial] + [d.coefficients[y] for y in support(d)])


def cayley_cone(d: ColoredPolyhedralDivisor, y: str) -> CayleyCone:
    p = d.coefficient(y)
    vgens = [primitive_vector(tuple(v) + (Fraction(1),)) for v in p.vertices]
    tgens = [tuple(r) + (0,) for r in d.tail.extreme_rays]
    cone = Cone(vgens + tgens, rank=d.rank + 1)
    ext = set(cone.extreme_rays)
    return CayleyCone(
        y,
        cone,
        tuple(sorted(r for r in set(vgens) if r in ext)),
        tuple(sorted(r for r in set(tgens) if r in ext)),
    )


def evaluate(d: ColoredPolyhedralDivisor, m) -> dict[str, Fraction]:
    """The Q-divisor ``sum_y min_{v in D_y} <m, v> [y]`` for ``m`` in the dual tail cone."""
    m = as_vector(m)
    if any(la.dot(m, r) < 0 for r in d.tail.extreme_rays):
        raise ValueError(f"{m} is not in the dual of the tail cone")
    return {y: min(la.dot(m, v) for v in d.coefficient(y).vertices) for y in d.curve.points}


def from_kstar(kind, *, genus=0, points=None, divisor=None, d_minus=None, d_plus=None):
    """Build the rank-one divisor of a normal affine k*-surface.

    ``parabolic`` (affine curve) and ``elliptic`` (complete curve) read
    ``divisor`` as ``D(1)``: a mapping point -> rational.  ``hyperbolic``
    takes ``d_minus = D(-1)`` and ``d_plus = D(1)`` on an affine curve and
    needs ``d_plus(y) + d_minus(y) <= 0`` at every point.
    """
    if kind in ("parabolic", "elliptic"):
        coeffs = {str(y): as_rational(c) for y, c in (divisor or {}).items()}
        labels = _labels(points, coeffs)
        tail = Cone([(1,)])
        polys = {y: Polyhedron([(c,)], tail) for y, c in coeffs.items()}
        curve = CurveData(genus, kind == "elliptic", labels)
        return ColoredPolyhedralDivisor(1, tail, curve, polys, ())
    if kind == "hyperbolic":
        dm = {str(y): as_rational(c) for y, c in (d_minus or {}).items()}
        dp = {str(y): as_rational(c) for y, c in (d_plus or {}).items()}
        labels = _labels(points, {**dm, **dp})
        tail = Cone((), rank=1)
        polys = {}
        for y in labels:
            lo, hi = dp.get(y, Fraction(0)), -dm.get(y, Fraction(0))
            if lo > hi:
                raise HyperbolicIncompatible(f"D+({y}) + D-({y}) = {lo - hi} > 0")
            polys[y] = Polyhedron([(lo,), (hi,)], tail)
        return ColoredPolyhedralDivisor(1, tail, CurveData(genus, False, labels), polys, ())
    raise ValueError(f"unknown k*-surface kind {kind!r}")


def _labels(points, coeffs):
    labels = [str(p) for p in points] if points is not None else []
    labels += [y for y in coeffs if y not in labels]
    return tuple(labels)


_LC_EXCEPTIONAL = {
    (1, 2, 3, 3), (1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 3, 6),
    (1, 2, 4, 4), (1, 3, 3, 3), (2, 2, 2, 2),
}


def lc_quadruple_member(m1, m2, m3, m4) -> bool:
    """Is the multiset ``{m1, .., m4}`` one of the log canonical denominator types?

    The families are (2,2,r,1), (1,p,q,1) and the exceptional quadruples
    (2,3,3,1) .. (2,3,6,1), (2,4,4,1), (3,3,3,1), (2,2,2,2).
    """
    ms = tuple(sorted((m1, m2, m3, m4)))
    if any(m < 1 for m in ms):
        raise ValueError("denominators must be positive")
    if ms[0] == 1 and ms[1] == 1:
        return True
    if ms[0] == 1 and ms[1] == 2 and ms[2] == 2:
        return True
    return ms in _LC_EXCEPTIONAL
