"""The weight function omega_X and discrepancies.

omega_X is linear on every Cayley cone ``C(D_y)`` and is pinned down by
prescribed values on rays:

* ``-1`` on every primitive extreme ray that does not meet the degree
  polyhedron or a color direction (vertex rays always fall here);
* ``-a`` on ``(color vector, 0)`` for every color;
* ``lambda * delta`` on a tail ray ``rho = lambda * (v_1 + ... + v_r)`` that
  meets the degree polyhedron, where ``delta = deg K_C + sum (1 - 1/kappa(v_z))``.

Existence of the forms is decided by one exact linear system; the variety is
treated as Q-Gorenstein exactly when it is consistent.

Over a complete curve the forms share a single ``N``-part ``u`` and their
last coordinates ``c_y`` satisfy ``sum_y (c_y + 1) = 2 - 2g``, summed over
all points of the curve (points outside the support have ``c_y = -1``).  Over
an affine curve the forms are only required to agree on the span of the
tail cone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import _linalg as la
from .divisor import ColoredPolyhedralDivisor, CayleyCone, cayley_cone, degree, support
from .errors import NoWitness, NotQGorenstein, OutsideCone
from .geometry import as_rational, as_vector, kappa, primitive_vector, ray_hits

__all__ = [
    "RayTarget",
    "VertexSumWitness",
    "WeightFunction",
    "tail_ray_values",
    "prescribed_ray_values",
    "vertex_sum_witnesses",
    "solve_weight",
    "omega_eval",
    "discrepancy",
]


@dataclass(frozen=True)
class VertexSumWitness:
    vertices: tuple  # ((label, vertex), ...) over the support
    lam: Fraction
    delta: Fraction

    @property
    def value(self) -> Fraction:
        return self.lam * self.delta


@dataclass(frozen=True)
class RayTarget:
    """A prescribed value of omega on a primitive ray of ``C(D_y)``.

    ``source`` is ``"ii"`` (value -1), ``"iii"`` (color) or ``"iv"``
    (degree ray); ``witness`` carries the color labels or vertex-sum
    witnesses behind the value.
    """

    point: str | None
    ray: tuple[int, ...]
    value: Fraction
    source: str
    witness: tuple = ()


@dataclass(frozen=True)
class WeightFunction:
    rank: int
    tail: tuple[Fraction, ...]
    forms: dict
    targets: tuple = ()
    cones: dict = field(default_factory=dict, compare=False, repr=False)

    def form(self, y) -> tuple[Fraction, ...]:
        """Linear form ``m_y`` on ``N_Q + Q``; off the support it is ``(tail, -1)``."""
        return self.forms.get(y, self.tail + (Fraction(-1),))


def vertex_sum_witnesses(d: ColoredPolyhedralDivisor, rho) -> list[VertexSumWitness]:
    """Vertex choices ``(v_y)`` over the support whose sum lies on ``Q_{>0} rho``.

    Each witness carries ``lambda`` with ``rho = lambda * sum v_y`` and
    ``delta = (2g - 2) + sum_y (1 - 1/kappa(v_y))``.
    """
    rho = tuple(int(x) for x in rho)
    supp = support(d)
    choices = [d.coefficients[y].vertices for y in supp]
    out = []
    for combo in product(*choices):
        s = tuple(sum(c, Fraction(0)) for c in zip(*combo)) if combo else (Fraction(0),) * d.rank
        if not any(s) or primitive_vector(s) != rho:
            continue
        i = next(k for k, x in enumerate(rho) if x)
        lam = rho[i] / s[i]
        delta = d.curve.canonical_degree + sum((1 - Fraction(1, kappa(v)) for v in combo), Fraction(0))
        out.append(VertexSumWitness(tuple(zip(supp, combo)), lam, delta))
    if not out:
        raise NoWitness(f"no vertex sum lies on the ray through {rho}")
    return out


def _on_ray(c, r):
    """``t`` with ``c = t * r`` and ``t > 0``, else None."""
    if primitive_vector(c) != tuple(r):
        return None
    i = next(k for k, x in enumerate(r) if x)
    return Fraction(c[i], r[i])


def tail_ray_values(d: ColoredPolyhedralDivisor) -> dict:
    """Prescribed value, source and witness for every extreme ray of the tail cone."""
    deg = degree(d)
    out = {}
    for r in d.tail.extreme_rays:
        found = []
        for c in d.colors:
            t = _on_ray(c.vector, r)
            if t is not None:
                found.append((Fraction(-c.a) / t, "iii", c.label))
        if deg is not None and ray_hits(r, deg) is not None:
            for w in vertex_sum_witnesses(d, r):
                found.append((w.value, "iv", w))
        if not found:
            out[r] = (Fraction(-1), "ii", ())
            continue
        values = {v for v, _, _ in found}
        if len(values) > 1:
            desc = "; ".join(f"{src} gives {v}" for v, src, _ in found)
            names = [f"tail ray {list(r)}: {src} value {v}" for v, src, _ in found]
            raise NotQGorenstein(f"conflicting prescriptions on tail ray {list(r)}: {desc}", names)
        sources = {src for _, src, _ in found}
        source = "iv" if "iv" in sources else "iii"
        out[r] = (found[0][0], source, tuple(w for _, _, w in found))
    return out


def prescribed_ray_values(d: ColoredPolyhedralDivisor) -> list[RayTarget]:
    """All ray targets, per support point (point ``None`` if the support is empty)."""
    tails = tail_ray_values(d)
    points = support(d) or [None]
    targets = []
    for y in points:
        cc = cayley_cone(d, y) if y is not None else None
        if cc is not None:
            for r in cc.vertex_rays:
                targets.append(RayTarget(y, r, Fraction(-1), "ii"))
        for r, (val, src, wit) in sorted(tails.items()):
            targets.append(RayTarget(y, r + (0,), val, src, wit))
        for c in d.colors:
            if primitive_vector(c.vector) not in tails:
                targets.append(RayTarget(y, c.vector + (0,), Fraction(-c.a), "iii", (c.label,)))
    return targets


class _System:
    def __init__(self, nvars):
        self.nvars = nvars
        self.rows, self.rhs, self.names = [], [], []

    def add(self, name, coeffs, rhs):
        row = [Fraction(0)] * self.nvars
        for i, c in coeffs:
            row[i] += Fraction(c)
        self.rows.append(row)
        self.rhs.append(Fraction(rhs))
        self.names.append(name)

    def _consistent(self, idx):
        if not idx:
            return True
        return la.solve([self.rows[i] for i in idx], [self.rhs[i] for i in idx], self.nvars) is not None

    def solve(self):
        x = la.solve(self.rows, self.rhs, self.nvars)
        if x is not None:
            return x
        # smallest inconsistent prefix, then a deletion filter for an irreducible core
        lo, hi = 0, len(self.rows)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._consistent(list(range(mid + 1))):
                lo = mid + 1
            else:
                hi = mid
        core = list(range(lo + 1))
        for i in list(core[:-1]):
            trial = [j for j in core if j != i]
            if not self._consistent(trial):
                core = trial
        names = [self.names[i] for i in core]
        raise NotQGorenstein("inconsistent weight constraints: " + "; ".join(names), names)


def solve_weight(d: ColoredPolyhedralDivisor) -> WeightFunction:
    """Solve for the forms ``m_y``; raise :class:`NotQGorenstein` if impossible."""
    n = d.rank
    targets = prescribed_ray_values(d)
    tails = tail_ray_values(d)
    supp = support(d)
    complete = d.curve.complete
    # variable layout: tail u (n), then per support point (u_y unless complete) and c_y
    offsets = {}
    k = n
    for y in supp:
        if complete:
            offsets[y] = (0, k)
            k += 1
        else:
            offsets[y] = (k, k + n)
            k += n + 1
    sys_ = _System(k)

    for r, (val, src, _) in sorted(tails.items()):
        sys_.add(f"tail ray {list(r)} -> {val} ({src})", [(i, r[i]) for i in range(n)], val)
    for c in d.colors:
        sys_.add(f"color {c.label} {list(c.vector)} -> {-c.a} (iii)", [(i, c.vector[i]) for i in range(n)], -c.a)

    span = d.tail._span[0]
    cones = {}
    for y in supp:
        ub, ci = offsets[y]
        cc = cayley_cone(d, y)
        cones[y] = cc
        if not complete:
            for b in span:
                sys_.add(f"tail agreement at {y}",
                         [(ub + i, b[i]) for i in range(n)] + [(i, -b[i]) for i in range(n)], 0)
        for r in cc.vertex_rays:
            sys_.add(f"vertex ray {list(r)} at {y} -> -1 (ii)",
                     [(ub + i, r[i]) for i in range(n)] + [(ci, r[n])], -1)
        if not complete:
            for r, (val, src, _) in sorted(tails.items()):
                sys_.add(f"tail ray {list(r)} at {y} -> {val} ({src})", [(ub + i, r[i]) for i in range(n)], val)
            for c in d.colors:
                sys_.add(f"color {c.label} at {y} -> {-c.a} (iii)",
                         [(ub + i, c.vector[i]) for i in range(n)], -c.a)
    if complete:
        balance = 2 - 2 * d.curve.genus - len(supp)
        sys_.add(f"canonical degree balance: sum (c_y + 1) = {2 - 2 * d.curve.genus}",
                 [(offsets[y][1], 1) for y in supp], balance)

    x = sys_.solve()
    tail = tuple(x[:n])
    forms = {}
    for y in supp:
        ub, ci = offsets[y]
        forms[y] = tuple(x[ub:ub + n]) + (x[ci],)
    return WeightFunction(n, tail, forms, tuple(targets), cones)


def _cone_of(w, d, y):
    cc = w.cones.get(y)
    return cc if cc is not None else cayley_cone(d, y)


def omega_eval(w: WeightFunction, d: ColoredPolyhedralDivisor, y, nu, ell) -> Fraction:
    """omega_X at the point ``(nu, ell)`` of ``C(D_y)``."""
    nu = as_vector(nu)
    ell = as_rational(ell)
    if len(nu) != d.rank:
        raise OutsideCone(f"vector {nu} has the wrong length")
    if ell < 0 or not _cone_of(w, d, y).cone.contains(nu + (ell,)):
        raise OutsideCone(f"({', '.join(map(str, nu))}, {ell}) is not in C(D_{y})")
    if ell == 0:
        return la.dot(w.tail, nu)
    return la.dot(w.form(y), nu + (ell,))


def discrepancy(w: WeightFunction, d: ColoredPolyhedralDivisor, y, nu, ell) -> Fraction:
    """Discrepancy ``-1 - omega`` of the valuation ``(y, nu, ell)``."""
    return -1 - omega_eval(w, d, y, nu, ell)
