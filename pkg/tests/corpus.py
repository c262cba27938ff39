"""Deterministic random divisors for property and oracle tests."""

import random
from fractions import Fraction

from horosing.divisor import ColoredPolyhedralDivisor, ColorRecord, CurveData, degree, from_kstar
from horosing.geometry import Cone, Polyhedron

SMALL = [Fraction(p, q) for q in range(1, 7) for p in range(-6, 7)]
STEPS = [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]


def rational(rng, lo=-3, hi=3, dens=(1, 2, 3, 4, 5, 6)):
    q = rng.choice(dens)
    return Fraction(rng.randint(lo * q, hi * q), q)


def random_tail2(rng):
    while True:
        r1 = (rng.randint(-2, 3), rng.randint(-2, 3))
        r2 = (rng.randint(-2, 3), rng.randint(-2, 3))
        if r1[0] * r2[1] - r1[1] * r2[0] != 0:
            return Cone([r1, r2])


def _in_tail_combo(rng, tail):
    r1, r2 = tail.extreme_rays
    while True:
        a, b = rng.choice(STEPS), rng.choice(STEPS)
        if a or b:
            return tuple(a * x + b * y for x, y in zip(r1, r2))


def toric_downgrade(rng):
    """Genus 0, complete, support in {0, inf}, no colors, full-dimensional tail."""
    rank = rng.choice([1, 2])
    curve = CurveData(0, True, ("0", "inf"))
    if rank == 1:
        tail = Cone([(1,)])
        while True:
            a, b = rational(rng), rational(rng)
            if a + b > 0:
                break
        coeffs = {"0": Polyhedron([(a,)], tail), "inf": Polyhedron([(b,)], tail)}
        return ColoredPolyhedralDivisor(1, tail, curve, coeffs)
    tail = random_tail2(rng)
    while True:
        v0 = [(rational(rng, -2, 2), rational(rng, -2, 2)) for _ in range(rng.choice([1, 1, 2]))]
        base = v0[0]
        winf = []
        for _ in range(rng.choice([1, 1, 2])):
            s = _in_tail_combo(rng, tail)
            winf.append(tuple(x - y for x, y in zip(s, base)))
        coeffs = {"0": Polyhedron(v0, tail), "inf": Polyhedron(winf, tail)}
        d = ColoredPolyhedralDivisor(2, tail, curve, coeffs)
        deg = degree(d)
        if all(tail.contains(v) for v in deg.vertices) and not deg.contains((0, 0)):
            return d


def kstar_elliptic(rng, genus=0, npoints=None):
    npoints = npoints or rng.choice([2, 3, 4])
    pts = [str(i) for i in range(npoints)]
    while True:
        vals = [rational(rng, -2, 2, (1, 2, 3, 4, 5, 7)) for _ in pts]
        if sum(vals) > 0:
            return from_kstar("elliptic", genus=genus, points=pts, divisor=dict(zip(pts, vals)))


def kstar_affine(rng):
    pts = [str(i) for i in range(rng.choice([1, 2, 3]))]
    if rng.random() < 0.5:
        vals = {p: rational(rng) for p in pts}
        return from_kstar("parabolic", genus=rng.choice([0, 1]), points=pts, divisor=vals)
    dp, dm = {}, {}
    for p in pts:
        a, b = sorted((rational(rng), rational(rng)))
        dp[p], dm[p] = a, -b
    return from_kstar("hyperbolic", points=pts, d_plus=dp, d_minus=dm)


def rank2_general(rng):
    """Rank two, affine or complete curve of genus 0..2, optional colors."""
    tail = random_tail2(rng)
    complete = rng.random() < 0.6
    genus = rng.choice([0, 0, 0, 1, 2]) if complete else rng.choice([0, 1])
    pts = [str(i) for i in range(rng.choice([1, 2, 3]))]
    colors = []
    if not complete and rng.random() < 0.5:
        g = _in_tail_combo(rng, tail)
        den = max(x.denominator for x in g)
        colors.append(ColorRecord("alpha", tuple(int(x * den) for x in g), rng.choice([1, 2, 3])))
    for _ in range(50):
        coeffs = {}
        vsum = []
        for p in pts[:-1] if complete else pts:
            vs = [(rational(rng, -2, 2, (1, 2, 3)), rational(rng, -2, 2, (1, 2, 3)))
                  for _ in range(rng.choice([1, 1, 2]))]
            coeffs[p] = Polyhedron(vs, tail)
            vsum.append(vs[0])
        if complete:
            s = _in_tail_combo(rng, tail)
            last = tuple(si - sum(v[i] for v in vsum) for i, si in enumerate(s))
            coeffs[pts[-1]] = Polyhedron([last], tail)
        d = ColoredPolyhedralDivisor(2, tail, CurveData(genus, complete, tuple(pts)), coeffs, tuple(colors))
        if not complete:
            return d
        deg = degree(d)
        if all(tail.contains(v) for v in deg.vertices) and not deg.contains((0, 0)):
            return d
    return None


def mixed_corpus(seed, n):
    rng = random.Random(seed)
    out = []
    makers = [
        toric_downgrade,
        lambda r: kstar_elliptic(r, genus=r.choice([0, 0, 1, 2])),
        kstar_affine,
        rank2_general,
    ]
    while len(out) < n:
        d = rng.choice(makers)(rng)
        if d is not None:
            out.append(d)
    return out


def random_unimodular(rng, n, bound=5):
    """Product of elementary matrices, entries bounded by ``bound``."""
    while True:
        m = [[int(i == j) for j in range(n)] for i in range(n)]
        for _ in range(rng.randint(1, 4)):
            i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
            if n == 1:
                m = [[-m[0][0]]]
                continue
            k = rng.choice([-2, -1, 1, 2])
            m[i] = [a + k * b for a, b in zip(m[i], m[j])]
            if rng.random() < 0.3:
                m[i], m[j] = m[j], m[i]
        if all(abs(x) <= bound for row in m for x in row):
            return m
