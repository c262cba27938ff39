"""Cross-check the classifier against plain toric geometry.

Over P^1 with support in {0, inf} and no colors the variety is toric: its cone
is spanned by (v, 1) for vertices of D_0, (w, -1) for vertices of D_inf and the
tail cone at height 0.  The toric check there is independent code (sympy).
"""
import random
from collections import Counter
from fractions import Fraction

from horosing import Cone, CurveData, ColoredPolyhedralDivisor, Polyhedron, classify
from horosing.toric import toric_cone_generators, toric_verdicts

rng = random.Random(7)
tally = Counter()
disagree = 0
for _ in range(100):
    r1, r2 = (1, 0), (rng.randint(-2, 2), rng.randint(1, 3))
    tail = Cone([r1, r2])
    # pick the degree inside the tail cone, then split it between 0 and inf
    s1, s2 = Fraction(rng.randint(0, 4), rng.randint(1, 3)), Fraction(rng.randint(1, 4), rng.randint(1, 3))
    deg = (s1 * r1[0] + s2 * r2[0], s2 * r2[1])
    a = (Fraction(rng.randint(-6, 6), rng.randint(1, 4)), Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
    b = (deg[0] - a[0], deg[1] - a[1])
    d = ColoredPolyhedralDivisor(2, tail, CurveData(0, True, ("0", "inf")),
                                 {"0": Polyhedron([a], tail), "inf": Polyhedron([b], tail)})
    toric = toric_verdicts(d)
    r = classify(d)
    ours = {k: getattr(r, k) for k in toric}
    disagree += ours != toric
    tally["not QG" if not r.q_gorenstein else "terminal" if r.terminal
          else "canonical" if r.canonical else "lt, not canonical"] += 1

print("verdicts:", dict(tally))
print("disagreements:", disagree)

d = ColoredPolyhedralDivisor(1, Cone([(1,)]), CurveData(0, True, ("0", "inf")),
                             {"0": Polyhedron([(Fraction(1, 2),)], Cone([(1,)])),
                              "inf": Polyhedron([(Fraction(1, 2),)], Cone([(1,)]))})
print("1/2 [0] + 1/2 [inf] cone:", sorted(toric_cone_generators(d)), toric_verdicts(d))
