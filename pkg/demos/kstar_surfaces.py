"""Log canonical k*-surfaces over P^1: walk the denominator quadruples.

A divisor e1/m1 [0] + e2/m2 [1] + e3/m3 [2] + e4/m4 [inf] gives a normal affine
surface with a k*-action.  Whether it is log canonical only depends on the
quadruple (m1, m2, m3, m4).
"""
from fractions import Fraction

from horosing import classify, from_kstar
from horosing.divisor import lc_quadruple_member


def surface(ms, es=(1, 1, 1, 1)):
    pts = ["0", "1", "2", "inf"]
    vals = {p: Fraction(e, m) for p, e, m in zip(pts, es, ms)}
    return from_kstar("elliptic", genus=0, points=pts, divisor=vals)


quads = [(2, 2, 5, 1), (1, 7, 4, 1), (2, 3, 5, 1), (2, 3, 6, 1), (3, 3, 3, 1),
         (2, 2, 2, 2), (2, 3, 7, 1), (2, 4, 5, 1), (3, 3, 4, 1)]

print(f"{'quadruple':>14}  {'sum':>6}  lc     lt     canonical  listed")
for ms in quads:
    r = classify(surface(ms))
    total = sum(1 - Fraction(1, m) for m in ms)
    print(f"{str(ms):>14}  {str(total):>6}  {r.log_canonical!s:<6} {r.log_terminal!s:<6} "
          f"{r.canonical!s:<10} {lc_quadruple_member(*ms)}")

# the verdict does not care about the numerators
for es in [(1, 1, 1, 1), (1, 2, 3, 1), (3, 5, 7, -1)]:
    r = classify(surface((2, 3, 5, 1), es))
    print("(2,3,5,1) with numerators", es, "->", "lc" if r.log_canonical else "not lc")

# the boundary case: delta = 0 puts omega exactly at 0 on the degree ray
r = classify(surface((2, 2, 2, 2)))
print("(2,2,2,2): lc", r.log_canonical, "lt", r.log_terminal, "witness", r.witnesses["log_terminal"])
