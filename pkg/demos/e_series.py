"""The E6, E7, E8 surface singularities as k*-surfaces.

1/2 [0] + 1/3 [1] - (i-4)/(i-3) [inf] on P^1.  Each one is canonical and not
terminal, and the exceptional divisor over the degree ray has discrepancy 0.
"""
from fractions import Fraction

from horosing import classify, from_kstar, solve_weight, stringy_series
from horosing.weight import omega_eval, vertex_sum_witnesses

for i in (6, 7, 8):
    d = from_kstar("elliptic", genus=0, points=["0", "1", "inf"],
                   divisor={"0": Fraction(1, 2), "1": Fraction(1, 3), "inf": -Fraction(i - 4, i - 3)})
    (wit,) = vertex_sum_witnesses(d, (1,))
    w = solve_weight(d)
    om = omega_eval(w, d, "0", (1,), 0)
    r = classify(d)
    print(f"E{i}: delta = {wit.delta}, lambda = {wit.lam}, omega(degree ray) = {om}, "
          f"canonical = {r.canonical}, terminal = {r.terminal}")
    print("   forms m_y:", {y: [str(x) for x in w.form(y)] for y in d.curve.points})
    s = stringy_series(d, -3)
    for t in s.terms:
        print(f"   L^{t.exponent}: {t.n_open} P + {t.n_special} T")

# nudging the last coefficient breaks canonicity
d = from_kstar("elliptic", genus=0, points=["0", "1", "inf"],
               divisor={"0": Fraction(1, 2), "1": Fraction(1, 3), "inf": Fraction(4, 5)})
r = classify(d)
print("1/2 [0] + 1/3 [1] + 4/5 [inf]: canonical", r.canonical, "witness", r.witnesses["canonical"])
