"""Colors: Cartan matrices, the coefficients a_alpha, and a color that breaks
the Q-Gorenstein property."""
from fractions import Fraction

from horosing import (ColoredPolyhedralDivisor, ColorRecord, Cone, CurveData, NotQGorenstein,
                      Polyhedron, RootSystemSpec, cartan_matrix, color_coefficients, solve_weight)

for kind, n in [("A", 3), ("B", 3), ("C", 3), ("G", 2)]:
    print(kind + str(n), cartan_matrix(kind, n))

print("A2, phi = {1,2}:", color_coefficients(RootSystemSpec([("A", 2)], [1, 2])))
print("A3, phi = {2}:  ", color_coefficients(RootSystemSpec([("A", 3)], [2])))
print("A3, phi = all:  ", color_coefficients(RootSystemSpec([("A", 3)], [1, 2, 3])))

tail = Cone([(1, 0), (0, 1)])
base = dict(rank=2, tail=tail, curve=CurveData(0, False, ("0",)),
            coefficients={"0": Polyhedron([(Fraction(1, 2), 0)], tail)})

# a = 2 on (1, 1) is compatible with the tail rays taking -1 each
w = solve_weight(ColoredPolyhedralDivisor(**base, colors=(ColorRecord("alpha", (1, 1), 2),)))
print("a = 2: m_0 =", [str(x) for x in w.form("0")])

try:
    solve_weight(ColoredPolyhedralDivisor(**base, colors=(ColorRecord("alpha", (1, 1), 3),)))
except NotQGorenstein as exc:
    print("a = 3:", exc.reason)
    for c in exc.constraints:
        print("   ", c)
