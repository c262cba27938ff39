from fractions import Fraction as F

import pytest

from horosing.divisor import ColoredPolyhedralDivisor, ColorRecord, CurveData, from_kstar
from horosing.geometry import Cone, Polyhedron

# filled by the acceptance suite, echoed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


def e_series(i):
    """1/2 [0] + 1/3 [1] - (i-4)/(i-3) [inf] on P^1."""
    return from_kstar(
        "elliptic",
        genus=0,
        points=["0", "1", "inf"],
        divisor={"0": F(1, 2), "1": F(1, 3), "inf": -F(i - 4, i - 3)},
    )


def elliptic_p1(values):
    pts = [str(k) for k in range(len(values))]
    return from_kstar("elliptic", genus=0, points=pts, divisor=dict(zip(pts, values)))


@pytest.fixture
def e8():
    return e_series(8)


@pytest.fixture
def color_conflict():
    tail = Cone([(1, 0), (0, 1)])
    return ColoredPolyhedralDivisor(
        2, tail, CurveData(0, False, ("0",)),
        {"0": Polyhedron([(F(1, 2), 0)], tail)},
        (ColorRecord("alpha", (1, 1), 3),),
    )


@pytest.fixture
def hyperbolic_interval():
    tail = Cone((), rank=1)
    return ColoredPolyhedralDivisor(
        1, tail, CurveData(0, False, ("0",)), {"0": Polyhedron([(F(-1, 2),), (F(1, 3),)], tail)}
    )
