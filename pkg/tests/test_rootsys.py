import pytest
from hypothesis import given
from hypothesis import strategies as st

from horosing.errors import InvalidRank, InvalidSpec
from horosing.rootsys import RootSystemSpec, cartan_matrix, color_coefficients

VALID = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 6)] + [("C", n) for n in range(2, 6)] \
    + [("D", n) for n in range(3, 7)] + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


def test_cartan_examples():
    assert cartan_matrix("A", 2) == [[2, -1], [-1, 2]]
    assert cartan_matrix("B", 2) == [[2, -1], [-2, 2]]
    # alpha_1 short: <alpha_2, alpha_1^vee> = -3
    assert cartan_matrix("G", 2) == [[2, -3], [-1, 2]]
    assert cartan_matrix("C", 3) == [[2, -1, 0], [-1, 2, -2], [0, -1, 2]]
    assert cartan_matrix("F", 4)[1][2] == -1 and cartan_matrix("F", 4)[2][1] == -2


def test_b_and_c_are_transposes():
    for n in range(2, 7):
        b, c = cartan_matrix("B", n), cartan_matrix("C", n)
        assert c == [list(row) for row in zip(*b)]


def test_invalid_rank():
    for kind, n in [("E", 5), ("E", 9), ("F", 3), ("G", 3), ("D", 2), ("A", 0), ("B", 1)]:
        with pytest.raises(InvalidRank):
            cartan_matrix(kind, n)
    with pytest.raises(InvalidSpec):
        cartan_matrix("H", 3)


def test_color_examples():
    assert color_coefficients(RootSystemSpec([("A", 1)], [1])) == {1: 2}
    assert color_coefficients(RootSystemSpec([("A", 2)], [1, 2])) == {1: 1, 2: 1}
    assert color_coefficients(RootSystemSpec([("A", 3)], [2])) == {2: 2}
    # literal simple-root sum can vanish on a chain
    assert color_coefficients(RootSystemSpec([("A", 3)], [1, 2, 3]))[2] == 0


def test_color_errors():
    with pytest.raises(InvalidSpec):
        color_coefficients(RootSystemSpec([("A", 2)], [3]))
    with pytest.raises(InvalidSpec):
        color_coefficients(RootSystemSpec([], [1]))


def test_product_components_do_not_interact():
    spec = RootSystemSpec([("A", 1), ("A", 1)], [1, 2])
    assert color_coefficients(spec) == {1: 2, 2: 2}


@given(st.sampled_from(VALID), st.data())
def test_cartan_sign_pattern_and_singletons(kr, data):
    kind, n = kr
    c = cartan_matrix(kind, n)
    for i in range(n):
        assert c[i][i] == 2
        for j in range(n):
            if i != j:
                assert c[i][j] <= 0
                assert (c[i][j] == 0) == (c[j][i] == 0)
    a = data.draw(st.integers(1, n))
    assert color_coefficients(RootSystemSpec([kr], [a])) == {a: 2}
