from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyvote.linalg import (
    DimensionError,
    decimal_string,
    determinant,
    dot,
    format_rational,
    parse_rational,
    rank,
    solve,
)

ints = st.integers(min_value=-6, max_value=6)


def square(n, draw_ints):
    return st.lists(st.lists(draw_ints, min_size=n, max_size=n), min_size=n, max_size=n)


def test_parse_and_format_round_trip():
    for text in ["3/4", "-3/4", "7", "-7", "0"]:
        assert format_rational(parse_rational(text)) == text


def test_parse_rejects_non_rational_literals():
    for bad in ["1.5", "3/4/5", "a", "", "1e3", "2/-3"]:
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_decimal_string_rounds_half_away_from_zero():
    assert decimal_string(F(1, 16)) == "0.06250"
    assert decimal_string(F(1, 32000)) == "0.00003"  # 0.00003125
    assert decimal_string(F(1, 2) + F(25, 10**7)) == "0.50000"
    assert decimal_string(F(5, 10**6)) == "0.00001"  # exact half rounds up
    assert decimal_string(F(-5, 10**6)) == "-0.00001"
    assert decimal_string(F(0)) == "0.00000"
    assert decimal_string(F(10631, 20736)) == "0.51268"


def test_determinant_identity():
    eye = [[F(int(i == j)) for j in range(5)] for i in range(5)]
    assert determinant(eye) == 1


def test_determinant_permutation_matrices():
    import itertools

    for perm in itertools.permutations(range(4)):
        mat = [[F(int(perm[i] == j)) for j in range(4)] for i in range(4)]
        sign = 1
        seen = [False] * 4
        for start in range(4):
            if seen[start]:
                continue
            length, j = 0, start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            sign *= -1 if length % 2 == 0 else 1
        assert determinant(mat) == sign


def test_determinant_repeated_row_is_zero():
    assert determinant([[1, 2, 3], [4, 5, 6], [1, 2, 3]]) == 0


def test_determinant_requires_square():
    with pytest.raises(DimensionError):
        determinant([[1, 2, 3], [4, 5, 6]])


def test_determinant_rational_entries():
    assert determinant([[F(1, 2), F(1, 3)], [F(1, 5), F(1, 7)]]) == F(1, 14) - F(1, 15)


def test_solve_identity():
    eye = [[F(int(i == j)) for j in range(3)] for i in range(3)]
    assert solve(eye, [F(2), F(-1), F(5, 3)]) == (F(2), F(-1), F(5, 3))


def test_solve_forced_by_elimination():
    assert solve([[1, 1], [1, -1]], [1, 0]) == (F(1, 2), F(1, 2))


def test_solve_singular_returns_none():
    assert solve([[1, 2], [2, 4]], [1, 1]) is None


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve([[1, 2], [3, 4]], [1, 2, 3])


def test_rank_basics():
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[F(int(i == j)) for j in range(4)] for i in range(4)]) == 4
    assert rank([[1, 2, 3], [2, 4, 6]]) == 1


def test_dot_checks_length():
    with pytest.raises(DimensionError):
        dot([1, 2], [1, 2, 3])


def _rank_oracle(rows):
    # plain fraction Gaussian elimination, independent of the production path
    mat = [[F(x) for x in row] for row in rows]
    r = 0
    for c in range(len(mat[0])):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, len(mat)):
            f = mat[i][c] / mat[r][c]
            mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
    return r


@given(square(3, ints), square(3, ints))
def test_determinant_is_multiplicative(a, b):
    ab = [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert determinant(ab) == determinant(a) * determinant(b)


@given(square(3, ints))
def test_determinant_alternates_on_row_swap(a):
    swapped = [a[1], a[0], a[2]]
    assert determinant(swapped) == -determinant(a)


@given(square(3, ints), st.lists(ints, min_size=3, max_size=3))
def test_solve_multiplies_back(a, b):
    x = solve(a, b)
    if x is None:
        assert determinant(a) == 0
    else:
        for row, rhs in zip(a, b):
            assert dot([F(v) for v in row], x) == rhs


@given(st.lists(st.lists(ints, min_size=4, max_size=4), min_size=2, max_size=5))
def test_rank_matches_oracle_and_transpose(rows):
    transpose = [list(col) for col in zip(*rows)]
    assert rank(rows) == _rank_oracle(rows)
    assert rank(rows) == rank(transpose)
