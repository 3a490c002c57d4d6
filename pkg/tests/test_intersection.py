from fractions import Fraction as F
from itertools import combinations_with_replacement
from math import comb, factorial

import pytest

from _oracles import string_reduce_genus0
from kapparing.intersection import (
    boundary_P,
    boundary_P_poly,
    genus0_closed,
    genus1_closed,
    psi_integral,
    psi_integral_recursive,
    q_sum,
    two_point,
    two_point_poly,
)
from kapparing.poly import binom, double_factorial


def keys(g, n):
    """All sorted exponent vectors on the dimension of M_{g,n}."""
    dim = 3 * g - 3 + n
    for c in combinations_with_replacement(range(dim + 1), n):
        if sum(c) == dim:
            yield list(c)


# --- psi_integral examples -------------------------------------------------

@pytest.mark.parametrize(
    "g, exps, value",
    [
        (0, [0, 0, 0], F(1)),
        (1, [1, 1, 1], F(1, 12)),
        (1, [2, 0], F(1, 24)),
        (2, [4], F(1, 1152)),
        (2, [3, 2], F(29, 5760)),
        (1, [2], F(0)),
    ],
)
def test_psi_examples(g, exps, value):
    assert psi_integral(g, exps) == value


def test_psi_genus3_known_values():
    # [DERIVED] standard genus-3 values; the first is 1/(24^3 3!) from n_0 = 1
    assert psi_integral(3, [7]) == F(1, 82944)
    assert psi_integral(3, [6, 2]) == F(77, 414720)
    assert psi_integral(3, [5, 3]) == F(503, 1451520)
    assert psi_integral(3, [4, 4]) == F(607, 1451520)


def test_unstable_and_empty_raise():
    with pytest.raises(ValueError, match="unstable moduli space"):
        psi_integral(0, [0, 0])
    with pytest.raises(ValueError, match="unstable moduli space"):
        psi_integral(0, [1])
    with pytest.raises(ValueError, match="empty"):
        psi_integral(1, [])


def test_relabeling_invariance():
    assert psi_integral(2, [3, 1, 0, 2]) == psi_integral(2, [0, 1, 2, 3])


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_closed_and_recursive_paths_agree(g):
    # [DERIVED] the recursive path never touches the closed forms
    for n in range(1, 9 - 2 * g):
        if 2 * g - 2 + n <= 0:
            continue
        for e in keys(g, n):
            assert psi_integral(g, e) == psi_integral_recursive(g, e), (g, e)


# --- closed forms ---------------------------------------------------------

def test_genus0_closed_examples():
    assert genus0_closed([0, 0, 0]) == 1
    assert genus0_closed([1, 1, 0, 0, 0]) == 2
    assert genus0_closed([3, 0, 0, 0, 0, 0]) == 1
    assert genus0_closed([1, 0, 0]) == 0
    with pytest.raises(ValueError):
        genus0_closed([0, 0])


def test_genus0_closed_vs_string_reduction():
    for n in range(3, 10):
        for e in keys(0, n):
            assert genus0_closed(e) == string_reduce_genus0(e)


def test_genus1_closed_examples():
    assert genus1_closed([1]) == F(1, 24)
    for n in range(1, 8):
        assert genus1_closed([1] * n) == F(factorial(n - 1), 24)
    assert genus1_closed([3, 0, 0]) == F(1, 24)
    assert genus1_closed([2]) == 0


# --- two-point family ------------------------------------------------------

def test_two_point_examples():
    assert two_point(0, 5, 2) == 10
    assert two_point(1, 4, 2) == 4
    assert two_point(2, 5, 2) == F(29, 5)


def test_two_point_genus0_is_binomial():
    for m in range(1, 10):
        for j in range(m + 1):
            assert two_point(0, m, j) == comb(m, j)


def test_two_point_out_of_range_points_to_poly():
    with pytest.raises(ValueError, match="two_point_poly"):
        two_point(2, 4, 1)


def test_two_point_poly_examples():
    m = [F(x) for x in range(-3, 8)]
    p0 = two_point_poly(0, 2)
    assert all(p0(x) == x * (x - 1) / 2 for x in m)
    p1 = two_point_poly(1, 2)
    assert all(p1(x) == (x * x - 3 * x + 4) / 2 for x in m)
    assert two_point_poly(1, 3)(2) == 0


def test_two_point_poly_degree_and_extension():
    for h in range(4):
        for j in range(7):
            poly = two_point_poly(h, j)
            assert poly.degree <= j
            start = max(3 * h - 1, j, 1)
            for m in range(start + j + 1, start + j + 4):
                assert poly(m) == two_point(h, m, j)


def test_q_sum_examples():
    for h in range(4):
        for m in range(-2, 9):
            assert q_sum(h, 0, m) == 1
    for m in range(-2, 9):
        assert q_sum(1, 3, m) == 1 + binom(m - 3, 3)
    assert q_sum(2, 5, 4) == 0


def test_boundary_P_examples():
    assert boundary_P(1, 0) == 1
    assert boundary_P(2, 1) == 3
    for h in range(1, 6):
        assert boundary_P(h, 1) == 2 * h - 1
    with pytest.raises(ValueError):
        boundary_P(1, 3)
    with pytest.raises(ValueError):
        boundary_P(0, 0)


def test_boundary_P_matches_two_point():
    for h in range(1, 4):
        for j in range(min(8, 3 * h - 1) + 1):
            assert boundary_P(h, j) == two_point(h, 3 * h - 1, j), (h, j)


def test_boundary_P_leading_coefficient():
    for j in range(9):
        poly = boundary_P_poly(j)
        assert poly.degree == j
        assert poly.leading == F(6**j, double_factorial(2 * j + 1))


def test_string_on_two_point_family():
    # [DERIVED] removing one tau_0 from n_j(h, m) lowers m by one on either point
    for h in range(3):
        for m in range(max(3 * h, 2), 3 * h + 5):
            for j in range(m + 1):
                npts = m - 3 * h + 3
                lhs = psi_integral(h, [m - j, j] + [0] * (npts - 2))
                rhs = F(0)
                if m - j > 0:
                    rhs += psi_integral(h, [m - j - 1, j] + [0] * (npts - 3))
                if j > 0:
                    rhs += psi_integral(h, [m - j, j - 1] + [0] * (npts - 3))
                assert lhs == rhs, (h, m, j)
