"""Published reference values: closed forms for small psi integrals, and rank
grids r(3g-3+n-e; g, n) for codimensions 2..6, genus 0..2, n = 1..10.
"""

from __future__ import annotations

from fractions import Fraction as F
from typing import Callable

from .poly import binom

# Normalized integral g! 24^g <tau_{a_1} ... tau_{a_k} tau_0^{...}>_g as a
# function of (g, d), where the exponent vector is (d, rest...).

def _row_d(g, d):
    return F(1)


def _row_d2(g, d):
    x = d + 2 - g
    return binom(x, 2) + F(g * (2 * g + 3), 5)


def _row_d3(g, d):
    x = d + 3 - g
    return binom(x, 3) + binom(x, 1) * F(g * (2 * g + 3), 5) - F(g * (8 * g**2 + 60 * g + 37), 105)


def _row_d4(g, d):
    x = d + 4 - g
    return (
        binom(x, 4)
        + binom(x, 2) * F(g * (2 * g + 3), 5)
        - binom(x, 1) * F(g * (8 * g**2 + 60 * g + 37), 105)
        + F(g * (g + 1) * (2 * g + 3) * (2 * g + 5), 70)
    )


def _row_d5(g, d):
    x = d + 5 - g
    return (
        binom(x, 5)
        + binom(x, 3) * F(g * (2 * g + 3), 5)
        - binom(x, 2) * F(g * (8 * g**2 + 60 * g + 37), 105)
        + binom(x, 1) * F(g * (g + 1) * (2 * g + 3) * (2 * g + 5), 70)
        - F(g * (2 * g + 3) * (8 * g**3 + 84 * g**2 + 55 * g + 84), 1155)
    )


def _row_d22(g, d):
    x = d + 4 - g
    return (
        6 * binom(x, 4)
        + binom(x, 2) * F(2 * g * (2 * g + 3), 5)
        + F(g * (4 * g**3 - 4 * g**2 - 41 * g - 9), 25)
    )


def _row_d222(g, d):
    x = d + 6 - g
    return (
        90 * binom(x, 6)
        + binom(x, 4) * F(18 * g * (2 * g + 3), 5)
        + binom(x, 2) * F(3 * g * (4 * g**3 - 4 * g**2 - 41 * g - 9), 25)
        + F(g * (8 * g**5 - 60 * g**4 - 70 * g**3 + 1275 * g**2 + 1067 * g + 30), 125)
    )


def _row_d2222(g, d):
    x = d + 8 - g
    return (
        2520 * binom(x, 8)
        + binom(x, 6) * F(360 * g * (2 * g + 3), 5)
        + binom(x, 4) * F(36 * g * (4 * g**3 - 4 * g**2 - 41 * g - 9), 25)
        + binom(x, 2) * F(4 * g * (8 * g**5 - 60 * g**4 - 70 * g**3 + 1275 * g**2 + 1067 * g + 30), 125)
        + F(
            g * (16 * g**7 - 288 * g**6 + 1192 * g**5 + 7440 * g**4 - 57671 * g**3
                 - 120522 * g**2 - 34677 * g - 20490),
            625,
        )
    )


def _row_d32(g, d):
    x = d + 5 - g
    return (
        10 * binom(x, 5)
        + binom(x, 3) * F(4 * g * (2 * g + 3), 5)
        - binom(x, 2) * F(g * (8 * g**2 + 60 * g + 37), 105)
        + binom(x, 1) * F(g * (4 * g**3 - 4 * g**2 - 41 * g - 9), 25)
        - F(g * (2 * g + 3) * (8 * g**3 + 12 * g**2 - 467 * g - 78), 525)
    )


def _row_d42(g, d):
    x = d + 6 - g
    return (
        15 * binom(x, 6)
        + binom(x, 4) * F(7 * g * (2 * g + 3), 5)
        - binom(x, 3) * F(3 * g * (8 * g**2 + 60 * g + 37), 105)
        + binom(x, 2) * F(g * (76 * g**3 + 44 * g**2 - 419 * g - 51), 350)
        - binom(x, 1) * F(g * (2 * g + 3) * (8 * g**3 + 12 * g**2 - 467 * g - 78), 525)
        + F(g * (g + 2) * (2 * g + 1) * (2 * g + 3) * (2 * g**2 - 11 * g - 61), 350)
    )


def _row_d33(g, d):
    x = d + 6 - g
    return (
        20 * binom(x, 6)
        + binom(x, 4) * F(8 * g * (2 * g + 3), 5)
        - binom(x, 3) * F(2 * g * (8 * g**2 + 60 * g + 37), 105)
        + binom(x, 2) * F(2 * g * (4 * g**3 - 4 * g**2 - 41 * g - 9), 25)
        - binom(x, 1) * F(2 * g * (2 * g + 3) * (8 * g**3 + 12 * g**2 - 467 * g - 78), 525)
        + F(g * (64 * g**5 + 384 * g**4 - 13376 * g**3 - 76224 * g**2 - 71315 * g - 15933), 11025)
    )


# (label, small parts appended to d, evaluator)
SMALL_PSI_ROWS: list[tuple[str, tuple[int, ...], Callable[[int, int], F]]] = [
    ("(d)", (), _row_d),
    ("(d,2)", (2,), _row_d2),
    ("(d,3)", (3,), _row_d3),
    ("(d,4)", (4,), _row_d4),
    ("(d,5)", (5,), _row_d5),
    ("(d,2,2)", (2, 2), _row_d22),
    ("(d,2,2,2)", (2, 2, 2), _row_d222),
    ("(d,2,2,2,2)", (2, 2, 2, 2), _row_d2222),
    ("(d,3,2)", (3, 2), _row_d32),
    ("(d,4,2)", (4, 2), _row_d42),
    ("(d,3,3)", (3, 3), _row_d33),
]


def block11_polynomial(g: int) -> F:
    """Closed form in g for the 11 x 11 codimension-one block determinant."""
    return -F(
        (g - 1) ** 2 * (4928 * g**4 - 275516 * g**3 - 437138 * g**2 + 62924 * g - 334941),
        12936 * 10**7,
    )


# RANK_GRIDS[e][g] = ranks for n = 1..10.  The fifth grid carries a repeated
# "Codimension=2" header in the source; by position it is codimension 6.
RANK_GRIDS: dict[int, dict[int, list[int]]] = {
    2: {
        0: [0, 0, 0, 0, 1, 1, 2, 3, 4, 5],
        1: [0, 1, 1, 2, 3, 5, 7, 10, 13, 17],
        2: [2, 3, 5, 7, 11, 15, 21, 28, 36, 45],
    },
    3: {
        0: [0, 0, 0, 0, 0, 1, 1, 2, 3, 5],
        1: [0, 0, 1, 1, 2, 3, 5, 7, 11, 15],
        2: [1, 2, 3, 5, 7, 11, 15, 22, 30, 42],
    },
    4: {
        0: [0, 0, 0, 0, 0, 0, 1, 1, 2, 3],
        1: [0, 0, 0, 1, 1, 2, 3, 5, 7, 11],
        2: [1, 1, 2, 3, 5, 7, 11, 15, 22, 30],
    },
    5: {
        0: [0, 0, 0, 0, 0, 0, 0, 1, 1, 2],
        1: [0, 0, 0, 0, 1, 1, 2, 3, 5, 7],
        2: [0, 1, 1, 2, 3, 5, 7, 11, 15, 22],
    },
    6: {
        0: [0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
        1: [0, 0, 0, 0, 0, 1, 1, 2, 3, 5],
        2: [0, 0, 1, 1, 2, 3, 5, 7, 11, 15],
    },
}


def published_rank(e: int, g: int, n: int):
    """Printed rank for (codim e, genus g, n points), or None outside the grids."""
    try:
        return RANK_GRIDS[e][g][n - 1]
    except (KeyError, IndexError):
        return None
