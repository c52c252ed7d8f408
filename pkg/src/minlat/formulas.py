"""Closed-form Wiener indices, second moments, and exact trend values.

Every product formula is evaluated in big integers with the divisions
asserted exact: a non-integral intermediate would mean the formula was
transcribed wrong, so it fails loudly instead of rounding.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

import mpmath

PRECISION_DPS = 50

FamilyName = str  # "rect" | "stair" | "diamond"


def exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def wiener_rectangle(m: int, k: int) -> int:
    """Wiener index of the lattice of order ideals in an m-by-k rectangle."""
    if m < 1 or k < 1:
        raise ValueError("rectangle dimensions must be positive")
    return exact_div(m * k * comb(2 * m + 2 * k + 2, 2 * k + 1), 4 * m + 4 * k + 2)


def wiener_staircase(n: int) -> int:
    """Wiener index of the lattice of order ideals in the n-th shifted staircase."""
    if n < 1:
        raise ValueError("staircase size must be positive")
    return exact_div(2 * n * (2 * n + 1) * comb(2 * n - 1, n), 3)


def wiener_diamond(t: int) -> int:
    """Wiener index of the double-tailed diamond with tail length t."""
    if t < 0:
        raise ValueError("tail length must be nonnegative")
    return exact_div(2 * (t + 3) * (4 * t * t + 9 * t + 8), 3)


WIENER_E6 = 3584
WIENER_E7 = 24048


def wiener_exceptional(kind: str) -> int:
    """Wiener index of the 27- and 56-element exceptional minuscule lattices."""
    try:
        return {"E6": WIENER_E6, "E7": WIENER_E7}[kind]
    except KeyError:
        raise ValueError(f"unknown exceptional type {kind!r}") from None


def second_moment_rectangle(m: int, k: int) -> int:
    """Sum of squared distances over ordered ideal pairs of the rectangle lattice."""
    if m < 1 or k < 1:
        raise ValueError("rectangle dimensions must be positive")
    poly = (
        7 * m * k * k
        + 7 * m * m * k
        + 3 * m * m
        + 10 * m * k
        + 3 * k * k
        + 3 * m
        + 3 * k
        + 4
    )
    num = (m + k + 1) * comb(m + k, m - 1) * comb(m + k, k - 1) * poly
    return exact_div(num, 30 * (m + k))


def second_moment_staircase(n: int) -> int:
    """Sum of squared distances over ordered ideal pairs of the staircase lattice."""
    if n < 1:
        raise ValueError("staircase size must be positive")
    poly = n * (20 + 15 * (n - 2) + 3 * (n - 2) * (n - 2))
    if n >= 2:
        return (1 << (2 * n - 4)) * poly
    return exact_div(poly, 1 << (4 - 2 * n))


def count(family: FamilyName, *params: int) -> int:
    """Number of lattice elements: rect(m, k), stair(n), or diamond(t)."""
    if family == "rect":
        (m, k) = params
        if m < 1 or k < 1:
            raise ValueError("rectangle dimensions must be positive")
        return comb(m + k, k)
    if family == "stair":
        (n,) = params
        if n < 1:
            raise ValueError("staircase size must be positive")
        return 1 << n
    if family == "diamond":
        (t,) = params
        if t < 0:
            raise ValueError("tail length must be nonnegative")
        return 2 * t + 4
    raise ValueError(f"unknown family {family!r}")


def wiener(family: FamilyName, *params: int) -> int:
    if family == "rect":
        return wiener_rectangle(*params)
    if family == "stair":
        return wiener_staircase(*params)
    if family == "diamond":
        return wiener_diamond(*params)
    raise ValueError(f"unknown family {family!r}")


def mean_distance_exact(family: FamilyName, *params: int) -> Fraction:
    """Exact mean distance between two uniform lattice elements: wiener/count^2."""
    return Fraction(wiener(family, *params), count(family, *params) ** 2)


def scaled_mean(family: FamilyName, *params: int) -> mpmath.mpf:
    """Mean distance divided by n^(3/2), at 50 significant digits.

    For rectangles the second parameter plays the role of n (so the
    aspect ratio is m/k); for staircases the single parameter is n.
    """
    ratio = mean_distance_exact(family, *params)
    if family == "rect":
        n = params[1]
    elif family == "stair":
        n = params[0]
    else:
        raise ValueError("scaled mean applies to rect and stair families")
    with mpmath.workdps(PRECISION_DPS):
        return mpmath.mpf(ratio.numerator) / mpmath.mpf(ratio.denominator) / mpmath.power(n, mpmath.mpf(3) / 2)


def staircase_recurrence_residual(n: int) -> Fraction:
    """Residual of the three-term recurrence the staircase Wiener numbers satisfy.

    With a_j the staircase Wiener index (a_0 = 0), returns
    (2n+3) 2^(-2n-1) a_n - (4n+5) 2^(-2n-3) a_(n+1) + (2n+2) 2^(-2n-5) a_(n+2),
    which must vanish for every n >= 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")

    def a(j: int) -> int:
        return 0 if j == 0 else wiener_staircase(j)

    return (
        (2 * n + 3) * Fraction(a(n), 1 << (2 * n + 1))
        - (4 * n + 5) * Fraction(a(n + 1), 1 << (2 * n + 3))
        + (2 + 2 * n) * Fraction(a(n + 2), 1 << (2 * n + 5))
    )
