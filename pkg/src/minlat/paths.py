"""Lattice-path models, the step-pair bijection, and area statistics.

Up-down paths are ASCII strings over {U, D}; four-step words use
{U, D, 1, 2} where 1 and 2 are the two colors of flat step.  The
bijection maps an ordered pair of equal-length up-down paths to a single
four-step word whose height profile is half the height difference of
the pair.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator

UP = "U"
DOWN = "D"
FLAT1 = "1"
FLAT2 = "2"

_PAIR_TO_STEP = {("D", "U"): "U", ("U", "D"): "D", ("U", "U"): "1", ("D", "D"): "2"}
_STEP_TO_PAIR = {w: pq for pq, w in _PAIR_TO_STEP.items()}
_RISE = {"U": 1, "D": -1, "1": 0, "2": 0}


def ud_heights(p: str) -> list[int]:
    """Heights after each step of a U/D path (length len(p))."""
    h = 0
    out = []
    for s in p:
        if s == UP:
            h += 1
        elif s == DOWN:
            h -= 1
        else:
            raise ValueError(f"invalid step {s!r}")
        out.append(h)
    return out


def word_heights(w: str) -> list[int]:
    """Heights r_0..r_n of a four-step word, including r_0 = 0."""
    h = 0
    out = [0]
    for s in w:
        try:
            h += _RISE[s]
        except KeyError:
            raise ValueError(f"invalid step {s!r}") from None
        out.append(h)
    return out


def bijection_A(p: str, q: str) -> str:
    """Merge a pair of equal-length U/D paths into one four-step word."""
    if len(p) != len(q):
        raise ValueError("paths must have equal length")
    try:
        return "".join(_PAIR_TO_STEP[(a, b)] for a, b in zip(p, q))
    except KeyError:
        raise ValueError("paths must use steps U and D only") from None


def bijection_A_inverse(w: str) -> tuple[str, str]:
    """Split a four-step word back into the unique pair of U/D paths."""
    try:
        pairs = [_STEP_TO_PAIR[s] for s in w]
    except KeyError:
        raise ValueError("word must use steps U, D, 1, 2 only") from None
    return "".join(a for a, _ in pairs), "".join(b for _, b in pairs)


def area_d(w: str) -> Fraction:
    """Unsigned area |r_0|+...+|r_{n-1}| + |r_n|/2 below/above the axis."""
    h = word_heights(w)
    return Fraction(sum(abs(x) for x in h[:-1])) + Fraction(abs(h[-1]), 2)


def area_dbar(w: str) -> int:
    """Unsigned height sum |r_0|+...+|r_n|; exceeds area_d by |r_n|/2."""
    return sum(abs(x) for x in word_heights(w))


def rect_distance(p: str, q: str) -> int:
    """Hasse distance of two paths with equal step multisets.

    Equals the number of unit cells between the two paths, column by
    column, and coincides with area_d of the merged word.
    """
    if len(p) != len(q):
        raise ValueError("paths must have equal length")
    if p.count(UP) != q.count(UP):
        raise ValueError("paths must contain the same number of U steps")
    hp, hq = ud_heights(p), ud_heights(q)
    total = 0
    for a, b in zip(hp, hq):
        total += abs(b - a)
    assert total % 2 == 0
    return total // 2


def stair_distance(p: str, q: str) -> int:
    """Hasse distance of two free-endpoint paths of equal length.

    Sums |q_i - p_i| / 2 over all positions; coincides with area_dbar of
    the merged word.
    """
    if len(p) != len(q):
        raise ValueError("paths must have equal length")
    hp, hq = ud_heights(p), ud_heights(q)
    total = sum(abs(b - a) for a, b in zip(hp, hq))
    assert total % 2 == 0
    return total // 2


@dataclass(frozen=True)
class WordClass:
    """Membership flags of a four-step word in the four path classes.

    in_bilateral: ends on the axis (closed bilateral word)
    in_bicolored: closed and never below the axis
    in_bilateral_prefix: always true for a valid word
    in_bicolored_prefix: never below the axis
    length, k: word length and number of steps that are U or the first
    flat color.
    """

    in_bilateral: bool
    in_bicolored: bool
    in_bilateral_prefix: bool
    in_bicolored_prefix: bool
    length: int
    k: int


def classify(w: str) -> WordClass:
    h = word_heights(w)
    nonneg = all(x >= 0 for x in h)
    closed = h[-1] == 0
    k = sum(1 for s in w if s in (UP, FLAT1))
    return WordClass(
        in_bilateral=closed,
        in_bicolored=closed and nonneg,
        in_bilateral_prefix=True,
        in_bicolored_prefix=nonneg,
        length=len(w),
        k=k,
    )


def rect_paths(m: int, k: int) -> Iterator[str]:
    """All paths with m U steps and k D steps, i.e. the rectangle model."""
    n = m + k
    for ups in combinations(range(n), m):
        chars = [DOWN] * n
        for i in ups:
            chars[i] = UP
        yield "".join(chars)


def stair_words(n: int) -> Iterator[str]:
    """All 2^n U/D words of length n, i.e. the staircase model."""
    for bits in range(1 << n):
        yield "".join(UP if (bits >> i) & 1 else DOWN for i in range(n))


def four_step_words(n: int) -> Iterator[str]:
    """All 4^n words over {U, D, 1, 2}; the exhaustive oracle domain."""
    for tup in product("UD12", repeat=n):
        yield "".join(tup)


# --- canonical rectangle encoding -------------------------------------------
#
# An order ideal of the m-by-k grid poset is a staircase-shaped subset with
# row lengths k >= lambda_1 >= ... >= lambda_m >= 0 (row i of the grid uses
# indices (i-1)*k .. i*k-1).  The boundary path places the i-th U step at
# position i + k - lambda_i, so containment of ideals is exactly
# componentwise height order of the paths: the empty ideal maps to D^k U^m
# and the full ideal to U^m D^k.


def rect_ideal_to_path(mask: int, m: int, k: int) -> str:
    row_len = []
    for i in range(m):
        lam = 0
        while lam < k and (mask >> (i * k + lam)) & 1:
            lam += 1
        row_len.append(lam)
    chars = [DOWN] * (m + k)
    for i, lam in enumerate(row_len, start=1):
        chars[i + k - lam - 1] = UP
    return "".join(chars)


def rect_path_to_ideal(p: str, m: int, k: int) -> int:
    if len(p) != m + k or p.count(UP) != m:
        raise ValueError("path does not fit the rectangle model")
    mask = 0
    u_seen = 0
    for pos, s in enumerate(p, start=1):
        if s == UP:
            u_seen += 1
            lam = k - (pos - u_seen)
            for j in range(lam):
                mask |= 1 << ((u_seen - 1) * k + j)
    return mask
