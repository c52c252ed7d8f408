from fractions import Fraction

import mpmath
import pytest

from minlat import formulas
from minlat.distance import Graph, wiener_moment_bfs
from minlat.posets import (
    double_tailed_diamond_lattice,
    order_ideals,
    rectangle_poset,
    staircase_poset,
)


@pytest.mark.parametrize("m,k,value", [(2, 2, 56), (1, 1, 2), (1, 2, 8), (2, 1, 8)])
def test_wiener_rectangle_examples(m, k, value):
    assert formulas.wiener_rectangle(m, k) == value


@pytest.mark.parametrize("n,value", [(1, 2), (2, 20), (3, 140)])
def test_wiener_staircase_examples(n, value):
    assert formulas.wiener_staircase(n) == value


@pytest.mark.parametrize("t,value", [(0, 16), (1, 56), (2, 140)])
def test_wiener_diamond_examples(t, value):
    assert formulas.wiener_diamond(t) == value


def test_wiener_exceptional():
    assert formulas.wiener_exceptional("E6") == 3584
    assert formulas.wiener_exceptional("E7") == 24048
    with pytest.raises(ValueError):
        formulas.wiener_exceptional("E8")


@pytest.mark.parametrize(
    "m,k,value",
    [(1, 1, 2), (1, 2, 12), (2, 1, 12), (2, 2, 128)],
)
def test_second_moment_rectangle_examples(m, k, value):
    assert formulas.second_moment_rectangle(m, k) == value


@pytest.mark.parametrize("n,value", [(1, 2), (2, 40), (3, 456)])
def test_second_moment_staircase_examples(n, value):
    assert formulas.second_moment_staircase(n) == value


def test_counts():
    assert formulas.count("rect", 2, 2) == 6
    assert formulas.count("stair", 3) == 8
    assert formulas.count("diamond", 0) == 4
    with pytest.raises(ValueError):
        formulas.count("cube", 3)


def test_invalid_parameters():
    for call in (
        lambda: formulas.wiener_rectangle(0, 1),
        lambda: formulas.wiener_staircase(0),
        lambda: formulas.wiener_diamond(-1),
        lambda: formulas.second_moment_rectangle(1, 0),
        lambda: formulas.second_moment_staircase(0),
    ):
        with pytest.raises(ValueError):
            call()


def test_exact_div_flags_non_integrality():
    assert formulas.exact_div(56, 8) == 7
    with pytest.raises(ArithmeticError):
        formulas.exact_div(56, 9)


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("k", range(1, 5))
def test_rectangle_formulas_match_brute_force(m, k):
    g = Graph.from_lattice(order_ideals(rectangle_poset(m, k)))
    assert formulas.wiener_rectangle(m, k) == wiener_moment_bfs(g)
    assert formulas.second_moment_rectangle(m, k) == wiener_moment_bfs(g, 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_staircase_formulas_match_brute_force(n):
    g = Graph.from_lattice(order_ideals(staircase_poset(n)))
    assert formulas.wiener_staircase(n) == wiener_moment_bfs(g)
    assert formulas.second_moment_staircase(n) == wiener_moment_bfs(g, 2)


@pytest.mark.parametrize("t", range(7))
def test_diamond_formula_matches_brute_force(t):
    g = Graph.from_lattice(double_tailed_diamond_lattice(t))
    assert formulas.wiener_diamond(t) == wiener_moment_bfs(g)


def test_mean_distance_exact():
    assert formulas.mean_distance_exact("rect", 1, 1) == Fraction(1, 2)
    assert formulas.mean_distance_exact("stair", 3) == Fraction(140, 64)


def test_scaled_mean_precision_and_sanity():
    value = formulas.scaled_mean("stair", 20)
    # 50-digit working precision, value near the limit 2/(3 sqrt(pi))
    assert mpmath.mp.dps >= 15
    target = 2 / (3 * mpmath.sqrt(mpmath.pi))
    assert abs(value / target - 1) < 0.25
    text = mpmath.nstr(value, 30)
    assert len(text.replace("0.", "")) >= 25


def test_scaled_mean_rect_uses_second_parameter():
    v1 = formulas.scaled_mean("rect", 4, 4)
    assert v1 > 0
    with pytest.raises(ValueError):
        formulas.scaled_mean("diamond", 3)


@pytest.mark.parametrize("n", range(31))
def test_staircase_recurrence_holds(n):
    assert formulas.staircase_recurrence_residual(n) == 0


def test_trend_toward_limit_constants():
    stair_target = 2 / (3 * mpmath.sqrt(mpmath.pi))
    rect_target = mpmath.sqrt(2 * mpmath.pi) / 4
    rel = lambda fam, *params, target: abs(formulas.scaled_mean(fam, *params) / target - 1)
    r25 = rel("rect", 25, 25, target=rect_target)
    r100 = rel("rect", 100, 100, target=rect_target)
    assert r100 < r25
    assert r100 < 0.1
    s25 = rel("stair", 25, target=stair_target)
    s100 = rel("stair", 100, target=stair_target)
    assert s100 < s25
    assert s100 < 0.1
