from fractions import Fraction
from math import comb

import pytest

from minlat import formulas, paths, series
from minlat.series import TruncatedSeries


def test_from_terms_and_coefficient():
    f = TruncatedSeries.from_terms(3, {(0, 0): 1, (2, 1): Fraction(3, 2)})
    assert f.coefficient(0, 0) == 1
    assert f.coefficient(2, 1) == Fraction(3, 2)
    assert f.coefficient(2, 2) == 0
    with pytest.raises(IndexError):
        f.coefficient(4, 0)
    with pytest.raises(IndexError):
        f.coefficient(2, 3)


def test_sqrt_of_one_minus_four_x():
    f = TruncatedSeries.from_terms(10, {(0, 0): 1, (1, 0): -4}).sqrt()
    # binomial-series oracle: coefficient of x^n is C(1/2, n) (-4)^n
    coeff = Fraction(1)
    expected = [Fraction(1)]
    for n in range(1, 11):
        coeff *= (Fraction(1, 2) - (n - 1)) / n
        expected.append(coeff * (-4) ** n)
    assert [f.coefficient(n, 0) for n in range(11)] == expected
    assert f.coefficient(1, 0) == -2


def test_sqrt_squares_back():
    f = series._radicand(12)
    s = f.sqrt()
    assert (s * s).agrees_with(f, 12)


def test_sqrt_requires_unit_constant_term():
    with pytest.raises(ArithmeticError):
        TruncatedSeries.from_terms(4, {(0, 0): 4}).sqrt()


def test_mul_identity_and_commutativity():
    f = series.series_M(8)
    one = TruncatedSeries.one(8)
    assert (f * one).agrees_with(f, 8)
    g = series.series_W(8)
    assert (f * g).agrees_with(g * f, 8)


def test_division_roundtrip():
    f = series.series_W(10)
    g = series._radicand(10)
    assert f.div(f).agrees_with(TruncatedSeries.one(10), 10)
    assert (f * g).div(g).agrees_with(f, 10)
    with pytest.raises(ArithmeticError):
        TruncatedSeries.from_terms(4, {(1, 0): 1}).inverse()


def test_dx_product_rule_case():
    m = series.series_M(6)
    xm = m.mul_monomial(1, 0)
    d = xm.dx().eval_u1()
    assert d.coefficient(0, 0) == 1


def test_dx_xshift_matches_dx_of_xmul():
    f = series.series_M(8)
    via_shift = f.dx_xshift()
    via_dx = f.mul_monomial(1, 0).dx()
    assert via_shift.agrees_with(via_dx, 7)


def test_div_x_requires_divisibility():
    f = TruncatedSeries.from_terms(4, {(0, 0): 1})
    with pytest.raises(ArithmeticError):
        f.div_x(1)
    g = TruncatedSeries.from_terms(4, {(2, 0): 5, (3, 1): 7})
    shifted = g.div_x(2)
    assert shifted.order == 2
    assert shifted.coefficient(0, 0) == 5
    assert shifted.coefficient(1, 1) == 7
    with pytest.raises(ArithmeticError):
        TruncatedSeries.from_terms(4, {(2, 1): 5}).div_u(2)


def test_m_series_low_coefficients():
    m = series.series_M(4)
    assert m.coefficient(0, 0) == 1
    assert m.coefficient(1, 0) == 1
    assert m.coefficient(1, 1) == 1
    assert m.coefficient(2, 1) == 3


def test_mbold_low_coefficients():
    mb = series.series_Mbold(4)
    assert mb.coefficient(0, 0) == 0
    assert mb.coefficient(2, 1) == 1


def test_m2_low_coefficients():
    m2 = series.series_M2(4)
    assert m2.coefficient(0, 0) == 0
    assert m2.coefficient(2, 1) == 1  # only the single arch has positive area


def test_w2_low_coefficients():
    w2 = series.series_W2(4)
    assert w2.coefficient(2, 1) == 2  # the two one-arch words each have area 1


def test_prefix_series_low_coefficients():
    assert series.series_N(3).coefficient(1, 0) == 3
    assert series.series_V(3).coefficient(1, 0) == 4
    assert series.series_Nbold(3).coefficient(2, 0) == 10
    assert series.series_Vbold(3).coefficient(3, 0) == 140


def test_quadratic_residual_vanishes():
    order = 14
    m = series.series_M(order)
    one = TruncatedSeries.one(order)
    rhs = one + series._x_one_plus_u(m) + (m * m).mul_monomial(2, 1)
    assert m.agrees_with(rhs, order)


@pytest.mark.parametrize("name", sorted(series.SERIES_BUILDERS))
def test_dual_routes_agree(name):
    order = 12
    closed, fixedpoint, univariate = series.SERIES_BUILDERS[name]
    a, b = closed(order), fixedpoint(order)
    assert a.agrees_with(b, order)
    if univariate:
        assert a.is_univariate()
    a.check_u_degree_bound()


def test_w_coefficients_are_squared_binomials():
    w = series.series_W(12)
    for n in range(13):
        for k in range(n + 1):
            assert w.coefficient(n, k) == comb(n, k) ** 2


def test_wbold_gives_rectangle_wieners():
    wb = series.series_Wbold(14)
    for m in range(1, 8):
        for k in range(1, 8):
            if m + k <= 14:
                assert wb.coefficient(m + k, k) == formulas.wiener_rectangle(m, k)


def test_vbold_gives_staircase_wieners():
    vb = series.series_Vbold(12)
    for n in range(1, 13):
        assert vb.coefficient(n, 0) == formulas.wiener_staircase(n)


def test_w2_gives_rectangle_second_moments():
    w2 = series.series_W2(10)
    for m in range(1, 6):
        for k in range(1, 6):
            assert w2.coefficient(m + k, k) == formulas.second_moment_rectangle(m, k)


def test_area_identity_wbold_equals_scaled_fourth_power():
    order = 12
    lhs = series.series_Wbold(order)
    rhs = series.series_W(order).pow(4).mul_monomial(2, 1, 2)
    assert lhs.agrees_with(rhs, order)


def test_enumeration_oracle_small():
    order = 6
    m = series.series_M(order)
    mb = series.series_Mbold(order)
    m2 = series.series_M2(order)
    nb = series.series_Nbold(order)
    for n in range(order + 1):
        count = {}
        area = {}
        area2 = {}
        hsum = 0
        for w in paths.four_step_words(n):
            cls = paths.classify(w)
            if cls.in_bicolored:
                d = paths.area_d(w)
                count[cls.k] = count.get(cls.k, 0) + 1
                area[cls.k] = area.get(cls.k, 0) + d
                area2[cls.k] = area2.get(cls.k, 0) + d * d
            if cls.in_bicolored_prefix:
                hsum += paths.area_dbar(w)
        for k in range(n + 1):
            assert m.coefficient(n, k) == count.get(k, 0)
            assert mb.coefficient(n, k) == area.get(k, 0)
            assert m2.coefficient(n, k) == area2.get(k, 0)
        assert nb.coefficient(n, 0) == hsum


def test_univariate_series_have_no_u_terms():
    for name in ("N", "Nbold", "V", "Vbold"):
        builder, _, univariate = series.SERIES_BUILDERS[name]
        assert univariate
        assert builder(8).is_univariate()


def test_truncate_and_agrees_with_guard():
    f = series.series_W(8)
    g = f.truncate(5)
    assert g.order == 5
    with pytest.raises(ValueError):
        g.agrees_with(f, 8)
    with pytest.raises(ValueError):
        f.truncate(10)
