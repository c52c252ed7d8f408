"""Truncated bivariate power series with exact rational coefficients.

A series is stored densely per x-degree: row n holds the u-polynomial
coefficient of x^n.  Truncation in x is the only approximation; all
arithmetic is exact.  On top of the arithmetic, this module builds the
ten generating functions of the path model by two independent routes
each: an explicit closed form (radicals and rational operations) and a
fixed-point iteration on the first-return functional equation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)

Row = tuple[Fraction, ...]


def _trim(row: list[Fraction]) -> Row:
    while row and row[-1] == 0:
        row.pop()
    return tuple(row)


def _padd(a: Row, b: Row) -> Row:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _pmul(a: Row, b: Row) -> Row:
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _pscale(a: Row, c: Fraction) -> Row:
    if not c:
        return ()
    return tuple(v * c for v in a)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in x (truncated at ``order``) and u (exact polynomials)."""

    order: int
    rows: tuple[Row, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.rows) != self.order + 1:
            raise ValueError("row count must equal order + 1")

    # --- constructors ---------------------------------------------------

    @staticmethod
    def zero(order: int) -> "TruncatedSeries":
        return TruncatedSeries(order, tuple(() for _ in range(order + 1)))

    @staticmethod
    def one(order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_terms(order, {(0, 0): 1})

    @staticmethod
    def from_terms(order: int, terms: dict) -> "TruncatedSeries":
        rows: list[list[Fraction]] = [[] for _ in range(order + 1)]
        for (n, k), c in terms.items():
            if n < 0 or k < 0:
                raise ValueError("degrees must be nonnegative")
            if n > order:
                continue
            row = rows[n]
            while len(row) <= k:
                row.append(_ZERO)
            row[k] += Fraction(c)
        return TruncatedSeries(order, tuple(_trim(r) for r in rows))

    # --- inspection -----------------------------------------------------

    def coefficient(self, n: int, k: int) -> Fraction:
        """Exact coefficient of x^n u^k."""
        if not 0 <= n <= self.order:
            raise IndexError(f"x-degree {n} out of range (order {self.order})")
        if k < 0 or k > n:
            raise IndexError(f"u-degree {k} out of range for x-degree {n}")
        row = self.rows[n]
        return row[k] if k < len(row) else _ZERO

    def is_univariate(self) -> bool:
        return all(len(r) <= 1 for r in self.rows)

    def check_u_degree_bound(self) -> "TruncatedSeries":
        """Assert u-degree of row n never exceeds n (holds for this family)."""
        for n, row in enumerate(self.rows):
            if len(row) > n + 1:
                raise AssertionError(
                    f"u-degree {len(row) - 1} exceeds x-degree {n}"
                )
        return self

    def agrees_with(self, other: "TruncatedSeries", order: int | None = None) -> bool:
        """Coefficientwise equality up to the given (or common) order."""
        if order is None:
            order = min(self.order, other.order)
        if order > min(self.order, other.order):
            raise ValueError("comparison order exceeds a series' truncation")
        return self.rows[: order + 1] == other.rows[: order + 1]

    # --- ring operations --------------------------------------------------

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(order, self.rows[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            order,
            tuple(_padd(a, b) for a, b in zip(self.rows[: order + 1], other.rows[: order + 1])),
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(_pscale(r, Fraction(-1)) for r in self.rows))

    def scale(self, c) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries(self.order, tuple(_pscale(r, c) for r in self.rows))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        rows: list[Row] = []
        for n in range(order + 1):
            acc: Row = ()
            for i in range(n + 1):
                a = self.rows[i]
                b = other.rows[n - i]
                if a and b:
                    acc = _padd(acc, _pmul(a, b))
            rows.append(acc)
        return TruncatedSeries(order, tuple(rows))

    def pow(self, e: int) -> "TruncatedSeries":
        if e < 0:
            raise ValueError("negative powers go through div")
        result = TruncatedSeries.one(self.order)
        for _ in range(e):
            result = result * self
        return result

    def mul_monomial(self, dx_: int, du: int, c=1) -> "TruncatedSeries":
        """Multiply by c * x^dx_ * u^du, truncating at the same order."""
        c = Fraction(c)
        rows: list[Row] = [() for _ in range(self.order + 1)]
        for n, row in enumerate(self.rows):
            if n + dx_ > self.order:
                break
            if row:
                rows[n + dx_] = _trim([_ZERO] * du + [v * c for v in row])
        return TruncatedSeries(self.order, tuple(rows))

    # --- exact division helpers -----------------------------------------

    def div_x(self, j: int) -> "TruncatedSeries":
        """Divide by x^j; the low rows must vanish.  Order drops by j."""
        if any(self.rows[n] for n in range(j)):
            raise ArithmeticError(f"series is not divisible by x^{j}")
        return TruncatedSeries(self.order - j, self.rows[j:])

    def div_u(self, j: int = 1) -> "TruncatedSeries":
        """Divide by u^j; every row must have u-valuation >= j."""
        rows = []
        for n, row in enumerate(self.rows):
            if any(row[:j]):
                raise ArithmeticError(f"row {n} is not divisible by u^{j}")
            rows.append(row[j:])
        return TruncatedSeries(self.order, tuple(rows))

    # --- calculus ---------------------------------------------------------

    def dx(self) -> "TruncatedSeries":
        """Derivative in x; the truncation order drops by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 truncation")
        return TruncatedSeries(
            self.order - 1,
            tuple(_pscale(self.rows[n + 1], Fraction(n + 1)) for n in range(self.order)),
        )

    def dx_xshift(self, repeat: int = 1) -> "TruncatedSeries":
        """d/dx (x * .) applied ``repeat`` times; exact at every order.

        Coefficientwise this maps row n to (n+1)^repeat times itself, so
        unlike ``dx`` it loses no truncation order.
        """
        return TruncatedSeries(
            self.order,
            tuple(
                _pscale(row, Fraction((n + 1) ** repeat))
                for n, row in enumerate(self.rows)
            ),
        )

    # --- multiplicative inverses and square roots -------------------------

    def _constant_term(self) -> Fraction:
        row0 = self.rows[0]
        if len(row0) > 1:
            raise ArithmeticError("constant x-row must not involve u")
        return row0[0] if row0 else _ZERO

    def inverse(self) -> "TruncatedSeries":
        c = self._constant_term()
        if c == 0:
            raise ArithmeticError("series with zero constant term has no inverse")
        inv_c = 1 / c
        rows: list[Row] = [(inv_c,)]
        for n in range(1, self.order + 1):
            acc: Row = ()
            for i in range(n):
                b = self.rows[n - i]
                if rows[i] and b:
                    acc = _padd(acc, _pmul(rows[i], b))
            rows.append(_pscale(acc, -inv_c))
        return TruncatedSeries(self.order, tuple(rows))

    def div(self, denominator: "TruncatedSeries") -> "TruncatedSeries":
        return self * denominator.inverse()

    def sqrt(self) -> "TruncatedSeries":
        """Square root of a series with constant term exactly 1."""
        if self._constant_term() != 1 or len(self.rows[0]) != 1:
            raise ArithmeticError("sqrt requires constant term exactly 1")
        rows: list[Row] = [(Fraction(1),)]
        for n in range(1, self.order + 1):
            acc = self.rows[n]
            for i in range(1, n):
                if rows[i] and rows[n - i]:
                    acc = _padd(acc, _pscale(_pmul(rows[i], rows[n - i]), Fraction(-1)))
            rows.append(_pscale(acc, _HALF))
        return TruncatedSeries(self.order, tuple(rows))

    # --- specialization ----------------------------------------------------

    def eval_u1(self) -> "TruncatedSeries":
        """Substitute u = 1, collapsing each row to its coefficient sum."""
        rows = tuple(_trim([sum(row, _ZERO)]) for row in self.rows)
        return TruncatedSeries(self.order, rows)


def fixed_point(
    update: Callable[[TruncatedSeries], TruncatedSeries], order: int
) -> TruncatedSeries:
    """Iterate F -> update(F) from 0 exactly order+1 times.

    Each application of the update gains at least one correct x-order
    because every occurrence of the unknown is multiplied by x, so
    order+1 rounds pin all retained coefficients.
    """
    f = TruncatedSeries.zero(order)
    for _ in range(order + 1):
        f = update(f)
    return f


# --- shared building blocks --------------------------------------------------


def _radicand(order: int) -> TruncatedSeries:
    # (u-1)^2 x^2 - 2(u+1) x + 1
    return TruncatedSeries.from_terms(
        order, {(0, 0): 1, (1, 0): -2, (1, 1): -2, (2, 0): 1, (2, 1): -2, (2, 2): 1}
    )


def _sqrt_one_minus_4x(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_terms(order, {(0, 0): 1, (1, 0): -4}).sqrt()


def _one_minus_4x(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_terms(order, {(0, 0): 1, (1, 0): -4})


# --- closed forms -------------------------------------------------------------


@lru_cache(maxsize=64)
def series_M(order: int) -> TruncatedSeries:
    """Bicolored-path counting series, closed form."""
    work = order + 2
    s = _radicand(work).sqrt()
    num = TruncatedSeries.from_terms(work, {(0, 0): 1, (1, 0): -1, (1, 1): -1}) - s
    return num.div_x(2).div_u(1).scale(_HALF).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_Mbold(order: int) -> TruncatedSeries:
    """Area-weighted bicolored-path series, closed form."""
    work = order + 2
    r = _radicand(work)
    s = r.sqrt()
    lead = TruncatedSeries.from_terms(
        work, {(2, 0): 1, (2, 2): 1, (1, 0): -1, (1, 1): -1}
    )
    shift = TruncatedSeries.from_terms(work, {(1, 0): 1, (1, 1): 1, (0, 0): -1})
    num = lead + shift * (s - TruncatedSeries.one(work))
    return num.div(r).div_x(2).div_u(1).scale(_HALF).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_W(order: int) -> TruncatedSeries:
    """Bilateral-path counting series, closed form: 1/sqrt of the radicand."""
    return _radicand(order).sqrt().inverse().check_u_degree_bound()


@lru_cache(maxsize=64)
def series_Wbold(order: int) -> TruncatedSeries:
    """Area-weighted bilateral-path series, closed form: 2 u x^2 / radicand^2."""
    r = _radicand(order)
    return (r * r).inverse().mul_monomial(2, 1, 2).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_N(order: int) -> TruncatedSeries:
    """Nonnegative-prefix counting series, closed form."""
    s = _sqrt_one_minus_4x(order)
    denom = _one_minus_4x(order) + s
    return TruncatedSeries.from_terms(order, {(0, 0): 2}).div(denom).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_Nbold(order: int) -> TruncatedSeries:
    """Height-sum-weighted nonnegative-prefix series, closed form."""
    s = _sqrt_one_minus_4x(order)
    one = TruncatedSeries.one(order)
    x = TruncatedSeries.from_terms(order, {(1, 0): 1})
    num = (one + s - x * (one - s)).mul_monomial(1, 0, 4)
    denom = s * (_one_minus_4x(order) + s).pow(3)
    return num.div(denom).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_V(order: int) -> TruncatedSeries:
    """Free-prefix counting series, closed form."""
    s = _sqrt_one_minus_4x(order)
    num = TruncatedSeries.one(order) + s
    denom = s * (_one_minus_4x(order) + s)
    return num.div(denom).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_Vbold(order: int) -> TruncatedSeries:
    """Height-sum-weighted free-prefix series, closed form.

    Its x^n coefficient is the Wiener index of the n-th staircase lattice.
    """
    s = _sqrt_one_minus_4x(order)
    one = TruncatedSeries.one(order)
    x = TruncatedSeries.from_terms(order, {(1, 0): 1})
    three = TruncatedSeries.from_terms(order, {(0, 0): 3})
    num = (one + s - x * (three + s)).mul_monomial(1, 0, 8)
    denom = _one_minus_4x(order) * (_one_minus_4x(order) + s).pow(3)
    return num.div(denom).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_W2(order: int) -> TruncatedSeries:
    """Squared-area-weighted bilateral-path series, closed form."""
    r = _radicand(order)
    num = TruncatedSeries.from_terms(
        order,
        {
            (3, 0): 1, (3, 1): -1, (3, 2): -1, (3, 3): 1,
            (2, 0): -1, (2, 1): 8, (2, 2): -1,
            (1, 0): -1, (1, 1): -1,
            (0, 0): 1,
        },
    )
    denom_inv = (r.pow(3) * r.sqrt()).inverse()
    return (num * denom_inv).mul_monomial(2, 1, 2).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_M2(order: int) -> TruncatedSeries:
    """Squared-area-weighted bicolored-path series.

    No full closed form is available, so the primary construction back-
    solves the pair functional equation from the closed form of the
    bilateral squared-area series; see series_M2_fixedpoint for the
    direct route.
    """
    work = order + 2
    m = series_M(work)
    mb = series_Mbold(work)
    w = series_W(work)
    wb = series_Wbold(work)
    w2 = series_W2(work)

    # sigma' = W2 * (1 - (u+1)x) / (2 u x^2)
    shift = TruncatedSeries.from_terms(work, {(0, 0): 1, (1, 0): -1, (1, 1): -1})
    sigma = (w2 * shift).div_x(2).div_u(1).scale(_HALF)
    rest = (
        w2.truncate(order) * m.truncate(order)
        + w.truncate(order) * m.dx_xshift(2).truncate(order)
        + (w.truncate(order) * mb.dx_xshift().truncate(order)).scale(2)
        + (wb.truncate(order) * m.dx_xshift().truncate(order)).scale(2)
        + (mb.truncate(order) * wb.truncate(order)).scale(2)
    )
    return (sigma.truncate(order) - rest).div(w.truncate(order)).check_u_degree_bound()


# --- fixed-point routes --------------------------------------------------------


def _x_one_plus_u(f: TruncatedSeries) -> TruncatedSeries:
    return f.mul_monomial(1, 0) + f.mul_monomial(1, 1)


@lru_cache(maxsize=64)
def series_M_fixedpoint(order: int) -> TruncatedSeries:
    one = TruncatedSeries.one(order)

    def update(f):
        return one + _x_one_plus_u(f) + (f * f).mul_monomial(2, 1)

    return fixed_point(update, order).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_Mbold_fixedpoint(order: int) -> TruncatedSeries:
    m = series_M_fixedpoint(order)
    const = (m * m.dx_xshift()).mul_monomial(2, 1)

    def update(f):
        return _x_one_plus_u(f) + (m * f).mul_monomial(2, 1, 2) + const

    return fixed_point(update, order).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_W_fixedpoint(order: int) -> TruncatedSeries:
    m = series_M_fixedpoint(order)
    one = TruncatedSeries.one(order)

    def update(f):
        return one + _x_one_plus_u(f) + (m * f).mul_monomial(2, 1, 2)

    return fixed_point(update, order).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_Wbold_fixedpoint(order: int) -> TruncatedSeries:
    m = series_M_fixedpoint(order)
    mb = series_Mbold_fixedpoint(order)
    w = series_W_fixedpoint(order)
    const = ((mb * w) + (w * m.dx_xshift())).mul_monomial(2, 1, 2)

    def update(f):
        return _x_one_plus_u(f) + (m * f).mul_monomial(2, 1, 2) + const

    return fixed_point(update, order).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_N_fixedpoint(order: int) -> TruncatedSeries:
    m1 = series_M_fixedpoint(order).eval_u1()
    one = TruncatedSeries.one(order)

    def update(f):
        return one + f.mul_monomial(1, 0, 3) + (m1 * f).mul_monomial(2, 0)

    return fixed_point(update, order).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_Nbold_fixedpoint(order: int) -> TruncatedSeries:
    """Direct route for the height-sum-weighted nonnegative-prefix series.

    First-touch decomposition: a prefix either rides the axis only at the
    start (empty, or an up step followed by a shifted prefix) or returns
    to the axis after a flat step or an arch.  Weighting each piece by
    the height sum gives

        Nb = 3x Nb + x^2 (Mb N + M Nb + N d/dx(x M)) + x d/dx(x N)

    with M, Mb the closed-path series at u = 1 and N the prefix count.
    """
    m1 = series_M_fixedpoint(order).eval_u1()
    mb1 = series_Mbold_fixedpoint(order).eval_u1()
    n = series_N_fixedpoint(order)
    const = ((mb1 * n) + (n * m1.dx_xshift())).mul_monomial(2, 0) + n.dx_xshift().mul_monomial(1, 0)

    def update(f):
        return f.mul_monomial(1, 0, 3) + (m1 * f).mul_monomial(2, 0) + const

    return fixed_point(update, order).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_V_fixedpoint(order: int) -> TruncatedSeries:
    m1 = series_M_fixedpoint(order).eval_u1()
    n = series_N_fixedpoint(order)
    const = TruncatedSeries.one(order) + n.mul_monomial(1, 0, 2)

    def update(f):
        return f.mul_monomial(1, 0, 2) + (m1 * f).mul_monomial(2, 0, 2) + const

    return fixed_point(update, order).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_Vbold_fixedpoint(order: int) -> TruncatedSeries:
    m1 = series_M_fixedpoint(order).eval_u1()
    mb1 = series_Mbold_fixedpoint(order).eval_u1()
    n = series_N_fixedpoint(order)
    nb = series_Nbold_fixedpoint(order)
    v = series_V_fixedpoint(order)
    const = (
        ((mb1 * v) + (v * m1.dx_xshift())).mul_monomial(2, 0, 2)
        + nb.mul_monomial(1, 0, 2)
        + n.dx_xshift().mul_monomial(1, 0, 2)
    )

    def update(f):
        return f.mul_monomial(1, 0, 2) + (m1 * f).mul_monomial(2, 0, 2) + const

    return fixed_point(update, order).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_M2_fixedpoint(order: int) -> TruncatedSeries:
    m = series_M_fixedpoint(order)
    mb = series_Mbold_fixedpoint(order)
    const = (
        m * m.dx_xshift(2)
        + (m * mb.dx_xshift()).scale(2)
        + (mb * m.dx_xshift()).scale(2)
        + (mb * mb).scale(2)
    ).mul_monomial(2, 1)

    def update(f):
        return _x_one_plus_u(f) + (m * f).mul_monomial(2, 1, 2) + const

    return fixed_point(update, order).check_u_degree_bound()


@lru_cache(maxsize=64)
def series_W2_fixedpoint(order: int) -> TruncatedSeries:
    m = series_M_fixedpoint(order)
    mb = series_Mbold_fixedpoint(order)
    w = series_W_fixedpoint(order)
    wb = series_Wbold_fixedpoint(order)
    m2 = series_M2_fixedpoint(order)
    const = (
        m2 * w
        + w * m.dx_xshift(2)
        + (w * mb.dx_xshift()).scale(2)
        + (wb * m.dx_xshift()).scale(2)
        + (mb * wb).scale(2)
    ).mul_monomial(2, 1, 2)

    def update(f):
        return _x_one_plus_u(f) + (m * f).mul_monomial(2, 1, 2) + const

    return fixed_point(update, order).check_u_degree_bound()


SERIES_BUILDERS: dict[str, tuple[Callable[[int], TruncatedSeries], Callable[[int], TruncatedSeries], bool]] = {
    # name -> (primary/closed route, fixed-point route, univariate flag)
    "M": (series_M, series_M_fixedpoint, False),
    "Mbold": (series_Mbold, series_Mbold_fixedpoint, False),
    "W": (series_W, series_W_fixedpoint, False),
    "Wbold": (series_Wbold, series_Wbold_fixedpoint, False),
    "N": (series_N, series_N_fixedpoint, True),
    "Nbold": (series_Nbold, series_Nbold_fixedpoint, True),
    "V": (series_V, series_V_fixedpoint, True),
    "Vbold": (series_Vbold, series_Vbold_fixedpoint, True),
    "M2": (series_M2, series_M2_fixedpoint, False),
    "W2": (series_W2, series_W2_fixedpoint, False),
}
