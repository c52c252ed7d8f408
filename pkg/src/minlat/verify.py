"""Named cross-checks over every module, grouped into suites.

Each check compares an expected and an actual value; the CLI renders
the results as JSON and signals failure through its exit status.  The
suites mirror the acceptance criteria, with `all` running everything.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable

import networkx as nx

from . import distance, formulas, montecarlo, paths, posets, series, weyl

SUITES = ("bijection", "series", "formulas", "weyl", "moments")

MC_SEED = 20260809
MC_SAMPLES = 100_000
MC_SIZE = 400


def _record(checks: list, name: str, expected, actual, ok: bool | None = None):
    if ok is None:
        ok = expected == actual
    checks.append(
        {"name": name, "expected": str(expected), "actual": str(actual), "passed": bool(ok)}
    )


def _nx_graph(g: distance.Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n_vertices))
    for v, nbrs in enumerate(g.adjacency):
        for w in nbrs:
            if v < w:
                out.add_edge(v, w)
    return out


def _isomorphic(a: distance.Graph, b: distance.Graph) -> bool:
    return nx.is_isomorphic(_nx_graph(a), _nx_graph(b))


def _rect_lattice(m: int, k: int) -> posets.IdealLattice:
    return posets.order_ideals(posets.rectangle_poset(m, k))


def _stair_lattice(n: int) -> posets.IdealLattice:
    return posets.order_ideals(posets.staircase_poset(n))


# --- formulas ------------------------------------------------------------------


def suite_formulas() -> list[dict]:
    checks: list[dict] = []

    # golden values by all four methods
    r22 = _rect_lattice(2, 2)
    s3 = _stair_lattice(3)
    reports_22 = (
        distance.wiener_report(distance.Graph.from_lattice(r22), 1, "bfs"),
        distance.wiener_report(r22, 1, "symmetric_difference"),
        distance.WienerReport(1, formulas.wiener_rectangle(2, 2), "closed_form"),
        distance.WienerReport(1, int(series.series_Wbold(4).coefficient(4, 2)), "series"),
    )
    for report in reports_22:
        _record(checks, f"rect(2,2) wiener via {report.method}", 56, report.value)
    reports_s3 = (
        distance.wiener_report(distance.Graph.from_lattice(s3), 1, "bfs"),
        distance.wiener_report(s3, 1, "symmetric_difference"),
        distance.WienerReport(1, formulas.wiener_staircase(3), "closed_form"),
        distance.WienerReport(1, int(series.series_Vbold(3).coefficient(3, 0)), "series"),
    )
    for report in reports_s3:
        _record(checks, f"stair(3) wiener via {report.method}", 140, report.value)

    # closed formulas against both brute-force routes
    for m in range(1, 7):
        for k in range(1, 7):
            lat = _rect_lattice(m, k)
            g = distance.Graph.from_lattice(lat)
            _record(
                checks,
                f"rect({m},{k}) wiener formula == bfs == symdiff",
                formulas.wiener_rectangle(m, k),
                (distance.wiener_moment_bfs(g), distance.wiener_moment_symdiff(lat)),
                ok=formulas.wiener_rectangle(m, k)
                == distance.wiener_moment_bfs(g)
                == distance.wiener_moment_symdiff(lat),
            )
    for n in range(1, 13):
        lat = _stair_lattice(n)
        g = distance.Graph.from_lattice(lat)
        _record(
            checks,
            f"stair({n}) wiener formula == bfs == symdiff",
            formulas.wiener_staircase(n),
            (distance.wiener_moment_bfs(g), distance.wiener_moment_symdiff(lat)),
            ok=formulas.wiener_staircase(n)
            == distance.wiener_moment_bfs(g)
            == distance.wiener_moment_symdiff(lat),
        )
    for t in range(11):
        lat = posets.double_tailed_diamond_lattice(t)
        g = distance.Graph.from_lattice(lat)
        _record(
            checks,
            f"diamond({t}) wiener formula == bfs",
            formulas.wiener_diamond(t),
            distance.wiener_moment_bfs(g),
        )

    # second moments
    for m in range(1, 6):
        for k in range(1, 6):
            g = distance.Graph.from_lattice(_rect_lattice(m, k))
            _record(
                checks,
                f"rect({m},{k}) squared-distance formula == bfs",
                formulas.second_moment_rectangle(m, k),
                distance.wiener_moment_bfs(g, 2),
            )
    for n in range(1, 11):
        g = distance.Graph.from_lattice(_stair_lattice(n))
        _record(
            checks,
            f"stair({n}) squared-distance formula == bfs",
            formulas.second_moment_staircase(n),
            distance.wiener_moment_bfs(g, 2),
        )

    # element counts
    for m in range(1, 7):
        for k in range(1, 7):
            _record(
                checks,
                f"rect({m},{k}) ideal count == C(m+k,k)",
                formulas.count("rect", m, k),
                len(_rect_lattice(m, k)),
            )
    for n in range(1, 13):
        _record(
            checks,
            f"stair({n}) ideal count == 2^n",
            formulas.count("stair", n),
            len(_stair_lattice(n)),
        )

    # recurrence satisfied by the staircase numbers
    residuals = [formulas.staircase_recurrence_residual(n) for n in range(31)]
    _record(
        checks,
        "staircase recurrence residual == 0 for n <= 30",
        0,
        max(abs(r) for r in residuals),
    )
    return checks


def suite_trend() -> list[dict]:
    """Exact asymptotic trend of the scaled mean distance (no sampling)."""
    checks: list[dict] = []
    for family, target in (
        ("rect", montecarlo.limit_moments("rect", 1, 1)),
        ("stair", montecarlo.limit_moments("stair", 1)),
    ):
        rel = {}
        for n in (25, 50, 100):
            params = (n, n) if family == "rect" else (n,)
            value = formulas.scaled_mean(family, *params)
            rel[n] = abs(value / target - 1)
        _record(
            checks,
            f"{family} scaled mean within 10% of limit at n=100",
            "<= 0.1",
            float(rel[100]),
            ok=rel[100] <= 0.1,
        )
        _record(
            checks,
            f"{family} scaled-mean gap decreases over n=25,50,100",
            "decreasing",
            [float(rel[n]) for n in (25, 50, 100)],
            ok=rel[25] > rel[50] > rel[100],
        )
    return checks


# --- weyl ----------------------------------------------------------------------


def suite_weyl() -> list[dict]:
    checks: list[dict] = []

    # A-type orbits match rectangles
    for total in range(2, 9):
        for m in range(1, total):
            k = total - m
            lat = weyl.minuscule_weight_lattice(weyl.cartan("A", total - 1), m)
            _record(checks, f"A{total-1} node {m} orbit size", comb(total, m), len(lat))
            _record(
                checks,
                f"A{total-1} node {m} isomorphic to rect({m},{k})",
                True,
                _isomorphic(
                    lat.hasse_graph(), distance.Graph.from_lattice(_rect_lattice(m, k))
                ),
            )
            _record(
                checks,
                f"A{total-1} node {m} wiener == rect({m},{k}) wiener",
                formulas.wiener_rectangle(m, k),
                distance.wiener_moment_bfs(lat.hasse_graph()),
            )
    for total in (9, 10):
        lat = weyl.minuscule_weight_lattice(weyl.cartan("A", total - 1), 2)
        _record(checks, f"A{total-1} node 2 orbit size", comb(total, 2), len(lat))

    # D-type spin orbits match staircases
    for n in range(3, 9):
        lat = weyl.minuscule_weight_lattice(weyl.cartan("D", n), n)
        _record(checks, f"D{n} spin orbit size", 1 << (n - 1), len(lat))
        _record(
            checks,
            f"D{n} spin isomorphic to stair({n-1})",
            True,
            _isomorphic(
                lat.hasse_graph(), distance.Graph.from_lattice(_stair_lattice(n - 1))
            ),
        )
        _record(
            checks,
            f"D{n} spin wiener == stair({n-1}) wiener",
            formulas.wiener_staircase(n - 1),
            distance.wiener_moment_bfs(lat.hasse_graph()),
        )

    # D-type vector orbits match double-tailed diamonds
    for n in range(3, 9):
        lat = weyl.minuscule_weight_lattice(weyl.cartan("D", n), 1)
        dlat = posets.double_tailed_diamond_lattice(n - 2)
        _record(
            checks,
            f"D{n} node 1 isomorphic to diamond({n-2})",
            True,
            _isomorphic(lat.hasse_graph(), distance.Graph.from_lattice(dlat)),
        )
        _record(
            checks,
            f"D{n} node 1 wiener == diamond({n-2}) wiener",
            formulas.wiener_diamond(n - 2),
            distance.wiener_moment_bfs(lat.hasse_graph()),
        )

    # exceptional lattices
    for kind, node, size, value in (("E6", 1, 27, 3584), ("E6", 6, 27, 3584), ("E7", 7, 56, 24048)):
        rank = 6 if kind == "E6" else 7
        lat = weyl.minuscule_weight_lattice(weyl.cartan(kind, rank), node)
        _record(checks, f"{kind} node {node} orbit size", size, len(lat))
        _record(
            checks,
            f"{kind} node {node} wiener",
            value,
            distance.wiener_moment_bfs(lat.hasse_graph()),
        )
        _record(checks, f"{kind} table value", value, formulas.wiener_exceptional(kind))

    # orbit weight sums vanish
    for family, rank, node in (
        ("A", 5, 3),
        ("B", 6, 6),
        ("C", 6, 1),
        ("D", 7, 7),
        ("D", 7, 1),
        ("E6", 6, 1),
        ("E7", 7, 7),
    ):
        lat = weyl.minuscule_weight_lattice(weyl.cartan(family, rank), node)
        total = tuple(sum(col) for col in zip(*lat.weights))
        _record(
            checks,
            f"{family}{rank} node {node} orbit weight sum is zero",
            True,
            all(x == 0 for x in total),
        )

    # non-minuscule nodes are rejected
    for family, rank, node in (("B", 4, 1), ("C", 4, 2), ("D", 5, 2), ("E6", 6, 2), ("E7", 7, 1)):
        try:
            weyl.minuscule_weight_lattice(weyl.cartan(family, rank), node)
            rejected = False
        except weyl.NotMinusculeError:
            rejected = True
        _record(checks, f"{family}{rank} node {node} rejected as non-minuscule", True, rejected)
    return checks


# --- bijection -----------------------------------------------------------------


def suite_bijection(max_len: int = 8) -> list[dict]:
    checks: list[dict] = []

    # rectangles: every step-multiset class on <= max_len steps
    for total in range(1, max_len + 1):
        for m in range(1, total):
            k = total - m
            ps = list(paths.rect_paths(m, k))
            images = set()
            ok_dist = ok_round = ok_class = True
            le_images = set()
            for p in ps:
                hp = paths.ud_heights(p)
                for q in ps:
                    w = paths.bijection_A(p, q)
                    images.add(w)
                    if paths.bijection_A_inverse(w) != (p, q):
                        ok_round = False
                    if paths.area_d(w) != paths.rect_distance(p, q):
                        ok_dist = False
                    cls = paths.classify(w)
                    if not (cls.in_bilateral and cls.length == total and cls.k == m):
                        ok_class = False
                    if all(a <= b for a, b in zip(hp, paths.ud_heights(q))):
                        le_images.add(w)
            _record(
                checks,
                f"rect({m},{k}) bijection is injective onto closed words",
                len(ps) ** 2,
                len(images),
            )
            _record(checks, f"rect({m},{k}) inverse round-trips", True, ok_round)
            _record(checks, f"rect({m},{k}) distance == merged-word area", True, ok_dist)
            _record(checks, f"rect({m},{k}) image lands in the closed class", True, ok_class)
            nonneg = {
                w
                for w in images
                if paths.classify(w).in_bicolored
            }
            _record(
                checks,
                f"rect({m},{k}) ordered pairs map exactly onto nonnegative words",
                True,
                le_images == nonneg,
            )

    # staircases: all length-n word pairs
    for n in range(1, max_len + 1):
        ws = list(paths.stair_words(n))
        images = set()
        ok_dist = ok_round = True
        le_images = set()
        for p in ws:
            hp = paths.ud_heights(p)
            for q in ws:
                w = paths.bijection_A(p, q)
                images.add(w)
                if paths.bijection_A_inverse(w) != (p, q):
                    ok_round = False
                if paths.area_dbar(w) != paths.stair_distance(p, q):
                    ok_dist = False
                if all(a <= b for a, b in zip(hp, paths.ud_heights(q))):
                    le_images.add(w)
        _record(checks, f"stair({n}) bijection covers all words", 4**n, len(images))
        _record(checks, f"stair({n}) inverse round-trips", True, ok_round)
        _record(checks, f"stair({n}) distance == merged-word height sum", True, ok_dist)
        nonneg = {w for w in images if paths.classify(w).in_bicolored_prefix}
        _record(
            checks,
            f"stair({n}) ordered pairs map exactly onto nonnegative prefixes",
            True,
            le_images == nonneg,
        )

    # canonical encodings agree with the lattice pictures
    for m, k in ((2, 2), (2, 3), (3, 3), (4, 3), (5, 5)):
        lat = _rect_lattice(m, k)
        g = distance.Graph.from_lattice(lat)
        ok = True
        words = [paths.rect_ideal_to_path(mask, m, k) for mask in lat.ideals]
        for i, p in enumerate(words):
            if paths.rect_path_to_ideal(p, m, k) != lat.ideals[i]:
                ok = False
        hist_ok = True
        for i, p in enumerate(words):
            dist_from_i = distance._bfs_distances(g, i)
            for j, q in enumerate(words):
                if paths.rect_distance(p, q) != dist_from_i[j]:
                    hist_ok = False
                    break
            if not hist_ok:
                break
        _record(checks, f"rect({m},{k}) ideal<->path encoding round-trips", True, ok)
        _record(checks, f"rect({m},{k}) path distance == lattice distance", True, hist_ok)

    for n in range(1, 6):
        words = list(paths.stair_words(n))
        edges = []
        for i, p in enumerate(words):
            hp = paths.ud_heights(p)
            for j, q in enumerate(words):
                if i < j and paths.stair_distance(p, q) == 1:
                    hq = paths.ud_heights(q)
                    if all(a <= b for a, b in zip(hp, hq)) or all(
                        a >= b for a, b in zip(hp, hq)
                    ):
                        edges.append((i, j))
        word_graph = distance.Graph.from_edges(len(words), edges)
        lat_graph = distance.Graph.from_lattice(_stair_lattice(n))
        _record(
            checks,
            f"stair({n}) word graph isomorphic to ideal lattice",
            True,
            _isomorphic(word_graph, lat_graph),
        )
    return checks


# --- series --------------------------------------------------------------------


def suite_series(order: int = 20) -> list[dict]:
    checks: list[dict] = []
    built = {}
    for name, (closed, fixedpoint, _) in series.SERIES_BUILDERS.items():
        a = closed(order)
        b = fixedpoint(order)
        built[name] = a
        _record(
            checks,
            f"series {name}: closed form == fixed point at order {order}",
            True,
            a.agrees_with(b, order),
        )

    w = built["W"]
    _record(
        checks,
        "W coefficients are squared binomials",
        True,
        all(
            w.coefficient(n, k) == comb(n, k) ** 2
            for n in range(order + 1)
            for k in range(n + 1)
        ),
    )
    wb = built["Wbold"]
    _record(
        checks,
        "Wbold coefficients give the rectangle wiener numbers",
        True,
        all(
            wb.coefficient(m + k, k) == formulas.wiener_rectangle(m, k)
            for m in range(1, order)
            for k in range(1, order + 1 - m)
        ),
    )
    vb = built["Vbold"]
    _record(
        checks,
        "Vbold coefficients give the staircase wiener numbers",
        True,
        all(
            vb.coefficient(n, 0) == formulas.wiener_staircase(n)
            for n in range(1, order + 1)
        ),
    )
    coeffs = [vb.coefficient(n, 0) for n in range(order + 1)]
    rec_ok = all(
        (2 * n + 3) * Fraction(coeffs[n], 1 << (2 * n + 1))
        - (4 * n + 5) * Fraction(coeffs[n + 1], 1 << (2 * n + 3))
        + (2 + 2 * n) * Fraction(coeffs[n + 2], 1 << (2 * n + 5))
        == 0
        for n in range(order - 1)
    )
    _record(
        checks,
        f"Vbold coefficients satisfy the staircase recurrence up to n={order-2}",
        True,
        rec_ok,
    )
    w2 = built["W2"]
    _record(
        checks,
        "W2 coefficients give the rectangle squared-distance numbers",
        True,
        all(
            w2.coefficient(m + k, k) == formulas.second_moment_rectangle(m, k)
            for m in range(1, order)
            for k in range(1, order + 1 - m)
        ),
    )
    identity_rhs = built["W"].pow(4).mul_monomial(2, 1, 2)
    _record(
        checks,
        f"Wbold == 2 u x^2 W^4 to order {order}",
        True,
        built["Wbold"].agrees_with(identity_rhs, order),
    )

    # exhaustive enumeration oracle
    enum_order = 8
    tallies = _path_tallies(enum_order)
    for name, key in (
        ("M", "count_M"),
        ("W", "count_W"),
        ("Mbold", "area_M"),
        ("Wbold", "area_W"),
        ("M2", "area2_M"),
        ("W2", "area2_W"),
    ):
        f = built[name]
        _record(
            checks,
            f"series {name} matches path enumeration to order {enum_order}",
            True,
            all(
                f.coefficient(n, k) == tallies[key].get((n, k), 0)
                for n in range(enum_order + 1)
                for k in range(n + 1)
            ),
        )
    for name, key in (
        ("N", "count_N"),
        ("V", "count_V"),
        ("Nbold", "hsum_N"),
        ("Vbold", "hsum_V"),
    ):
        f = built[name]
        _record(
            checks,
            f"series {name} matches prefix enumeration to order {enum_order}",
            True,
            all(
                f.coefficient(n, 0) == tallies[key].get(n, 0)
                for n in range(enum_order + 1)
            ),
        )
    return checks


def _path_tallies(max_len: int) -> dict:
    out = {
        "count_M": {}, "count_W": {}, "area_M": {}, "area_W": {},
        "area2_M": {}, "area2_W": {},
        "count_N": {}, "count_V": {}, "hsum_N": {}, "hsum_V": {},
    }

    def bump(table, key, amount=1):
        table[key] = table.get(key, 0) + amount

    for n in range(max_len + 1):
        for word in paths.four_step_words(n):
            cls = paths.classify(word)
            d = paths.area_d(word)
            dbar = paths.area_dbar(word)
            bump(out["count_V"], n)
            bump(out["hsum_V"], n, dbar)
            if cls.in_bicolored_prefix:
                bump(out["count_N"], n)
                bump(out["hsum_N"], n, dbar)
            if cls.in_bilateral:
                bump(out["count_W"], (n, cls.k))
                bump(out["area_W"], (n, cls.k), d)
                bump(out["area2_W"], (n, cls.k), d * d)
            if cls.in_bicolored:
                bump(out["count_M"], (n, cls.k))
                bump(out["area_M"], (n, cls.k), d)
                bump(out["area2_M"], (n, cls.k), d * d)
    return out


# --- moments -------------------------------------------------------------------


def suite_moments(
    n: int = MC_SIZE, num_samples: int = MC_SAMPLES, seed: int = MC_SEED
) -> list[dict]:
    checks: list[dict] = []

    # exact-population consistency at enumerable sizes
    _record(
        checks,
        "stair(10) exhaustive pair sum == closed formula",
        formulas.wiener_staircase(10),
        montecarlo.exhaustive_stair_moment(10, 1),
    )
    _record(
        checks,
        "stair(6) exhaustive squared pair sum == closed formula",
        formulas.second_moment_staircase(6),
        montecarlo.exhaustive_stair_moment(6, 2),
    )
    _record(
        checks,
        "rect(3,3) exhaustive pair sum == closed formula",
        formulas.wiener_rectangle(3, 3),
        montecarlo.exhaustive_rect_moment(3, 3, 1),
    )
    _record(
        checks,
        "rect(3,4) exhaustive squared pair sum == closed formula",
        formulas.second_moment_rectangle(3, 4),
        montecarlo.exhaustive_rect_moment(3, 4, 2),
    )

    # sampled scaled moments against the limit constants
    for family, alpha in (("rect", Fraction(1)), ("stair", None)):
        report = montecarlo.run_experiment(
            family, n, alpha=alpha, r_max=3, num_samples=num_samples, seed=seed
        )
        for (r, value, se), (_, target) in zip(
            report.scaled_moments, report.limit_targets
        ):
            tol = 4 * se + montecarlo.BIAS_TOLERANCE[r] * target
            _record(
                checks,
                f"{family} n={n} scaled moment r={r} within 4se+{montecarlo.BIAS_TOLERANCE[r]:.0%} of limit",
                f"|{value:.6f} - {target:.6f}| <= {tol:.6f}",
                abs(value - target),
                ok=abs(value - target) <= tol,
            )
    return checks


SUITE_RUNNERS: dict[str, Callable[[], list[dict]]] = {
    "bijection": suite_bijection,
    "series": suite_series,
    "formulas": lambda: suite_formulas() + suite_trend(),
    "weyl": suite_weyl,
    "moments": suite_moments,
}


def run_suite(name: str) -> list[dict]:
    if name == "all":
        checks = []
        for suite in SUITES:
            for check in SUITE_RUNNERS[suite]():
                check["suite"] = suite
                checks.append(check)
        return checks
    if name not in SUITE_RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    checks = SUITE_RUNNERS[name]()
    for check in checks:
        check["suite"] = name
    return checks
