import random

import pytest

from minlat.distance import (
    DisconnectedGraphError,
    Graph,
    _bfs_distances,
    bfs_distance,
    distance_histogram,
    wiener_moment_bfs,
    wiener_moment_symdiff,
)
from minlat.formulas import (
    second_moment_rectangle,
    second_moment_staircase,
    wiener_rectangle,
    wiener_staircase,
)
from minlat.posets import (
    double_tailed_diamond_lattice,
    order_ideals,
    rectangle_poset,
    staircase_poset,
)


def lattice_graph(lattice):
    return Graph.from_lattice(lattice)


def test_two_vertex_path_histogram():
    g = Graph.from_edges(2, [(0, 1)])
    assert distance_histogram(g) == {0: 2, 1: 2}


def test_histogram_sums_to_square():
    g = lattice_graph(order_ideals(staircase_poset(4)))
    hist = distance_histogram(g)
    assert sum(hist.values()) == g.n_vertices**2


def test_rect22_wiener_is_56():
    lat = order_ideals(rectangle_poset(2, 2))
    g = lattice_graph(lat)
    assert sum(d * c for d, c in distance_histogram(g).items()) == 56
    assert wiener_moment_bfs(g) == 56
    assert wiener_moment_symdiff(lat) == 56


def test_stair3_wiener_is_140():
    lat = order_ideals(staircase_poset(3))
    assert wiener_moment_bfs(lattice_graph(lat)) == 140
    assert wiener_moment_symdiff(lat) == 140


def test_stair3_second_moment_is_456():
    lat = order_ideals(staircase_poset(3))
    assert wiener_moment_bfs(lattice_graph(lat), 2) == 456
    assert wiener_moment_symdiff(lat, 2) == 456
    assert second_moment_staircase(3) == 456


def test_diamond_wiener_16():
    g = lattice_graph(double_tailed_diamond_lattice(0))
    assert sum(d * c for d, c in distance_histogram(g).items()) == 16


def test_single_vertex_moments_vanish():
    g = Graph.from_edges(1, [])
    for r in (1, 2, 3):
        assert wiener_moment_bfs(g, r) == 0


def test_disconnected_graph_rejected():
    with pytest.raises(DisconnectedGraphError):
        Graph.from_edges(2, [])
    with pytest.raises(DisconnectedGraphError):
        Graph.from_edges(4, [(0, 1), (2, 3)])


def test_invalid_moment_order():
    g = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(ValueError):
        wiener_moment_bfs(g, 0)
    with pytest.raises(ValueError):
        wiener_moment_symdiff(order_ideals(rectangle_poset(1, 1)), 0)


@pytest.mark.parametrize("k", range(1, 9))
def test_chain_lattices_are_paths(k):
    # P_{1,k} is a path on k+1 vertices with Wiener index 2*C(k+2, 3)
    lat = order_ideals(rectangle_poset(1, k))
    n = k + 1
    assert wiener_moment_bfs(lattice_graph(lat)) == 2 * (n + 1) * n * (n - 1) // 6
    assert wiener_rectangle(1, k) == 2 * (n + 1) * n * (n - 1) // 6


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("k", range(1, 7))
def test_bfs_equals_symdiff_rectangles(m, k):
    lat = order_ideals(rectangle_poset(m, k))
    g = lattice_graph(lat)
    for r in (1, 2):
        assert wiener_moment_bfs(g, r) == wiener_moment_symdiff(lat, r)


@pytest.mark.parametrize("n", range(1, 13))
def test_bfs_equals_symdiff_staircases(n):
    lat = order_ideals(staircase_poset(n))
    g = lattice_graph(lat)
    assert wiener_moment_bfs(g) == wiener_moment_symdiff(lat)
    if n <= 9:
        assert wiener_moment_bfs(g, 3) == wiener_moment_symdiff(lat, 3)


def test_second_moment_formulas_small():
    for m, k in ((1, 1), (1, 2), (2, 2), (3, 2)):
        lat = order_ideals(rectangle_poset(m, k))
        assert wiener_moment_bfs(lattice_graph(lat), 2) == second_moment_rectangle(m, k)


def test_symmetry_and_triangle_inequality_sampled():
    g = lattice_graph(order_ideals(staircase_poset(6)))
    rng = random.Random(991)
    dist_maps = {}

    def d(a, b):
        if a not in dist_maps:
            dist_maps[a] = _bfs_distances(g, a)
        return dist_maps[a][b]

    for _ in range(200):
        a, b, c = (rng.randrange(g.n_vertices) for _ in range(3))
        assert d(a, b) == d(b, a)
        assert d(a, c) <= d(a, b) + d(b, c)


def test_bfs_distance_helper():
    g = lattice_graph(order_ideals(rectangle_poset(2, 2)))
    assert bfs_distance(g, 0, g.n_vertices - 1) == 4


def test_wiener_report_routes_and_validation():
    from minlat.distance import WienerReport, wiener_report

    lat = order_ideals(rectangle_poset(2, 2))
    by_bfs = wiener_report(lattice_graph(lat), 1, "bfs")
    by_xor = wiener_report(lat, 1, "symmetric_difference")
    assert by_bfs.value == by_xor.value == 56
    assert by_bfs.method == "bfs"
    single = wiener_report(Graph.from_edges(1, []), 2, "bfs")
    assert single.value == 0
    with pytest.raises(ValueError):
        WienerReport(1, -1, "bfs")
    with pytest.raises(ValueError):
        WienerReport(0, 5, "bfs")
    with pytest.raises(ValueError):
        WienerReport(1, 5, "magic")
    with pytest.raises(ValueError):
        wiener_report(lat, 1, "closed_form")
    with pytest.raises(TypeError):
        wiener_report(lattice_graph(lat), 1, "symmetric_difference")
