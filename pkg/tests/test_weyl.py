from math import comb

import networkx as nx
import pytest

from minlat import weyl
from minlat.distance import Graph, wiener_moment_bfs
from minlat.posets import (
    double_tailed_diamond_lattice,
    order_ideals,
    rectangle_poset,
    staircase_poset,
)


def as_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n_vertices))
    for v, nbrs in enumerate(g.adjacency):
        for w in nbrs:
            if v < w:
                out.add_edge(v, w)
    return out


def isomorphic(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(as_nx(a), as_nx(b))


def test_cartan_examples():
    assert weyl.cartan("A", 1).entries == ((2,),)
    assert weyl.cartan("A", 2).entries == ((2, -1), (-1, 2))
    d4 = weyl.cartan("D", 4).entries
    assert [j for j in range(4) if d4[1][j] == -1] == [0, 2, 3]
    assert weyl.cartan("B", 2).entries == ((2, -1), (-2, 2))
    assert weyl.cartan("C", 2).entries == ((2, -2), (-1, 2))


def test_cartan_zero_pattern_symmetric():
    for family, rank in (("A", 5), ("B", 4), ("C", 4), ("D", 6), ("E6", 6), ("E7", 7)):
        m = weyl.cartan(family, rank).entries
        for i in range(rank):
            for j in range(rank):
                assert (m[i][j] == 0) == (m[j][i] == 0)


@pytest.mark.parametrize(
    "family,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E6", 5), ("E7", 6), ("F", 4)]
)
def test_cartan_rejects_invalid_ranks(family, rank):
    with pytest.raises(ValueError):
        weyl.cartan(family, rank)


@pytest.mark.parametrize("total", range(2, 11))
def test_a_type_orbit_sizes(total):
    for m in range(1, total):
        lat = weyl.minuscule_weight_lattice(weyl.cartan("A", total - 1), m)
        assert len(lat) == comb(total, m)
        assert len(set(lat.weights)) == len(lat.weights)


@pytest.mark.parametrize("total", range(2, 7))
def test_a_type_isomorphic_to_rectangles(total):
    for m in range(1, total):
        k = total - m
        lat = weyl.minuscule_weight_lattice(weyl.cartan("A", total - 1), m)
        model = Graph.from_lattice(order_ideals(rectangle_poset(m, k)))
        assert isomorphic(lat.hasse_graph(), model)


@pytest.mark.parametrize("n", range(3, 8))
def test_d_type_spin_orbits(n):
    lat = weyl.minuscule_weight_lattice(weyl.cartan("D", n), n)
    assert len(lat) == 2 ** (n - 1)
    model = Graph.from_lattice(order_ideals(staircase_poset(n - 1)))
    assert isomorphic(lat.hasse_graph(), model)


@pytest.mark.parametrize("n", range(3, 8))
def test_d_type_vector_orbits(n):
    lat = weyl.minuscule_weight_lattice(weyl.cartan("D", n), 1)
    assert len(lat) == 2 * n
    model = Graph.from_lattice(double_tailed_diamond_lattice(n - 2))
    assert isomorphic(lat.hasse_graph(), model)


@pytest.mark.parametrize("n", range(2, 7))
def test_b_type_spin_orbits(n):
    lat = weyl.minuscule_weight_lattice(weyl.cartan("B", n), n)
    assert len(lat) == 2**n
    model = Graph.from_lattice(order_ideals(staircase_poset(n)))
    assert isomorphic(lat.hasse_graph(), model)


@pytest.mark.parametrize("n", range(2, 7))
def test_c_type_vector_orbits_are_chains(n):
    lat = weyl.minuscule_weight_lattice(weyl.cartan("C", n), 1)
    assert len(lat) == 2 * n
    degrees = sorted(len(v) for v in lat.hasse_graph().adjacency)
    assert degrees == [1, 1] + [2] * (2 * n - 2)


def test_exceptional_lattices():
    e6 = weyl.minuscule_weight_lattice(weyl.cartan("E6", 6), 1)
    assert len(e6) == 27
    assert wiener_moment_bfs(e6.hasse_graph()) == 3584
    e6b = weyl.minuscule_weight_lattice(weyl.cartan("E6", 6), 6)
    assert len(e6b) == 27
    assert wiener_moment_bfs(e6b.hasse_graph()) == 3584
    e7 = weyl.minuscule_weight_lattice(weyl.cartan("E7", 7), 7)
    assert len(e7) == 56
    assert wiener_moment_bfs(e7.hasse_graph()) == 24048


def test_orbit_weight_sums_vanish():
    for family, rank, node in (
        ("A", 6, 3),
        ("B", 5, 5),
        ("C", 5, 1),
        ("D", 6, 6),
        ("D", 6, 1),
        ("E6", 6, 6),
        ("E7", 7, 7),
    ):
        lat = weyl.minuscule_weight_lattice(weyl.cartan(family, rank), node)
        totals = [sum(col) for col in zip(*lat.weights)]
        assert all(v == 0 for v in totals)


def test_minuscule_coordinates_stay_small():
    lat = weyl.minuscule_weight_lattice(weyl.cartan("E7", 7), 7)
    assert all(set(w) <= {-1, 0, 1} for w in lat.weights)


@pytest.mark.parametrize(
    "family,rank,node",
    [("B", 4, 1), ("B", 4, 2), ("C", 4, 2), ("C", 4, 4), ("D", 5, 2), ("E6", 6, 2), ("E6", 6, 4), ("E7", 7, 1)],
)
def test_non_minuscule_nodes_rejected(family, rank, node):
    with pytest.raises(weyl.NotMinusculeError):
        weyl.minuscule_weight_lattice(weyl.cartan(family, rank), node)


def test_node_out_of_range():
    with pytest.raises(ValueError):
        weyl.minuscule_weight_lattice(weyl.cartan("A", 3), 0)
    with pytest.raises(ValueError):
        weyl.minuscule_weight_lattice(weyl.cartan("A", 3), 4)


def test_covers_oriented_upward():
    lat = weyl.minuscule_weight_lattice(weyl.cartan("A", 2), 1)
    assert len(lat.covers) == 2
    for lo, hi in lat.covers:
        diff = tuple(b - a for a, b in zip(lat.weights[lo], lat.weights[hi]))
        assert diff in {lat.cartan.column(i) for i in range(1, lat.cartan.rank + 1)}


def test_hasse_graph_connected():
    lat = weyl.minuscule_weight_lattice(weyl.cartan("D", 5), 5)
    g = lat.hasse_graph()  # Graph construction verifies connectivity
    assert g.n_vertices == 16


@pytest.mark.parametrize(
    "family,rank,node,size",
    [("A", 9, 5, 252), ("B", 10, 10, 1024), ("C", 10, 1, 20), ("D", 10, 10, 512), ("D", 10, 1, 20)],
)
def test_generation_terminates_at_rank_ten(family, rank, node, size):
    lat = weyl.minuscule_weight_lattice(weyl.cartan(family, rank), node)
    assert len(lat) == size
    assert len(set(lat.weights)) == size
