"""Minuscule lattices from Cartan matrices.

Weights live in fundamental-weight coordinates, so the i-th simple root
is the i-th column of the Cartan matrix and everything stays in integer
arithmetic.  The orbit of a minuscule fundamental weight is generated
downward from the highest weight; a cover joins mu and mu + alpha_i.

Node numbering follows Bourbaki.  Validation is dynamic (every orbit
coordinate must stay in {-1, 0, 1}) with a hardcoded node table as a
second, independent guard.
"""
from __future__ import annotations

from dataclasses import dataclass

from .distance import Graph


class NotMinusculeError(ValueError):
    """The requested fundamental weight is not minuscule for this type."""


@dataclass(frozen=True)
class CartanMatrix:
    """Integer matrix A[i][j] = <alpha_j, alpha_i^vee> of a simple type."""

    family: str
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("Cartan matrix must be square")
            for j, a in enumerate(row):
                if i == j and a != 2:
                    raise ValueError("diagonal entries must be 2")
                if i != j and a not in (0, -1, -2, -3):
                    raise ValueError(f"invalid off-diagonal entry {a}")
                if (a == 0) != (self.entries[j][i] == 0):
                    raise ValueError("zero pattern must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def column(self, i: int) -> tuple[int, ...]:
        """The i-th simple root (1-based) in fundamental-weight coordinates."""
        return tuple(row[i - 1] for row in self.entries)


def _chain_matrix(rank: int) -> list[list[int]]:
    m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        m[i][i + 1] = -1
        m[i + 1][i] = -1
    return m


def cartan(family: str, rank: int) -> CartanMatrix:
    """Standard Cartan matrix of types A, B, C, D, E6, E7 in Bourbaki numbering."""
    if family == "A":
        if rank < 1:
            raise ValueError("type A needs rank >= 1")
        m = _chain_matrix(rank)
    elif family == "B":
        if rank < 2:
            raise ValueError("type B needs rank >= 2")
        m = _chain_matrix(rank)
        m[rank - 1][rank - 2] = -2
    elif family == "C":
        if rank < 2:
            raise ValueError("type C needs rank >= 2")
        m = _chain_matrix(rank)
        m[rank - 2][rank - 1] = -2
    elif family == "D":
        if rank < 3:
            raise ValueError("type D needs rank >= 3")
        m = _chain_matrix(rank)
        m[rank - 2][rank - 1] = 0
        m[rank - 1][rank - 2] = 0
        m[rank - 3][rank - 1] = -1
        m[rank - 1][rank - 3] = -1
    elif family in ("E6", "E7"):
        expected = 6 if family == "E6" else 7
        if rank != expected:
            raise ValueError(f"type {family} has rank {expected}")
        # Bourbaki: nodes 1-3-4-5-6(-7) form a chain, node 2 hangs off node 4
        m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        chain = [1, 3, 4, 5, 6, 7][: rank - 1]
        bonds = list(zip(chain, chain[1:])) + [(2, 4)]
        for a, b in bonds:
            m[a - 1][b - 1] = -1
            m[b - 1][a - 1] = -1
    else:
        raise ValueError(f"unknown type {family!r}")
    return CartanMatrix(family, tuple(tuple(row) for row in m))


MINUSCULE_NODES = {
    "A": lambda rank: set(range(1, rank + 1)),
    "B": lambda rank: {rank},
    "C": lambda rank: {1},
    "D": lambda rank: {1, rank - 1, rank},
    "E6": lambda rank: {1, 6},
    "E7": lambda rank: {7},
}


def default_minuscule_node(family: str, rank: int) -> int:
    return {"A": 1, "B": rank, "C": 1, "D": rank, "E6": 1, "E7": 7}[family]


@dataclass(frozen=True)
class MinusculeLattice:
    """Weight orbit of a minuscule fundamental weight with its cover relation."""

    cartan: CartanMatrix
    node: int
    weights: tuple[tuple[int, ...], ...]
    covers: tuple[tuple[int, int], ...]  # (lower, upper) weight indices

    def __len__(self) -> int:
        return len(self.weights)

    def hasse_graph(self) -> Graph:
        return Graph.from_edges(len(self.weights), self.covers)


def minuscule_weight_lattice(c: CartanMatrix, fw_index: int) -> MinusculeLattice:
    """Generate the weight lattice of the fundamental weight at ``fw_index``.

    Raises NotMinusculeError if a generated weight leaves {-1, 0, 1} in
    some coordinate or if the node is not in the minuscule table for the
    matrix's type.
    """
    rank = c.rank
    if not 1 <= fw_index <= rank:
        raise ValueError(f"node {fw_index} out of range for rank {rank}")
    if fw_index not in MINUSCULE_NODES[c.family](rank):
        raise NotMinusculeError(
            f"node {fw_index} of type {c.family}{rank} is not minuscule"
        )

    roots = [c.column(i) for i in range(1, rank + 1)]
    highest = tuple(1 if i == fw_index - 1 else 0 for i in range(rank))
    seen = {highest}
    frontier = [highest]
    covers_w = []
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(rank):
                if mu[i] == 1:
                    nu = tuple(a - b for a, b in zip(mu, roots[i]))
                    if any(x not in (-1, 0, 1) for x in nu):
                        raise NotMinusculeError(
                            f"orbit of node {fw_index} leaves {{-1,0,1}} "
                            f"at weight {nu}"
                        )
                    covers_w.append((nu, mu))
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
        frontier = nxt

    total = tuple(sum(col) for col in zip(*seen))
    assert all(x == 0 for x in total), "orbit weight sum is not zero"

    weights = tuple(sorted(seen))
    pos = {w: i for i, w in enumerate(weights)}
    covers = tuple(sorted({(pos[lo], pos[hi]) for lo, hi in covers_w}))
    return MinusculeLattice(c, fw_index, weights, covers)
