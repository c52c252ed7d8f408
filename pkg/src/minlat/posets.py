"""Finite posets and their lattices of order ideals.

Posets are given by cover relations on integer-indexed elements.  Order
ideals (down-sets) are enumerated as bit masks over the poset elements,
ordered canonically by (size, mask value) so that runs are diffable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

DEFAULT_IDEAL_CAP = 1 << 22


class ResourceLimitExceeded(RuntimeError):
    """Raised when an enumeration would exceed its configured size cap."""


@dataclass(frozen=True)
class Poset:
    """Finite poset on elements 0..n-1 described by its cover relations.

    Covers are (lower, upper) pairs.  The relation must be acyclic and
    irredundant: no cover may follow from the transitive closure of the
    others.
    """

    n_elements: int
    covers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "covers", tuple(tuple(c) for c in self.covers))
        for a, b in self.covers:
            if not (0 <= a < self.n_elements and 0 <= b < self.n_elements):
                raise ValueError(f"cover ({a},{b}) out of range")
            if a == b:
                raise ValueError("self-cover is not allowed")
        self._check_acyclic()
        self._check_irredundant()

    def _check_acyclic(self):
        indeg = [0] * self.n_elements
        succ = [[] for _ in range(self.n_elements)]
        for a, b in self.covers:
            succ[a].append(b)
            indeg[b] += 1
        stack = [v for v in range(self.n_elements) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        if seen != self.n_elements:
            raise ValueError("cover relation contains a cycle")

    def _check_irredundant(self):
        # a cover (a, b) is redundant iff b is reachable from a in >= 2 steps
        succ = [[] for _ in range(self.n_elements)]
        for a, b in self.covers:
            succ[a].append(b)
        for a, b in self.covers:
            stack = [w for w in succ[a] if w != b]
            seen = set(stack)
            while stack:
                v = stack.pop()
                if v == b:
                    raise ValueError(f"cover ({a},{b}) is implied by transitivity")
                for w in succ[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)

    def lower_covers(self) -> list[list[int]]:
        preds = [[] for _ in range(self.n_elements)]
        for a, b in self.covers:
            preds[b].append(a)
        return preds


@dataclass(frozen=True)
class IdealLattice:
    """Distributive lattice of order ideals, each ideal a bit mask.

    Ideals are listed in canonical order: by size, then by mask value.
    ``hasse_edges`` holds index pairs (i, j) with ideal i contained in
    ideal j and exactly one element of difference.
    """

    n_poset_elements: int
    ideals: tuple[int, ...]
    hasse_edges: tuple[tuple[int, int], ...]
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._index.update({m: i for i, m in enumerate(self.ideals)})

    def __len__(self) -> int:
        return len(self.ideals)

    def index_of(self, mask: int) -> int:
        return self._index[mask]


def rectangle_poset(m: int, k: int) -> Poset:
    """Product of chains [m] x [k]; element (i, j) has index (i-1)*k + (j-1)."""
    if m < 1 or k < 1:
        raise ValueError("rectangle dimensions must be positive")
    covers = []
    for i in range(m):
        for j in range(k):
            if i + 1 < m:
                covers.append((i * k + j, (i + 1) * k + j))
            if j + 1 < k:
                covers.append((i * k + j, i * k + j + 1))
    return Poset(m * k, tuple(covers))


def staircase_poset(n: int) -> Poset:
    """Shifted staircase {(i, j) : 1 <= i <= j <= n} under componentwise order."""
    if n < 1:
        raise ValueError("staircase size must be positive")
    elems = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    index = {e: t for t, e in enumerate(elems)}
    covers = []
    for (i, j) in elems:
        if (i + 1, j) in index:
            covers.append((index[(i, j)], index[(i + 1, j)]))
        if (i, j + 1) in index:
            covers.append((index[(i, j)], index[(i, j + 1)]))
    return Poset(len(elems), tuple(covers))


def _addable_elements(poset_preds: list[list[int]], mask: int) -> Iterator[int]:
    for e, preds in enumerate(poset_preds):
        if not (mask >> e) & 1 and all((mask >> p) & 1 for p in preds):
            yield e


def order_ideals(p: Poset, max_ideals: int = DEFAULT_IDEAL_CAP) -> IdealLattice:
    """Enumerate all order ideals of ``p`` together with their Hasse diagram.

    Runs a breadth-first search over the cover graph of ideals starting
    from the empty ideal, adding one addable element at a time; each mask
    is recorded once.
    """
    preds = p.lower_covers()
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for e in _addable_elements(preds, mask):
                new = mask | (1 << e)
                if new not in seen:
                    seen.add(new)
                    if len(seen) > max_ideals:
                        raise ResourceLimitExceeded(
                            f"more than {max_ideals} order ideals"
                        )
                    nxt.append(new)
        frontier = nxt

    ideals = sorted(seen, key=lambda m: (m.bit_count(), m))
    pos = {m: i for i, m in enumerate(ideals)}
    edges = []
    for i, mask in enumerate(ideals):
        for e in _addable_elements(preds, mask):
            edges.append((i, pos[mask | (1 << e)]))
    edges.sort()
    return IdealLattice(p.n_elements, tuple(ideals), tuple(edges))


def tailed_diamond_poset(t: int) -> Poset:
    """Chain of t elements, two incomparable elements, chain of t elements.

    Its lattice of order ideals is the double-tailed diamond with tail
    length t.
    """
    if t < 0:
        raise ValueError("tail length must be nonnegative")
    # elements 0..t-1: lower chain; t, t+1: the incomparable pair;
    # t+2..2t+1: upper chain
    covers = []
    for i in range(t - 1):
        covers.append((i, i + 1))
        covers.append((t + 2 + i, t + 3 + i))
    if t > 0:
        covers += [(t - 1, t), (t - 1, t + 1), (t, t + 2), (t + 1, t + 2)]
    return Poset(2 * t + 2, tuple(covers))


def double_tailed_diamond_lattice(t: int) -> IdealLattice:
    """Double-tailed diamond with 2t+4 vertices, built directly as masks.

    Vertex layout: a chain of t edges, a four-vertex diamond, and another
    chain of t edges.  The masks realize the lattice as order ideals of
    ``tailed_diamond_poset(t)`` without running the generic enumeration.
    """
    if t < 0:
        raise ValueError("tail length must be nonnegative")
    n = 2 * t + 2
    masks = []
    acc = 0
    for e in range(t):  # lower chain
        masks.append(acc)
        acc |= 1 << e
    bottom = acc
    masks.append(bottom)  # diamond bottom (all lower-chain elements)
    masks.append(bottom | (1 << t))  # left middle
    masks.append(bottom | (1 << (t + 1)))  # right middle
    acc = bottom | (1 << t) | (1 << (t + 1))
    masks.append(acc)  # diamond top
    for e in range(t):  # upper chain
        acc |= 1 << (t + 2 + e)
        masks.append(acc)

    masks.sort(key=lambda m: (m.bit_count(), m))
    pos = {m: i for i, m in enumerate(masks)}
    edges = []
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if a != b and a & b == a and (a ^ b).bit_count() == 1:
                edges.append((i, j))
    edges.sort()
    return IdealLattice(n, tuple(masks), tuple(edges))
