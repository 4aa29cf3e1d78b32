"""Dense simple graphs on at most 64 vertices.

A :class:`Graph` stores one adjacency bitmask per vertex.  Vertex pairs are
also given a linear index (the graph6 column order, ``j*(j-1)//2 + i`` for
``i < j``) so that a whole edge set fits in one Python integer; the exact
editing solvers work in that representation.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, NamedTuple

import numpy as np

MAX_VERTICES = 64


class VertexPair(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "VertexPair":
        if a == b:
            raise ValueError(f"pair needs two distinct vertices, got ({a}, {b})")
        return cls(a, b) if a < b else cls(b, a)


def pair_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def pair_list(n: int) -> list[VertexPair]:
    """All pairs of ``range(n)`` in pair-index order."""
    return [VertexPair(i, j) for j in range(n) for i in range(j)]


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise ValueError(f"row {v} has loops or out-of-range bits")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
                r ^= low

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_pairmask(cls, n: int, mask: int) -> "Graph":
        rows = [0] * n
        idx = 0
        for j in range(n):
            for i in range(j):
                if mask >> idx & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                idx += 1
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        n = a.shape[0]
        return cls.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]])

    # queries ----------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    @property
    def density(self):
        """Edge density e(G)/C(n,2) as an exact fraction."""
        from fractions import Fraction

        pairs = comb(self.n, 2)
        if pairs == 0:
            return Fraction(0)
        return Fraction(self.num_edges, pairs)

    def edges(self) -> Iterator[VertexPair]:
        for j in range(self.n):
            row = self.rows[j] & ((1 << j) - 1)
            while row:
                low = row & -row
                yield VertexPair(low.bit_length() - 1, j)
                row ^= low

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.rows[v] >> u & 1]

    def pairmask(self) -> int:
        mask = 0
        for u, v in self.edges():
            mask |= 1 << pair_index(u, v)
        return mask

    def to_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    # transformations --------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def toggled(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in pairs:
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of old vertex ``v``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: list[int]) -> "Graph":
        pos = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(pos[u], pos[v]) for u, v in combinations(vertices, 2) if self.has_edge(u, v)],
        )

    def __repr__(self):
        return f"Graph(n={self.n}, edges={[tuple(e) for e in self.edges()]})"


def complement(g: Graph) -> Graph:
    return g.complement()


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def symmetric_difference_count(g1: Graph, g2: Graph) -> int:
    if g1.n != g2.n:
        raise ValueError(f"vertex counts differ: {g1.n} != {g2.n}")
    return sum((a ^ b).bit_count() for a, b in zip(g1.rows, g2.rows)) // 2


# induced / non-induced copies ------------------------------------------


def _search_order(h: Graph) -> list[int]:
    # place high-degree vertices first, then keep the placed set connected
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        v = max(remaining, key=lambda x: ((h.rows[x] & placed).bit_count(), h.degree(x), -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def find_copy(g: Graph, h: Graph, induced: bool = True) -> dict[int, int] | None:
    """Injective map V(h) -> V(g) embedding ``h`` into ``g``, or ``None``.

    With ``induced`` the map must also carry non-edges of ``h`` onto
    non-edges of ``g``.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return {}
    order = _search_order(h)
    full = (1 << g.n) - 1
    image = [0] * h.n

    def extend(pos: int, used: int) -> bool:
        if pos == h.n:
            return True
        x = order[pos]
        cand = full & ~used
        for prev in order[:pos]:
            if h.rows[x] >> prev & 1:
                cand &= g.rows[image[prev]]
            elif induced:
                cand &= ~g.rows[image[prev]]
        if h.degree(x) > 0:
            # degree filter: the image needs at least deg_h(x) neighbours
            need = h.degree(x)
            c = cand
            while c:
                low = c & -c
                if g.rows[low.bit_length() - 1].bit_count() < need:
                    cand &= ~low
                c ^= low
        while cand:
            low = cand & -cand
            image[x] = low.bit_length() - 1
            if extend(pos + 1, used | low):
                return True
            cand ^= low
        return False

    if extend(0, 0):
        return {x: image[x] for x in range(h.n)}
    return None


def find_induced_copy(g: Graph, h: Graph) -> dict[int, int] | None:
    return find_copy(g, h, induced=True)


# generators ------------------------------------------------------------


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"need at least one vertex, got {n}")
    if n > MAX_VERTICES:
        raise ValueError(f"at most {MAX_VERTICES} vertices supported, got {n}")


def complete(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _check_n(n)
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _check_n(n)
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(p: int, q: int) -> Graph:
    """K_p^q: ``p`` parts of ``q`` vertices each, vertex ``v`` in part ``v // q``."""
    _check_n(p * q)
    return Graph.from_edges(
        p * q, [(u, v) for u, v in combinations(range(p * q), 2) if u // q != v // q]
    )


def complete_bipartite(a: int, b: int) -> Graph:
    _check_n(a + b)
    return Graph.from_edges(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return complete_bipartite(1, leaves)


def gnp(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdős–Rényi G(n, p); identical output for identical ``seed``."""
    _check_n(n)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    pairs = pair_list(n)
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, [pr for pr, k in zip(pairs, keep) if k])

