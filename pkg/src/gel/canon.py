"""Canonical labelling, isomorphism testing and isomorphism-class enumeration.

The canonical form is the lexicographically least graph6 bit string over
all vertex orderings that respect the colour-refinement cell order (cells
are isomorphism invariant, so restricting to them keeps the minimum
canonical).  Survivor orderings are extended level by level, keeping only
those whose next adjacency column is minimal; interchangeable twins are
expanded once.  This is fast enough for every graph on up to ten vertices.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from . import graph6
from .graph import Graph

MAX_ENUMERATION_N = 8


def refine_colors(g: Graph) -> list[int]:
    """Stable colour refinement starting from vertex degrees.

    Colour ids are ranks of isomorphism-invariant signatures, so the result
    is the same for isomorphic graphs up to the vertex correspondence.
    """
    n = g.n
    colors = g.degrees()
    ncolors = len(set(colors))
    while True:
        nbrs = [[u for u in range(n) if g.rows[v] >> u & 1] for v in range(n)]
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == ncolors:
            return colors
        ncolors = len(ranks)


def _twin_keys(g: Graph) -> list[tuple[int, int]]:
    # u, w are twins iff N(u) - {w} == N(w) - {u}; the two keys cover
    # false twins (open neighbourhoods) and true twins (closed ones)
    return [(g.rows[v], g.rows[v] | 1 << v) for v in range(g.n)]


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex ordering ``order`` such that ``order[i]`` gets canonical label ``i``."""
    n = g.n
    if n <= 1:
        return list(range(n))
    colors = refine_colors(g)
    cells: dict[int, int] = {}
    for v, c in enumerate(colors):
        cells[c] = cells.get(c, 0) | 1 << v
    cell_seq = [cells[c] for c in sorted(cells)]
    position_cell = []
    for mask in cell_seq:
        position_cell.extend([mask] * mask.bit_count())
    open_keys, closed_keys = zip(*_twin_keys(g))
    rows = g.rows

    # survivors: (order, placed mask)
    survivors: list[tuple[tuple[int, ...], int]] = [((), 0)]
    for pos in range(n):
        cell = position_cell[pos]
        best = None
        nxt: list[tuple[tuple[int, ...], int]] = []
        for order, placed in survivors:
            cand = cell & ~placed
            seen_open: set[int] = set()
            seen_closed: set[int] = set()
            while cand:
                low = cand & -cand
                cand ^= low
                v = low.bit_length() - 1
                # swapping two unplaced twins is an automorphism fixing the
                # placed prefix, so only one of them needs expanding
                if open_keys[v] in seen_open or closed_keys[v] in seen_closed:
                    continue
                seen_open.add(open_keys[v])
                seen_closed.add(closed_keys[v])
                row = rows[v]
                col = 0
                for u in order:
                    col = col << 1 | (row >> u & 1)
                if best is None or col < best:
                    best = col
                    nxt = [(order + (v,), placed | low)]
                elif col == best:
                    nxt.append((order + (v,), placed | low))
        survivors = nxt
    return list(survivors[0][0])


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    label = [0] * g.n
    for i, v in enumerate(order):
        label[v] = i
    return g.relabel(label)


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonical relabelling; equal iff isomorphic."""
    return graph6.encode(canonical_graph(g)).encode("ascii")


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[bytes, Graph] = {}
    for base in _classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(base.rows) + [nbrs]
            for u in range(n - 1):
                if nbrs >> u & 1:
                    rows[u] |= 1 << (n - 1)
            cand = Graph(n, tuple(rows))
            key = canonical_form(cand)
            if key not in found:
                found[key] = graph6.decode(key)
    return tuple(found[k] for k in sorted(found))


def enumerate_nonisomorphic(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Graphs come out sorted by their canonical graph6 string.  Every graph on
    ``n`` vertices is a one-vertex extension of some graph on ``n - 1``
    vertices, so extending all class representatives and deduplicating by
    canonical form is complete.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > MAX_ENUMERATION_N and not allow_large:
        raise ValueError(f"enumeration beyond n={MAX_ENUMERATION_N} needs allow_large=True")
    yield from _classes(n)
