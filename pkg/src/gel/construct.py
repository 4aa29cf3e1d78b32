"""Graphs on k^2 vertices whose binary chromatic number is exactly k.

Vertices are grid points ``(a, b)`` with ``1 <= a, b <= k``.  For each slope
``i`` in ``0..k-1`` the lines ``{(j + l*i mod k, l + 1)}`` give one
partition; the last partition is by rows (fixed second coordinate).  For
prime ``k`` every pair of grid points lies on exactly one line, so the
designation of that line (clique iff ``i < j``, rows always cocliques)
determines the graph unambiguously.
"""
from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .graph import Graph
from .partition import CLIQUE, COCLIQUE, Partition


class GridVertex(NamedTuple):
    i: int
    j: int

    def index(self, k: int) -> int:
        return (self.i - 1) * k + (self.j - 1)


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    return all(k % d for d in range(2, int(k**0.5) + 1))


def _residue(x: int, k: int) -> int:
    # residues are represented by 1..k, with k standing for 0
    r = x % k
    return k if r == 0 else r


def line_classes(k: int) -> list[list[tuple[list[GridVertex], str]]]:
    """The k+1 partitions as lists of (grid points, designation)."""
    parts = []
    for slope in range(k):
        classes = []
        for j in range(1, k + 1):
            pts = [GridVertex(_residue(j + l * slope, k), l + 1) for l in range(k)]
            classes.append((pts, CLIQUE if slope < j else COCLIQUE))
        parts.append(classes)
    rows = [([GridVertex(a, b) for a in range(1, k + 1)], COCLIQUE) for b in range(1, k + 1)]
    parts.append(rows)
    return parts


def affine_construction(k: int) -> tuple[Graph, list[Partition]]:
    if not is_prime(k):
        raise ValueError(f"k must be prime, got {k}")
    if k * k > 64:
        raise ValueError(f"k^2 = {k * k} exceeds the 64-vertex limit")
    parts = line_classes(k)
    edges = []
    for classes in parts:
        for pts, kind in classes:
            if kind == CLIQUE:
                idx = [p.index(k) for p in pts]
                edges.extend(combinations(idx, 2))
    g = Graph.from_edges(k * k, edges)
    partitions = [
        Partition.of(([p.index(k) for p in pts], kind) for pts, kind in classes)
        for classes in parts
    ]
    return g, partitions


def coverage_audit(k: int, g: Graph, partitions: list[Partition]) -> list[str]:
    """Every pair must lie in exactly one class, with adjacency matching its designation."""
    problems = []
    n = k * k
    owner: dict[tuple[int, int], list[tuple[int, str]]] = {}
    for pi, part in enumerate(partitions):
        if part.set_partition() and set().union(*part.set_partition()) != set(range(n)):
            problems.append(f"partition {pi} does not cover all vertices")
        for block in part.blocks:
            for u, v in combinations(sorted(block.vertices), 2):
                owner.setdefault((u, v), []).append((pi, block.kind))
    for u, v in combinations(range(n), 2):
        hits = owner.get((u, v), [])
        if len(hits) != 1:
            problems.append(f"pair ({u}, {v}) lies in {len(hits)} classes")
            continue
        if g.has_edge(u, v) != (hits[0][1] == CLIQUE):
            problems.append(f"pair ({u}, {v}) adjacency disagrees with partition {hits[0][0]}")
    for pi, part in enumerate(partitions):
        problems.extend(f"partition {pi}: {msg}" for msg in part.problems(g))
    if len({p.set_partition() for p in partitions}) != len(partitions):
        problems.append("partitions are not pairwise distinct")
    return problems
