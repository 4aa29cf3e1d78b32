"""Brute-force reference implementations.

Everything here enumerates the whole search space with no pruning and no
shared code with the solvers it checks, so it can serve as an independent
oracle at small sizes (think n <= 6).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .graph import Graph


def _pairs(n):
    return [(i, j) for j in range(n) for i in range(j)]


def brute_copy(g: Graph, h: Graph, induced: bool = True) -> dict[int, int] | None:
    for image in permutations(range(g.n), h.n):
        ok = True
        for j in range(h.n):
            for i in range(j):
                he = h.has_edge(i, j)
                ge = g.has_edge(image[i], image[j])
                if (induced and he != ge) or (he and not ge):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return dict(enumerate(image))
    return None


def labeled_graphs(n: int):
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def mask_of(g: Graph) -> int:
    return sum(1 << k for k, (i, j) in enumerate(_pairs(g.n)) if g.has_edge(i, j))


@lru_cache(maxsize=None)
def _free_masks(n: int, members: tuple[Graph, ...], induced: bool) -> tuple[int, ...]:
    out = []
    for g in labeled_graphs(n):
        if all(brute_copy(g, h, induced) is None for h in members):
            out.append(mask_of(g))
    return tuple(out)


def free_masks(n: int, members, induced: bool = True) -> tuple[int, ...]:
    return _free_masks(n, tuple(members), induced)


def exhaustive_dist(g: Graph, members, induced: bool = True, deletions_only: bool = False) -> int:
    """Minimum symmetric difference from ``g`` to any labelled family-free graph."""
    m = mask_of(g)
    best = None
    for f in free_masks(g.n, members, induced):
        if deletions_only and f & ~m:
            continue
        d = (m ^ f).bit_count()
        if best is None or d < best:
            best = d
    return best


def brute_dist_graphs(g: Graph, h: Graph) -> int:
    best = None
    for perm in permutations(range(g.n)):
        d = sum(g.has_edge(i, j) != h.has_edge(perm[i], perm[j]) for i, j in _pairs(g.n))
        if best is None or d < best:
            best = d
    return best


def brute_partition_exists(g: Graph, c: int, s: int) -> bool:
    """Try every assignment of vertices to ``c`` clique slots and ``s`` coclique slots."""
    slots = c + s
    if slots == 0:
        return g.n == 0
    for assign in product(range(slots), repeat=g.n):
        ok = True
        for i, j in _pairs(g.n):
            if assign[i] == assign[j]:
                want = assign[i] < c
                if g.has_edge(i, j) != want:
                    ok = False
                    break
        if ok:
            return True
    return False


def brute_binary_chromatic(g: Graph) -> int:
    m = 1
    while not all(brute_partition_exists(g, c, m - c) for c in range(m + 1)):
        m += 1
    return m


def brute_chromatic(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for assign in product(range(k), repeat=g.n):
            if all(assign[i] != assign[j] for i, j in g.edges()):
                return k
    return 0


def orbit_class_count(n: int) -> int:
    """Number of isomorphism classes, by marking whole orbits of labelled graphs."""
    pairs = _pairs(n)
    index = {p: k for k, p in enumerate(pairs)}
    perms = []
    for perm in permutations(range(n)):
        perms.append([index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs])
    seen = bytearray(1 << len(pairs))
    classes = 0
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        classes += 1
        bits = [k for k in range(len(pairs)) if mask >> k & 1]
        for img in perms:
            seen[sum(1 << img[k] for k in bits)] = 1
    return classes
