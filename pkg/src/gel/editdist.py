"""Exact editing distances.

``dist_to_forb`` is a bounded search tree: find one forbidden copy, branch
on toggling each still-unfrozen pair inside it, freeze what was toggled.
Any valid edit set must toggle a pair inside every copy present in the
current graph, so the tree is complete.  Because only toggled pairs are
frozen, the frozen set is determined by the current graph, which lets a
plain ``graph -> failed budget`` table deduplicate reordered edit
sequences.  A greedy packing of copies with disjoint free pairs gives the
lower bound used both for pruning and as the first deepening budget.

Graphs are encoded as pair bitmasks (see :func:`gel.graph.pair_index`).
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from . import graph6
from .canon import canonical_form, enumerate_nonisomorphic
from .errors import SolverTimeout
from .families import ForbiddenFamily
from .graph import Graph, VertexPair, find_copy, pair_index
from .limits import Limits, as_limits

MAX_SEARCH_N = 12


@dataclass
class EditResult:
    distance: int
    edits: list[VertexPair]
    graph: Graph
    nodes: int = 0

    def to_json(self) -> dict:
        return {
            "distance": self.distance,
            "edits": [list(p) for p in self.edits],
            "witness_graph6": graph6.encode(self.graph),
        }


# copy detection tables ---------------------------------------------------


def family_key(f: ForbiddenFamily) -> tuple:
    return (f.mode, tuple(sorted(canonical_form(h) for h in f.members)))


def _local_patterns(h: Graph, induced: bool) -> frozenset[int]:
    """All labelled copies of ``h`` on vertex set ``range(h.n)`` as pair masks."""
    out = set()
    for perm in permutations(range(h.n)):
        mask = 0
        for u, v in h.edges():
            mask |= 1 << pair_index(perm[u], perm[v])
        out.add(mask)
    return frozenset(out)


@dataclass
class CopyTable:
    """Per vertex subset: its pair mask and the masks that signal a copy.

    In induced mode a subset hosts a copy iff ``G & span`` is one of
    ``patterns``; in subgraph mode iff ``G & p == p`` for some pattern.
    """

    n: int
    induced: bool
    spans: list[int] = field(default_factory=list)
    patterns: list[frozenset[int] | tuple[int, ...]] = field(default_factory=list)


@lru_cache(maxsize=64)
def _copy_table(n: int, key: tuple) -> CopyTable:
    mode, forms = key
    members = [graph6.decode(f) for f in forms]
    induced = mode == "induced"
    table = CopyTable(n, induced)
    by_size: dict[int, set[int]] = {}
    for h in members:
        by_size.setdefault(h.n, set()).update(_local_patterns(h, induced))
    for h_n, local in sorted(by_size.items()):
        if h_n > n:
            continue
        local_pairs = [(i, j) for j in range(h_n) for i in range(j)]
        for subset in combinations(range(n), h_n):
            bits = [1 << pair_index(subset[i], subset[j]) for i, j in local_pairs]
            span = sum(bits)
            glob = []
            for pat in local:
                m = 0
                for idx, b in enumerate(bits):
                    if pat >> idx & 1:
                        m |= b
                glob.append(m)
            if h_n < 2:
                # a single vertex is always a copy of K1, with nothing to toggle
                span = 0
            table.spans.append(span)
            table.patterns.append(frozenset(glob) if induced else tuple(sorted(glob)))
    return table


def copy_table(n: int, f: ForbiddenFamily) -> CopyTable:
    return _copy_table(n, family_key(f))




# search -----------------------------------------------------------------


class _Search:
    def __init__(self, table: CopyTable, start: int, limits: Limits,
                 deletions_only: bool = False, locked: int = 0):
        self.table = table
        self.start = start
        self.lim = limits
        self.deletions_only = deletions_only
        # pairs that may never be toggled (lexicographic refinement)
        self.locked = locked
        self.failed: dict[int, int] = {}

    def scan(self, mask: int) -> tuple[int, int] | None:
        """``(lower bound, free pairs of the tightest copy)``; ``None`` if stuck.

        ``(0, 0)`` means the graph is already free.
        """
        frozen = (mask ^ self.start) | self.locked
        used = 0
        lb = 0
        best_free = 0
        best_count = 1 << 30
        t = self.table
        if t.induced:
            for span, pats in zip(t.spans, t.patterns):
                if mask & span in pats:
                    free = span & ~frozen
                    if not free:
                        return None
                    cnt = free.bit_count()
                    if cnt < best_count:
                        best_count, best_free = cnt, free
                    if not free & used:
                        lb += 1
                        used |= free
        else:
            for pats in t.patterns:
                for p in pats:
                    if mask & p == p:
                        free = p & ~frozen
                        if not free:
                            return None
                        cnt = free.bit_count()
                        if cnt < best_count:
                            best_count, best_free = cnt, free
                        if not free & used:
                            lb += 1
                            used |= free
        return lb, best_free

    def feasible(self, mask: int, budget: int, path: list[int]) -> bool:
        self.lim.tick()
        if self.failed.get(mask, -1) >= budget:
            return False
        res = self.scan(mask)
        if res is not None:
            lb, free = res
            if lb == 0:
                return True
            if lb <= budget:
                while free:
                    low = free & -free
                    free ^= low
                    if self.deletions_only and not mask & low:
                        continue
                    path.append(low)
                    if self.feasible(mask ^ low, budget - 1, path):
                        return True
                    path.pop()
        if self.failed.get(mask, -1) < budget:
            self.failed[mask] = budget
        return False

    def lower_bound(self) -> int | None:
        res = self.scan(self.start)
        return None if res is None else res[0]


def _bits_to_pairs(bits: list[int], n: int) -> list[VertexPair]:
    index = {pair_index(i, j): VertexPair(i, j) for j in range(n) for i in range(j)}
    return sorted(index[b.bit_length() - 1] for b in bits)


def _check_size(g: Graph, allow_large: bool) -> None:
    if g.n > MAX_SEARCH_N and not allow_large:
        raise ValueError(f"exact editing search is limited to {MAX_SEARCH_N} vertices "
                         f"(got {g.n}); pass allow_large=True to override")


def search_with_budget(g: Graph, f: ForbiddenFamily, budget: int,
                       limits: Limits | None = None, deletions_only: bool = False) -> list[VertexPair] | None:
    """Some edit set of size at most ``budget`` making ``g`` family-free, or ``None``."""
    table = copy_table(g.n, f)
    s = _Search(table, g.pairmask(), as_limits(limits, "dist_to_forb"), deletions_only or not table.induced)
    path: list[int] = []
    if s.feasible(s.start, budget, path):
        return _bits_to_pairs(path, g.n)
    return None


def _optimum(s: _Search) -> tuple[int, list[int]]:
    lb = s.lower_bound()
    if lb is None:
        raise ValueError("no edit set exists")
    budget = lb
    while True:
        path: list[int] = []
        if s.feasible(s.start, budget, path):
            return budget, path
        budget += 1


def _lex_least(g: Graph, table: CopyTable, d: int, lim: Limits, deletions_only: bool) -> list[int]:
    order = sorted(((i, j) for j in range(g.n) for i in range(j)))
    start = g.pairmask()
    chosen = 0
    excluded = 0
    count = 0
    for i, j in order:
        if count == d:
            break
        bit = 1 << pair_index(i, j)
        if deletions_only and not start & bit:
            excluded |= bit
            continue
        trial = _Search(table, start ^ chosen ^ bit, lim, deletions_only, locked=excluded | chosen | bit)
        path: list[int] = []
        if trial.feasible(trial.start, d - count - 1, path):
            chosen |= bit
            count += 1
        else:
            excluded |= bit
    return [1 << k for k in range(chosen.bit_length()) if chosen >> k & 1]


def dist_to_forb(g: Graph, f: ForbiddenFamily, limits: Limits | None = None,
                 lex_least: bool = True, allow_large: bool = False) -> EditResult:
    """Minimum number of toggles making ``g`` free of every member of ``f``.

    Among optimal edit sets the lexicographically least one is returned
    unless ``lex_least`` is off (then the first one found).  In subgraph
    mode additions never help, so only deletions are branched on.
    """
    _check_size(g, allow_large)
    lim = as_limits(limits, "dist_to_forb")
    table = copy_table(g.n, f)
    deletions_only = not table.induced
    s = _Search(table, g.pairmask(), lim, deletions_only)
    try:
        d, path = _optimum(s)
        if lex_least and d:
            path = _lex_least(g, table, d, lim, deletions_only)
    except SolverTimeout as exc:
        exc.graph = g
        raise
    edits = _bits_to_pairs(path, g.n)
    return EditResult(d, edits, g.toggled(edits), lim.nodes)


def deletion_only_dist(g: Graph, f: ForbiddenFamily, limits: Limits | None = None,
                       allow_large: bool = False) -> int:
    """Fewest deletions leaving no member of ``f`` as a (not necessarily induced) subgraph."""
    if f.mode != "subgraph":
        raise ValueError("deletion-only distance is defined for subgraph-mode families")
    _check_size(g, allow_large)
    lim = as_limits(limits, "deletion_only_dist")
    s = _Search(copy_table(g.n, f), g.pairmask(), lim, deletions_only=True)
    try:
        return _optimum(s)[0]
    except SolverTimeout as exc:
        exc.graph = g
        raise


def is_family_free(g: Graph, f: ForbiddenFamily) -> bool:
    induced = f.mode == "induced"
    return all(find_copy(g, h, induced=induced) is None for h in f.members)


# distance between two graphs ---------------------------------------------------


def dist_graphs(g: Graph, h: Graph, limits: Limits | None = None) -> tuple[int, dict[int, int]]:
    """``min |E(g) xor E(pi(h))|`` over bijections, with a witness ``V(g) -> V(h)``."""
    if g.n != h.n:
        raise ValueError(f"vertex counts differ: {g.n} != {h.n}")
    n = g.n
    if n > 9:
        raise ValueError(f"dist_graphs is limited to 9 vertices, got {n}")
    lim = as_limits(limits, "dist_graphs")
    floor = abs(g.num_edges - h.num_edges)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    best_map = {v: v for v in range(n)}
    best = sum((a ^ b).bit_count() for a, b in zip(g.rows, h.rows)) // 2
    image = [0] * n
    grows, hrows = g.rows, h.rows

    def extend(pos: int, used: int, cost: int) -> bool:
        nonlocal best, best_map
        lim.tick()
        if pos == n:
            best = cost
            best_map = {order[i]: image[i] for i in range(n)}
            return best == floor
        x = order[pos]
        for y in range(n):
            if used >> y & 1:
                continue
            add = 0
            gx, hy = grows[x], hrows[y]
            for i in range(pos):
                add += (gx >> order[i] & 1) != (hy >> image[i] & 1)
            if cost + add < best:
                image[pos] = y
                if extend(pos + 1, used | 1 << y, cost + add):
                    return True
        return False

    if best > floor:
        extend(0, 0, 0)
    return best, best_map


# maximum over all n-vertex graphs ------------------------------------------------


_EXACT_CACHE: dict[tuple, int] = {}


@dataclass
class MaxDistResult:
    distance: int
    extremal: Graph
    graphs: int
    nodes: int

    def to_json(self) -> dict:
        return {"distance": self.distance, "extremal": graph6.encode(self.extremal),
                "graphs_examined": self.graphs}


def _exceeds(g: Graph, f: ForbiddenFamily, threshold: int, lim: Limits) -> int | None:
    """Exact distance of ``g`` if it is larger than ``threshold``, else ``None``."""
    key = (family_key(f), canonical_form(g))
    if key in _EXACT_CACHE:
        d = _EXACT_CACHE[key]
        return d if d > threshold else None
    table = copy_table(g.n, f)
    s = _Search(table, g.pairmask(), lim, not table.induced)
    try:
        lb = s.lower_bound()
        if lb is None:
            raise ValueError("no edit set exists")
        if lb <= threshold and s.feasible(s.start, threshold, []):
            return None
        budget = max(lb, threshold + 1)
        while not s.feasible(s.start, budget, []):
            budget += 1
    except SolverTimeout as exc:
        exc.graph = g
        raise
    _EXACT_CACHE[key] = budget
    return budget


def _scan(graphs: list[Graph], f: ForbiddenFamily, lim: Limits) -> tuple[int, int | None]:
    """Threshold scan: ``(best, index of the first maximiser)``."""
    best, where = -1, None
    for i, g in enumerate(graphs):
        d = _exceeds(g, f, best, lim)
        if d is not None:
            best, where = d, i
    return best, where


def _scan_worker(graphs, f, budget, timeout):
    lim = Limits(budget, timeout, "dist_n_forb")
    best, where = _scan(graphs, f, lim)
    return best, where, lim.nodes


def dist_n_forb(n: int, f: ForbiddenFamily, limits: Limits | None = None,
                allow_large: bool = False, jobs: int = 1) -> MaxDistResult:
    """``max Dist(G, Forb)`` over all ``n``-vertex graphs, with a maximiser.

    Graphs are visited in canonical graph6 order; each one is first tested
    against the running maximum, so only graphs that beat it are solved
    exactly.  The reported extremal graph is the first maximiser in that
    order.  With ``jobs > 1`` contiguous slices are scanned in worker
    processes and merged by (distance, position), which gives the same
    answer; each worker gets the full node budget.
    """
    if n > 7 and not allow_large:
        raise ValueError("dist_n_forb beyond n=7 needs allow_large=True")
    lim = as_limits(limits, "dist_n_forb")
    graphs = list(enumerate_nonisomorphic(n, allow_large=allow_large))
    if jobs <= 1 or len(graphs) < 2 * jobs:
        start = lim.nodes
        best, where = _scan(graphs, f, lim)
        return MaxDistResult(best, graphs[where], len(graphs), lim.nodes - start)

    size = -(-len(graphs) // jobs)
    slices = [graphs[i:i + size] for i in range(0, len(graphs), size)]
    timeout = None if lim.deadline is None else max(lim.deadline - time.monotonic(), 0.0)
    m = len(slices)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_scan_worker, slices, [f] * m, [lim.budget] * m, [timeout] * m))
    best, extremal, nodes = -1, None, 0
    for chunk, (d, where, used) in zip(slices, parts):
        nodes += used
        if d > best:
            best, extremal = d, chunk[where]
    lim.nodes += nodes
    return MaxDistResult(best, extremal, len(graphs), nodes)


def dist_all(n: int, f: ForbiddenFamily, limits: Limits | None = None) -> dict[bytes, int]:
    """Exact distance for every isomorphism class on ``n`` vertices."""
    lim = as_limits(limits, "dist_all")
    out = {}
    for g in enumerate_nonisomorphic(n):
        out[canonical_form(g)] = dist_to_forb(g, f, lim, lex_least=False).distance
    return out
