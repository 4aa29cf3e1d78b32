"""Binary chromatic number and the partition problems behind it.

``chi_B(G)`` is the least ``m`` such that for every ``c`` in ``0..m`` the
vertices split into at most ``c`` cliques and at most ``m - c`` cocliques.
Empty blocks are allowed, which makes feasibility monotone in ``m``: a
partition for ``(c, m - c)`` is also one for ``(c, m + 1 - c)``, and
``(m, 0)`` covers ``c = m + 1``.  The search therefore starts at the lower
bound ``max(chi(G), chi(co-G))`` and walks upward.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .limits import Limits, as_limits
from .partition import CLIQUE, COCLIQUE, Partition


def exists_partition(g: Graph, c: int, s: int, limits: Limits | None = None) -> Partition | None:
    """A partition into at most ``c`` cliques and ``s`` cocliques, or ``None``.

    Vertices are placed in descending-degree order.  A vertex may join any
    compatible open block or open the next empty clique/coclique block;
    opening only the next block is the symmetry breaking that keeps
    permuted block lists out of the search.
    """
    if c < 0 or s < 0:
        raise ValueError("block counts must be nonnegative")
    n = g.n
    if n == 0:
        return Partition(())
    if c + s >= n:
        # singletons are both cliques and cocliques
        blocks = [([v], CLIQUE) for v in range(min(c, n))]
        blocks += [([v], COCLIQUE) for v in range(min(c, n), n)]
        return Partition.of(blocks)
    if c + s == 0:
        return None
    lim = as_limits(limits, "exists_partition")
    rows = g.rows
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    cliques: list[int] = []
    cocliques: list[int] = []

    def stuck(pos: int) -> bool:
        # forward check once no fresh blocks remain
        for v in order[pos:]:
            r = rows[v]
            if not any(b & ~r == 0 for b in cliques) and not any(b & r == 0 for b in cocliques):
                return True
        return False

    def place(pos: int) -> bool:
        lim.tick()
        if pos == n:
            return True
        if len(cliques) == c and len(cocliques) == s and stuck(pos):
            return False
        v = order[pos]
        bit = 1 << v
        r = rows[v]
        for i, b in enumerate(cliques):
            if b & ~r == 0:
                cliques[i] = b | bit
                if place(pos + 1):
                    return True
                cliques[i] = b
        if len(cliques) < c:
            cliques.append(bit)
            if place(pos + 1):
                return True
            cliques.pop()
        for i, b in enumerate(cocliques):
            if b & r == 0:
                cocliques[i] = b | bit
                if place(pos + 1):
                    return True
                cocliques[i] = b
        if len(cocliques) < s:
            cocliques.append(bit)
            if place(pos + 1):
                return True
            cocliques.pop()
        return False

    if not place(0):
        return None

    def members(mask: int) -> list[int]:
        return [v for v in range(n) if mask >> v & 1]

    return Partition.of([(members(b), CLIQUE) for b in cliques] + [(members(b), COCLIQUE) for b in cocliques])


@dataclass
class FeasibilityTable:
    """Feasibility of ``(c, k+1-c)`` partitions for ``c`` in ``0..k+1``."""

    k: int
    feasible: dict[int, bool]
    witnesses: dict[int, Partition | None] = field(default_factory=dict, repr=False)

    @property
    def all_feasible(self) -> bool:
        return all(self.feasible.values())

    def to_json(self) -> list[dict]:
        return [{"cliques": c, "cocliques": self.k + 1 - c, "feasible": ok}
                for c, ok in sorted(self.feasible.items())]


def feasibility_table(g: Graph, m: int, limits: Limits | None = None) -> FeasibilityTable:
    """Table for ``m`` total blocks (so ``k = m - 1``)."""
    lim = as_limits(limits, "feasibility_table")
    wit = {c: exists_partition(g, c, m - c, lim) for c in range(m + 1)}
    return FeasibilityTable(m - 1, {c: w is not None for c, w in wit.items()}, wit)


@dataclass
class BinaryChromatic:
    chi_b: int
    table: FeasibilityTable

    @property
    def k(self) -> int:
        return self.chi_b - 1


def binary_chromatic(g: Graph, limits: Limits | None = None) -> BinaryChromatic:
    if g.n > 30:
        raise ValueError(f"binary chromatic number is limited to 30 vertices, got {g.n}")
    lim = as_limits(limits, "binary_chromatic")
    m = max(chromatic_number(g, lim), chromatic_number(g.complement(), lim), 1)
    while True:
        table = feasibility_table(g, m, lim)
        if table.all_feasible:
            return BinaryChromatic(m, table)
        m += 1


def binary_chromatic_number(g: Graph, limits: Limits | None = None) -> int:
    return binary_chromatic(g, limits).chi_b


def c_min_c_max(g: Graph, limits: Limits | None = None) -> tuple[int, int, int]:
    """``(k, c_min, c_max)`` with ``k = chi_B - 1``.

    ``c_min``/``c_max`` are the least/greatest ``c`` in ``0..k`` admitting no
    partition into ``c`` cliques and ``k - c`` cocliques.
    """
    lim = as_limits(limits, "c_min_c_max")
    k = binary_chromatic(g, lim).k
    if k < 1:
        raise ValueError("c_min/c_max need chi_B >= 2")
    bad = [c for c in range(k + 1) if exists_partition(g, c, k - c, lim) is None]
    return k, bad[0], bad[-1]


# classical colouring ---------------------------------------------------


def max_clique(g: Graph, limits: Limits | None = None) -> list[int]:
    lim = as_limits(limits, "max_clique")
    rows = g.rows
    best = 0
    best_set = 0

    def expand(current: int, size: int, cand: int) -> None:
        nonlocal best, best_set
        lim.tick()
        if not cand:
            if size > best:
                best, best_set = size, current
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(current | low, size + 1, cand & rows[v])
            cand ^= low

    expand(0, 0, (1 << g.n) - 1)
    return [v for v in range(g.n) if best_set >> v & 1]


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    color = [-1] * n
    for _ in range(n):
        best_v, best_key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[u] for u in g.neighbors(v) if color[u] >= 0})
            key = (sat, g.degree(v), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        used = {color[u] for u in g.neighbors(best_v)}
        color[best_v] = next(x for x in range(n) if x not in used)
    return color


def coloring(g: Graph, limits: Limits | None = None) -> list[int]:
    """An optimal proper colouring (DSATUR branch and bound)."""
    n = g.n
    if n == 0:
        return []
    lim = as_limits(limits, "chromatic_number")
    clique = max_clique(g, lim)
    lower = len(clique)
    best = _dsatur_greedy(g)
    best_k = max(best) + 1
    if best_k == lower:
        return best
    rows = g.rows
    color = [-1] * n
    # seed the clique with fixed distinct colours
    for i, v in enumerate(clique):
        color[v] = i
    nbr_colors = [0] * n  # bitmask of colours present in each neighbourhood
    for v in clique:
        for u in range(n):
            if rows[v] >> u & 1:
                nbr_colors[u] |= 1 << color[v]

    def search(colored: int, used: int) -> bool:
        nonlocal best, best_k
        lim.tick()
        if colored == n:
            best, best_k = color[:], used
            return best_k == lower
        v, key = -1, None
        for u in range(n):
            if color[u] < 0:
                k2 = (nbr_colors[u].bit_count(), rows[u].bit_count())
                if key is None or k2 > key:
                    v, key = u, k2
        limit = min(used + 1, best_k - 1)
        for x in range(limit):
            if nbr_colors[v] >> x & 1:
                continue
            color[v] = x
            touched = []
            r = rows[v]
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not nbr_colors[u] >> x & 1:
                    nbr_colors[u] |= 1 << x
                    touched.append(u)
                r ^= low
            done = search(colored + 1, max(used, x + 1))
            for u in touched:
                nbr_colors[u] &= ~(1 << x)
            color[v] = -1
            if done:
                return True
        return False

    search(len(clique), lower)
    return best


def chromatic_number(g: Graph, limits: Limits | None = None) -> int:
    if g.n > 30:
        raise ValueError(f"chromatic number is limited to 30 vertices, got {g.n}")
    c = coloring(g, limits)
    return max(c) + 1 if c else 0


def clique_cover_number(g: Graph, limits: Limits | None = None) -> int:
    return chromatic_number(g.complement(), limits)
