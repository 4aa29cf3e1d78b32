"""Randomized clique/coclique editor and its derandomization.

Vertices receive one of ``k`` colours: colours ``0..c-1`` (clique colours)
each with probability ``p`` and ``c..k-1`` (coclique colours) each with
probability ``q``, where ``c*p + (k-c)*q = 1``.  Each clique colour class
is completed, each coclique colour class is emptied.  The result splits
into at most ``c`` cliques and ``k - c`` cocliques, so any ``H`` without
such a partition cannot occur in it as an induced subgraph.

All probabilities are exact :class:`~fractions.Fraction` values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .graph import Graph, VertexPair
from .partition import CLIQUE, COCLIQUE, Partition


@dataclass(frozen=True)
class EditorPlan:
    k: int
    c: int
    p: Fraction
    q: Fraction
    d: Fraction
    degenerate: bool = False

    def __post_init__(self):
        if not 0 <= self.c <= self.k or self.k < 1:
            raise ValueError(f"need 0 <= c <= k and k >= 1, got k={self.k}, c={self.c}")
        if self.p < 0 or self.q < 0 or self.c * self.p + (self.k - self.c) * self.q != 1:
            raise ValueError("colour probabilities must be nonnegative and sum to 1")

    def to_json(self) -> dict:
        return {"k": self.k, "c": self.c, "p": float(self.p), "q": float(self.q), "d": float(self.d)}


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        # 0.4 means 2/5, not its binary expansion
        return Fraction(x).limit_denominator(10**12)
    return Fraction(x)


def choose_c(d, k: int, c_min: int, c_max: int) -> int:
    """Pick the clique-colour count for a graph of density ``d``.

    When ``c_min <= k/2 <= c_max`` sparse graphs (``d <= 1/2``) use
    ``c_min`` and dense ones ``c_max``; otherwise whichever of the two is
    nearer ``k/2``, the smaller one on a tie.
    """
    d = _frac(d)
    if not (0 <= c_min <= c_max <= k) or not 0 <= d <= 1:
        raise ValueError("need 0 <= c_min <= c_max <= k and 0 <= d <= 1")
    half = Fraction(k, 2)
    if c_min <= half <= c_max:
        return c_min if d <= Fraction(1, 2) else c_max
    return min((c_min, c_max), key=lambda c: (abs(c - half), c))


def is_degenerate(d, k: int, c: int) -> bool:
    d = _frac(d)
    return (d == 0 and c == k) or (d == 1 and c == 0)


def optimal_probabilities(d, k: int, c: int) -> tuple[Fraction, Fraction]:
    """Minimisers of expected edits subject to ``c p + (k-c) q = 1``.

    Raises :class:`~gel.errors.DegenerateInput` at ``(d=0, c=k)`` and
    ``(d=1, c=0)``, where the denominator vanishes.
    """
    from .errors import DegenerateInput

    d = _frac(d)
    if is_degenerate(d, k, c):
        raise DegenerateInput(f"degenerate plan: d={d}, c={c}, k={k}")
    denom = d * c + (1 - d) * (k - c)
    return d / denom, (1 - d) / denom


def make_plan(d, k: int, c: int) -> EditorPlan:
    """Plan with optimal probabilities; degenerate cases weight every colour by 1.

    Weight 1 on each of the ``k`` colours normalises to ``1/k``, whose
    expected edit count is ``C(n,2)/k``.
    """
    d = _frac(d)
    if is_degenerate(d, k, c):
        uniform = Fraction(1, k)
        return EditorPlan(k, c, uniform, uniform, d, degenerate=True)
    p, q = optimal_probabilities(d, k, c)
    return EditorPlan(k, c, p, q, d)


def expected_edits(d, n: int, k: int, c: int) -> Fraction:
    d = _frac(d)
    pairs = comb(n, 2)
    if is_degenerate(d, k, c):
        return Fraction(pairs, k)
    return d * (1 - d) / (d * c + (1 - d) * (k - c)) * pairs


def plan_expectation(plan: EditorPlan, g: Graph) -> Fraction:
    """Expected toggles of the colouring procedure for this exact plan on ``g``."""
    e = g.num_edges
    non = comb(g.n, 2) - e
    return non * plan.c * plan.p**2 + e * (plan.k - plan.c) * plan.q**2


@dataclass
class EditOutcome:
    graph: Graph
    edits: list[VertexPair]
    partition: Partition
    plan: EditorPlan
    colors: list[int]

    @property
    def edit_count(self) -> int:
        return len(self.edits)

    def to_json(self) -> dict:
        return {
            "plan": self.plan.to_json(),
            "edits": [list(p) for p in self.edits],
            "edit_count": self.edit_count,
            "partition": self.partition.to_json(),
        }


def apply_coloring(g: Graph, colors: list[int], plan: EditorPlan) -> EditOutcome:
    edits = []
    for j in range(g.n):
        for i in range(j):
            x = colors[i]
            if x != colors[j]:
                continue
            if x < plan.c and not g.has_edge(i, j):
                edits.append(VertexPair(i, j))
            elif x >= plan.c and g.has_edge(i, j):
                edits.append(VertexPair(i, j))
    edits.sort()
    blocks = []
    for x in range(plan.k):
        members = [v for v in range(g.n) if colors[v] == x]
        if members:
            blocks.append((members, CLIQUE if x < plan.c else COCLIQUE))
    return EditOutcome(g.toggled(edits), edits, Partition.of(blocks), plan, list(colors))


def randomized_edit(g: Graph, k: int, c: int, seed=None, plan: EditorPlan | None = None) -> EditOutcome:
    """One run of the colouring procedure; colours drawn in vertex order from ``seed``."""
    plan = plan or make_plan(g.density, k, c)
    probs = np.array([float(plan.p)] * plan.c + [float(plan.q)] * (plan.k - plan.c))
    probs /= probs.sum()
    rng = np.random.default_rng(seed)
    colors = [int(x) for x in rng.choice(plan.k, size=g.n, p=probs)] if g.n else []
    return apply_coloring(g, colors, plan)


def derandomized_edit(g: Graph, k: int, c: int, plan: EditorPlan | None = None) -> EditOutcome:
    """Method of conditional expectations over the same colour distribution.

    Vertex ``v`` takes the colour minimising the expected number of edits
    given the colours already fixed, with later vertices still random.  A
    colour choice for ``v`` only changes the expected cost of pairs through
    ``v``, so only those are compared.  The conditional expectation never
    increases, hence the final count is at most the plan's expectation.
    """
    plan = plan or make_plan(g.density, k, c)
    n = g.n
    weight = [plan.p] * plan.c + [plan.q] * (plan.k - plan.c)
    colors: list[int] = []
    for v in range(n):
        later_edges = sum(1 for w in range(v + 1, n) if g.has_edge(v, w))
        later_non = (n - v - 1) - later_edges
        best_x, best_cost = 0, None
        for x in range(plan.k):
            clique = x < plan.c
            fixed = sum(1 for u in range(v) if colors[u] == x and g.has_edge(u, v) != clique)
            cost = fixed + weight[x] * (later_non if clique else later_edges)
            if best_cost is None or cost < best_cost:
                best_x, best_cost = x, cost
        colors.append(best_x)
    return apply_coloring(g, colors, plan)
