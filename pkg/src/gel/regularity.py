"""Pair densities, epsilon-regularity at desk scale, and the G(n, 1/2)
cluster-density concentration experiment."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .graph import Graph

MAX_REGULARITY_SIDE = 16


@dataclass(frozen=True)
class PairDensity:
    a_size: int
    b_size: int
    edges_across: int

    @property
    def density(self) -> Fraction:
        return Fraction(self.edges_across, self.a_size * self.b_size)


def _as_mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def density(g: Graph, a, b) -> PairDensity:
    a, b = list(a), list(b)
    if not a or not b:
        raise ValueError("both vertex sets must be nonempty")
    if set(a) & set(b):
        raise ValueError(f"vertex sets overlap on {sorted(set(a) & set(b))}")
    bm = _as_mask(b)
    across = sum((g.rows[v] & bm).bit_count() for v in set(a))
    return PairDensity(len(set(a)), len(set(b)), across)


@dataclass
class Equipartition:
    exceptional: frozenset[int]
    clusters: list[frozenset[int]]

    def problems(self, n: int, eps: float | None = None) -> list[str]:
        out = []
        seen = set(self.exceptional)
        for i, c in enumerate(self.clusters):
            if seen & c:
                out.append(f"cluster {i} overlaps earlier sets")
            seen |= c
        if seen != set(range(n)):
            out.append("sets do not cover the vertex set")
        if len({len(c) for c in self.clusters}) > 1:
            out.append("clusters differ in size")
        if eps is not None and not len(self.exceptional) < eps * n:
            out.append(f"exceptional set has {len(self.exceptional)} >= eps*n vertices")
        return out


def is_epsilon_regular(g: Graph, a, b, eps: float) -> tuple[bool, tuple[list[int], list[int]] | None]:
    """Exact check of ``|d(X,Y) - d(A,B)| < eps`` for all ``|X| > eps|A|``, ``|Y| > eps|B|``.

    Every subset ``X`` of ``A`` is scanned; for fixed ``X`` and ``|Y| = t``
    the extreme densities come from the ``t`` vertices of ``B`` with the
    most / fewest neighbours in ``X``, so ``Y`` need not be enumerated.
    ``X = A`` qualifies whenever ``|A| > eps|A|``.  Returns the verdict and,
    if irregular, one violating ``(X, Y)``.
    """
    a, b = sorted(set(a)), sorted(set(b))
    if len(a) > MAX_REGULARITY_SIDE or len(b) > MAX_REGULARITY_SIDE:
        raise ValueError(f"exhaustive regularity check is capped at {MAX_REGULARITY_SIDE} "
                         "vertices per side; sample subsets instead")
    base = density(g, a, b).density
    adj = np.array([[g.has_edge(x, y) for y in b] for x in a], dtype=np.int64)
    na, nb = len(a), len(b)
    codes = np.arange(1, 1 << na, dtype=np.int64)
    xmat = (codes[:, None] >> np.arange(na)) & 1
    xsize = xmat.sum(axis=1)
    keep = xsize > eps * na
    codes, xmat, xsize = codes[keep], xmat[keep], xsize[keep]
    if len(codes) == 0:
        return True, None
    deg = xmat @ adj  # neighbours in X of every b
    order_desc = np.argsort(-deg, axis=1, kind="stable")
    top = np.cumsum(np.take_along_axis(deg, order_desc, axis=1), axis=1)
    order_asc = np.argsort(deg, axis=1, kind="stable")
    bottom = np.cumsum(np.take_along_axis(deg, order_asc, axis=1), axis=1)
    base_f = float(base)
    for t in range(1, nb + 1):
        if not t > eps * nb:
            continue
        for sums, order in ((top, order_desc), (bottom, order_asc)):
            dens = sums[:, t - 1] / (xsize * t)
            # float screen, then an exact confirmation
            cand = np.nonzero(np.abs(dens - base_f) >= eps - 1e-12)[0]
            for i in cand:
                exact = Fraction(int(sums[i, t - 1]), int(xsize[i]) * t)
                if abs(exact - base) >= Fraction(eps).limit_denominator(10**12):
                    xs = [a[j] for j in range(na) if codes[i] >> j & 1]
                    ys = sorted(b[j] for j in order[i, :t])
                    return False, (xs, ys)
    return True, None


def is_configuration(g: Graph, clusters, eps: float, delta: float) -> bool:
    """(eps, r, L, delta)-configuration: equal clusters, pairwise eps-regular,
    every pair density strictly inside (delta, 1 - delta)."""
    clusters = [sorted(c) for c in clusters]
    if len({len(c) for c in clusters}) != 1:
        return False
    for x, y in combinations(clusters, 2):
        d = density(g, x, y).density
        if not delta < d < 1 - delta:
            return False
        if not is_epsilon_regular(g, x, y, eps)[0]:
            return False
    return True


# G(n, 1/2) concentration ----------------------------------------------------


@dataclass
class ConcentrationResult:
    n: int
    clusters: int
    f: float
    trials: int
    seed: int | None
    passed: int
    min_density: list[float] = field(default_factory=list)
    max_density: list[float] = field(default_factory=list)

    @property
    def pass_fraction(self) -> float:
        return self.passed / self.trials if self.trials else 1.0

    def to_json(self) -> dict:
        return {"n": self.n, "l": self.clusters, "f": self.f, "trials": self.trials,
                "seed": self.seed, "passed": self.passed, "pass_fraction": self.pass_fraction}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["trial", "min_density", "max_density", "passed"])
        for i, (lo, hi) in enumerate(zip(self.min_density, self.max_density)):
            ok = 0.5 - self.f < lo and hi < 0.5 + self.f
            w.writerow([i, repr(lo), repr(hi), int(ok)])
        return buf.getvalue()


def random_half_adjacency(n: int, rng: np.random.Generator) -> np.ndarray:
    upper = np.triu(rng.random((n, n)) < 0.5, k=1)
    return (upper | upper.T).astype(np.int64)


def concentration_experiment(n: int, clusters: int, f: float, trials: int,
                             seed: int | None = None) -> ConcentrationResult:
    """Fraction of trials in which every cluster pair has density in (1/2 - f, 1/2 + f).

    Each trial draws G(n, 1/2) and a uniformly random equipartition into
    ``clusters`` equal clusters, with the ``n mod clusters`` leftover
    vertices forming the exceptional set.  Trial ``i`` uses the ``i``-th
    child of ``SeedSequence(seed)``, so results do not depend on how trials
    are scheduled.
    """
    if clusters < 2:
        raise ValueError("need at least two clusters")
    if not 0 < f <= 0.5:
        raise ValueError("f must lie in (0, 1/2]")
    size = n // clusters
    if size == 0:
        raise ValueError("more clusters than vertices")
    children = np.random.SeedSequence(seed).spawn(trials)
    res = ConcentrationResult(n, clusters, f, trials, seed, 0)
    for child in children:
        rng = np.random.default_rng(child)
        adj = random_half_adjacency(n, rng)
        perm = rng.permutation(n)[: size * clusters].reshape(clusters, size)
        lo, hi = 1.0, 0.0
        for i, j in combinations(range(clusters), 2):
            d = adj[np.ix_(perm[i], perm[j])].sum() / (size * size)
            lo, hi = min(lo, d), max(hi, d)
        res.min_density.append(float(lo))
        res.max_density.append(float(hi))
        if 0.5 - f < lo and hi < 0.5 + f:
            res.passed += 1
    return res
