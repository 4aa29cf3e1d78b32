"""Closed-form bounds on editing distances to induced-H-free graphs.

Rational inputs give exact :class:`~fractions.Fraction` results; anything
involving a square root is a float.  Leading-term asymptotic bounds are
labelled as such and never compared against exact values at finite ``n``.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb

from .canon import are_isomorphic
from .chib import binary_chromatic, exists_partition
from .errors import DegenerateInput, SolverTimeout
from .families import NAMED_GRAPHS, ForbiddenFamily
from .graph import Graph
from .heuristic import choose_c, expected_edits
from .limits import Limits


def turan_number(n: int, r: int) -> int:
    """ex(n, K_r): edges of the balanced complete (r-1)-partite graph on n vertices."""
    if r < 2 or n < 1:
        raise ValueError(f"need r >= 2 and n >= 1, got n={n}, r={r}")
    parts = r - 1
    q, rem = divmod(n, parts)
    sizes = [q + 1] * rem + [q] * (parts - rem)
    return comb(n, 2) - sum(comb(s, 2) for s in sizes)


def erdos_stone_estimate(n: int, chi: int) -> Fraction:
    """Leading term ``(1 - 1/(chi-1)) C(n,2)`` of ex(n, H) for chi(H) = chi; error term dropped."""
    if chi == 2:
        raise DegenerateInput("bipartite case: the estimate degenerates to o(n^2)")
    if chi < 2:
        raise ValueError(f"chromatic number must be at least 2, got {chi}")
    return (1 - Fraction(1, chi - 1)) * comb(n, 2)


def asymptotic_lower_bound(n: int, k: int) -> Fraction:
    """Leading term n^2/(4k); only valid asymptotically."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return Fraction(n * n, 4 * k)


def one_sided_factor(c0: int, k: int) -> float:
    x = c0 / k
    return 1.0 / (1.0 + 2.0 * math.sqrt(x * (1.0 - x)))


def upper_bound(n: int, k: int, c_min: int, c_max: int) -> tuple[Fraction | float, str]:
    """Upper bound and its case tag.

    ``UB1`` (``C(n,2)/(2k)``) when ``c_min <= k/2 <= c_max``; otherwise
    ``UB2`` using whichever of ``c_min``, ``c_max`` is nearest ``k/2``.
    """
    if not 0 <= c_min <= c_max <= k or k < 1:
        raise ValueError("need 0 <= c_min <= c_max <= k and k >= 1")
    pairs = comb(n, 2)
    half = Fraction(k, 2)
    if c_min <= half <= c_max:
        return Fraction(pairs, 2 * k), "UB1"
    c0 = min((c_min, c_max), key=lambda c: (abs(c - half), c))
    return one_sided_factor(c0, k) * pairs / k, "UB2"


def lub_value(d, n: int, k: int, c: int) -> Fraction:
    """Per-graph bound ``d(1-d)/(dc+(1-d)(k-c)) C(n,2)`` (``C(n,2)/k`` when degenerate)."""
    return expected_edits(d, n, k, c)


def worst_density(k: int, c: int) -> float:
    """Density maximising :func:`lub_value` over ``[0, 1]`` for fixed ``k, c``.

    At ``k = 2c`` the closed form is 0/0; the bound is symmetric about 1/2
    there, so 1/2 is returned.
    """
    if not 0 <= c <= k or k < 1:
        raise ValueError("need 0 <= c <= k and k >= 1")
    if 2 * c == k:
        return 0.5
    return (k - c - math.sqrt(c * (k - c))) / (k - 2 * c)


def worst_value(n: int, k: int, c: int) -> float:
    """``(k - 2 sqrt(c(k-c))) / (k-2c)^2 * C(n,2)``, the maximum of :func:`lub_value`."""
    if 2 * c == k:
        return comb(n, 2) / (2 * k)
    return (k - 2 * math.sqrt(c * (k - c))) / (k - 2 * c) ** 2 * comb(n, 2)


def lub_float(d: float, n: int, k: int, c: int) -> float:
    if (d == 0 and c == k) or (d == 1 and c == 0):
        return comb(n, 2) / k
    return d * (1 - d) / (d * c + (1 - d) * (k - c)) * comb(n, 2)


def balanced_split_distance(n: int) -> int:
    """``C(ceil(n/2), 2) + C(floor(n/2), 2)``: exact value for every 3-vertex H."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return comb((n + 1) // 2, 2) + comb(n // 2, 2)


def q_family_bounds(n: int) -> tuple[int, int]:
    """``(floor((n^2-5n)/4), floor((n^2-n)/4))`` for graphs avoiding all 4-vertex 3-edge graphs."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return (n * n - 5 * n) // 4, (n * n - n) // 4


def chernoff_bound_value(n: int, eps_prime: float, f: float) -> float:
    """``2 * 4^n * exp(-2 eps'^2 f^2 n^2)``, the union bound on a bad cluster pair.

    Computed in log space; ``inf`` if it overflows a float.
    """
    log_v = math.log(2) + n * math.log(4) - 2 * eps_prime**2 * f**2 * n * n
    try:
        return math.exp(log_v)
    except OverflowError:
        return math.inf


# reports ---------------------------------------------------------------


THREE_VERTEX = [NAMED_GRAPHS[x] for x in ("K3", "coK3", "K12", "coK12")]


def _iso_any(h: Graph, options) -> bool:
    return any(are_isomorphic(h, x) for x in options)


def _complete_order(h: Graph) -> int | None:
    """r if h is K_r or its complement (r >= 2), else None."""
    pairs = comb(h.n, 2)
    if h.n >= 2 and h.num_edges in (0, pairs):
        return h.n
    return None


@dataclass
class BoundsReport:
    n: int
    h_name: str
    chi_b: int | None = None
    k: int | None = None
    c_min: int | None = None
    c_max: int | None = None
    turan_value: int | None = None
    lower_bound: float | None = None
    upper_bound: float | None = None
    upper_case: str | None = None
    lub_curve: dict[float, float] = field(default_factory=dict)
    split_value: int | None = None
    q_bounds: tuple[int, int] | None = None
    exact: int | None = None
    timeouts: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = asdict(self)
        out["lub_curve"] = [[d, v] for d, v in sorted(self.lub_curve.items())]
        if self.q_bounds is not None:
            out["q_bounds"] = list(self.q_bounds)
        return out

    def rows(self) -> list[tuple[str, str]]:
        out = []
        for key, value in self.to_json().items():
            if key == "lub_curve":
                value = f"{len(self.lub_curve)} samples"
            out.append((key, "-" if value is None or value == [] else str(value)))
        return out

    def lub_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["d", "bound"])
        for d, v in sorted(self.lub_curve.items()):
            w.writerow([f"{d:.2f}", repr(v)])
        return buf.getvalue()


def report(n: int, family: ForbiddenFamily | Graph, name: str = "", exact: bool = True,
           limits: Limits | None = None, curve_step: float = 0.01) -> BoundsReport:
    """Collect every closed-form bound for ``(n, H)``.

    Bounds driven by the binary chromatic number are only defined for a
    single forbidden graph; the 4-vertex 3-edge family gets its own
    sandwich instead.  ``exact`` additionally runs the exhaustive
    maximisation when ``n <= 7`` (a timeout is recorded, not raised).
    """
    from .editdist import dist_n_forb

    if isinstance(family, Graph):
        family = ForbiddenFamily.single(family, "induced", name)
    rep = BoundsReport(n, name or family.label())
    if len(family.members) == 1:
        h = family.members[0]
        res = binary_chromatic(h, limits)
        k = res.k
        if k < 1:
            raise ValueError(f"chi_B({rep.h_name}) = {res.chi_b} gives k = 0; bounds undefined")
        bad = [c for c in range(k + 1) if exists_partition(h, c, k - c, limits) is None]
        c_min, c_max = bad[0], bad[-1]
        rep.chi_b, rep.k, rep.c_min, rep.c_max = res.chi_b, k, c_min, c_max
        rep.lower_bound = float(asymptotic_lower_bound(n, k))
        ub, case = upper_bound(n, k, c_min, c_max)
        rep.upper_bound, rep.upper_case = float(ub), case
        steps = round(1 / curve_step)
        for i in range(steps + 1):
            d = Fraction(i, steps)
            c = choose_c(d, k, c_min, c_max)
            rep.lub_curve[float(d)] = float(lub_value(d, n, k, c))
        rep.notes.append("lower_bound is the asymptotic leading term n^2/(4k); no finite-n guarantee")
        r = _complete_order(h)
        if r is not None:
            rep.turan_value = comb(n, 2) - turan_number(n, r)
        if _iso_any(h, THREE_VERTEX):
            rep.split_value = balanced_split_distance(n)
    if family.is_q and n >= 5:
        rep.q_bounds = q_family_bounds(n)
    if exact:
        if n <= 7 and all(h.n <= 5 for h in family.members):
            try:
                rep.exact = dist_n_forb(n, family, limits).distance
            except SolverTimeout as exc:
                rep.timeouts.append(f"exact: {exc}")
        else:
            rep.notes.append("exact value skipped: n > 7 or forbidden graph too large")
    return rep
