"""Named small graphs, generator specs and forbidden families.

Graphs cross the command line as generator specs (``cycle:7``,
``kpq:3,2``, ``gnp:20,0.5,seed=7``, ``affine:5``), short names (``P4``,
``K3``, ``coK12``) or graph6 strings.  graph6 never uses ``:``, so a colon
always means a generator spec.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import graph as G
from . import graph6
from .canon import are_isomorphic
from .graph import Graph

Mode = Literal["induced", "subgraph"]


def _named() -> dict[str, Graph]:
    k3 = G.complete(3)
    k12 = G.path(3)
    named = {
        "K1": G.complete(1),
        "K2": G.complete(2),
        "K3": k3,
        "K4": G.complete(4),
        "K5": G.complete(5),
        "E2": G.empty(2),
        "E3": G.empty(3),
        "coK3": k3.complement(),
        "K12": k12,
        "P3": k12,
        "coK12": k12.complement(),
        "P4": G.path(4),
        "P5": G.path(5),
        "C4": G.cycle(4),
        "C5": G.cycle(5),
        "K13": G.star(3),
        "claw": G.star(3),
        "K3K1": G.disjoint_union(k3, G.complete(1)),
        "2K2": G.disjoint_union(G.complete(2), G.complete(2)),
        "paw": Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
        "diamond": G.complete(4).toggled([(0, 1)]),
    }
    return named


NAMED_GRAPHS = _named()

# the 4-vertex, 3-edge graphs
Q_MEMBERS = ("P4", "K13", "K3K1")


def generate(spec: str) -> Graph:
    """Build a graph from a ``kind:args`` generator spec."""
    kind, _, args = spec.partition(":")
    kind = kind.strip().lower()
    parts = [a.strip() for a in args.split(",") if a.strip()]
    try:
        if kind in ("complete", "k"):
            return G.complete(int(parts[0]))
        if kind in ("empty", "e"):
            return G.empty(int(parts[0]))
        if kind in ("path", "p"):
            return G.path(int(parts[0]))
        if kind in ("cycle", "c"):
            return G.cycle(int(parts[0]))
        if kind == "star":
            return G.star(int(parts[0]))
        if kind == "kpq":
            return G.complete_multipartite(int(parts[0]), int(parts[1]))
        if kind == "kab":
            return G.complete_bipartite(int(parts[0]), int(parts[1]))
        if kind == "gnp":
            seed = None
            rest = []
            for a in parts[1:]:
                if a.startswith("seed="):
                    seed = int(a[5:])
                else:
                    rest.append(a)
            if len(rest) != 1:
                raise ValueError("gnp needs n and p")
            return G.gnp(int(parts[0]), float(rest[0]), seed=seed)
        if kind == "affine":
            from .construct import affine_construction

            return affine_construction(int(parts[0]))[0]
        if kind == "g6":
            return graph6.decode(args)
    except IndexError:
        raise ValueError(f"generator spec {spec!r} is missing arguments") from None
    raise ValueError(f"unknown generator {kind!r} in spec {spec!r}")


def parse_graph(text: str) -> Graph:
    text = text.strip()
    if ":" in text:
        return generate(text)
    if text in NAMED_GRAPHS:
        return NAMED_GRAPHS[text]
    return graph6.decode(text)


@dataclass(frozen=True)
class ForbiddenFamily:
    members: tuple[Graph, ...]
    mode: Mode = "induced"
    name: str = ""

    def __post_init__(self):
        if not self.members:
            raise ValueError("a forbidden family needs at least one member")
        if self.mode not in ("induced", "subgraph"):
            raise ValueError(f"unknown mode {self.mode!r}")
        for a in range(len(self.members)):
            for b in range(a):
                if are_isomorphic(self.members[a], self.members[b]):
                    raise ValueError(f"family members {b} and {a} are isomorphic")

    @classmethod
    def single(cls, h: Graph, mode: Mode = "induced", name: str = "") -> "ForbiddenFamily":
        return cls((h,), mode, name)

    @property
    def is_q(self) -> bool:
        if self.mode != "induced" or len(self.members) != 3:
            return False
        q = [NAMED_GRAPHS[m] for m in Q_MEMBERS]
        return all(any(are_isomorphic(h, x) for x in q) for h in self.members)

    def complement(self) -> "ForbiddenFamily":
        name = f"co({self.name})" if self.name else ""
        return ForbiddenFamily(tuple(h.complement() for h in self.members), self.mode, name)

    def label(self) -> str:
        if self.name:
            return self.name
        return "+".join(graph6.encode(h) for h in self.members)


Q_FAMILY = ForbiddenFamily(tuple(NAMED_GRAPHS[m] for m in Q_MEMBERS), "induced", "4v3e")


def parse_family(text: str) -> ForbiddenFamily:
    """``forb:K3`` (induced), ``sub:K3`` (subgraph), ``forbset:4v3e`` / ``forbset:P4,C4``.

    A bare graph description means a single induced member.
    """
    text = text.strip()
    head, sep, rest = text.partition(":")
    if sep and head == "forbset":
        if rest == "4v3e" or rest.upper() == "Q":
            return Q_FAMILY
        members = tuple(parse_graph(x) for x in rest.split(","))
        return ForbiddenFamily(members, "induced", rest)
    if sep and head in ("forb", "sub"):
        mode: Mode = "induced" if head == "forb" else "subgraph"
        return ForbiddenFamily.single(parse_graph(rest), mode, rest)
    if text == "4v3e":
        return Q_FAMILY
    return ForbiddenFamily.single(parse_graph(text), "induced", text)
