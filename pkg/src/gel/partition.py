"""Vertex partitions into designated cliques and cocliques."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal

from .graph import Graph

CLIQUE = "clique"
COCLIQUE = "coclique"
Kind = Literal["clique", "coclique"]


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    kind: Kind

    def __post_init__(self):
        if self.kind not in (CLIQUE, COCLIQUE):
            raise ValueError(f"unknown block designation {self.kind!r}")

    def is_valid_in(self, g: Graph) -> bool:
        want = self.kind == CLIQUE
        return all(g.has_edge(u, v) == want for u, v in combinations(sorted(self.vertices), 2))


@dataclass(frozen=True)
class Partition:
    blocks: tuple[Block, ...]

    @classmethod
    def of(cls, blocks: Iterable[tuple[Iterable[int], str]]) -> "Partition":
        return cls(tuple(Block(frozenset(vs), kind) for vs, kind in blocks))

    @property
    def cliques(self) -> int:
        return sum(b.kind == CLIQUE for b in self.blocks)

    @property
    def cocliques(self) -> int:
        return sum(b.kind == COCLIQUE for b in self.blocks)

    def problems(self, g: Graph) -> list[str]:
        """Reasons this is not a valid designated partition of ``g`` (empty if valid)."""
        out = []
        seen: set[int] = set()
        for i, b in enumerate(self.blocks):
            if seen & b.vertices:
                out.append(f"block {i} overlaps earlier blocks on {sorted(seen & b.vertices)}")
            seen |= b.vertices
            if not b.is_valid_in(g):
                out.append(f"block {i} is not a {b.kind}")
        if seen != set(range(g.n)):
            out.append(f"blocks cover {sorted(seen)} instead of 0..{g.n - 1}")
        return out

    def is_valid_for(self, g: Graph) -> bool:
        return not self.problems(g)

    def set_partition(self) -> frozenset[frozenset[int]]:
        return frozenset(b.vertices for b in self.blocks if b.vertices)

    def to_json(self) -> list[dict]:
        return [{"kind": b.kind, "vertices": sorted(b.vertices)} for b in self.blocks]
