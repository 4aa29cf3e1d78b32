"""Node budgets and deadlines for the exact solvers."""
from __future__ import annotations

import os
import time

from .errors import SolverTimeout

DEFAULT_NODE_BUDGET = 10**8
ENV_NODE_BUDGET = "GEL_NODE_BUDGET"


def default_node_budget() -> int:
    raw = os.environ.get(ENV_NODE_BUDGET)
    if raw:
        return int(raw)
    return DEFAULT_NODE_BUDGET


class Limits:
    """Mutable search counter; one instance per solver call.

    ``tick`` is called once per search node and raises :class:`SolverTimeout`
    when either the node budget or the wall-clock deadline is exceeded.
    """

    __slots__ = ("budget", "deadline", "nodes", "label")

    def __init__(self, budget: int | None = None, timeout: float | None = None,
                 label: str = "search"):
        self.budget = default_node_budget() if budget is None else budget
        self.deadline = None if timeout is None else time.monotonic() + timeout
        self.nodes = 0
        self.label = label

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SolverTimeout(f"{self.label}: node budget {self.budget} exceeded",
                                nodes=self.nodes)
        # checking the clock every node is measurably slow
        if self.deadline is not None and not self.nodes & 0x3FF:
            if time.monotonic() > self.deadline:
                raise SolverTimeout(f"{self.label}: deadline exceeded", nodes=self.nodes)


def as_limits(limits: Limits | None, label: str) -> Limits:
    if limits is None:
        return Limits(label=label)
    return limits
