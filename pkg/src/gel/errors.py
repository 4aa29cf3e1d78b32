"""Exception types shared across the toolkit."""


class GelError(Exception):
    """Base class for all errors raised by this package."""


class Graph6Error(GelError, ValueError):
    """Malformed graph6 input.

    ``offset`` is the byte position at which decoding failed.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class SolverTimeout(GelError):
    """An exact solver exhausted its node budget or wall-clock deadline."""

    def __init__(self, message, nodes=0, graph=None):
        super().__init__(message)
        self.nodes = nodes
        self.graph = graph


class DegenerateInput(GelError, ValueError):
    """A formula was evaluated at a point where it is undefined."""
