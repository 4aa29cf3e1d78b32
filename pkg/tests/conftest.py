import sys
from math import comb

from hypothesis import settings, strategies as st

from gel.graph import Graph

settings.register_profile("default", max_examples=120, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << comb(n, 2)) - 1)) if n > 1 else 0
    return Graph.from_pairmask(n, mask)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
