import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from twdecomp.graph import Graph, is_connected

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


@st.composite
def graphs(draw, min_n=0, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [p for p, keep in zip(pairs, picks) if keep])
    if connected and n:
        # chain the components so the draw stays cheap
        from twdecomp.graph import components
        comps = [min(c) for c in components(g)]
        g = Graph.from_edges(n, set(g.edges()) | {(a, b) for a, b in zip(comps, comps[1:])})
        assert is_connected(g)
    return g


@pytest.fixture(scope="session")
def named_values():
    import json
    data = json.loads((FIXTURES / "named_values.json").read_text())
    return {e["name"]: e["value"] for e in data["values"]}


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
