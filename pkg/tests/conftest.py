import hypothesis.strategies as st
import pytest

from kalliance.graph_core import Graph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(name: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))

    return record


def atlas(connected_only: bool = True, min_n: int = 1) -> list[Graph]:
    """One representative per isomorphism class of graphs on <= 7 vertices."""
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n < min_n or (connected_only and not nx.is_connected(h)):
            continue
        out.append(Graph(n, h.edges()))
    return out
