from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from xform.generators import complete, cycle, path, star
from xform.graph import Graph, graph_from_edge_list
from xform.verify import exhaustive_graphs

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def record(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[1].rstrip(":"))):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name} {detail}".rstrip())


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return graph_from_edge_list(n, chosen)


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    """Every labeled graph up to 4 vertices plus a few named families."""
    named = [cycle(n) for n in range(3, 8)] + [star(n) for n in range(2, 8)]
    named += [path(n) for n in range(1, 8)] + [complete(n) for n in range(1, 7)]
    return list(exhaustive_graphs(4)) + named

