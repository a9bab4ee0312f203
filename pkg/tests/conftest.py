from collections import Counter

import pytest
from scipy import stats as sst

from graphsampling import Graph
from graphsampling.generators import complete_graph, cycle_graph, path_graph, star_graph


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def s4():
    """Star with center 0 and leaves 1..4."""
    return star_graph(4)


@pytest.fixture
def paw():
    """Triangle 0-1-2 with pendant 3 attached to 0."""
    return Graph.from_edges([(0, 1), (1, 2), (0, 2), (0, 3)])


def gof_pvalue(counts: Counter, probs: dict) -> float:
    keys = sorted(probs)
    observed = [counts.get(k, 0) for k in keys]
    assert sum(observed) == sum(counts.values()), f"unexpected outcomes: {set(counts) - set(probs)}"
    total = sum(observed)
    expected = [probs[k] * total for k in keys]
    return sst.chisquare(observed, expected).pvalue


def homogeneity_pvalue(a: Counter, b: Counter) -> float:
    keys = sorted(set(a) | set(b), key=repr)
    table = [[a.get(k, 0) for k in keys], [b.get(k, 0) for k in keys]]
    if len(keys) == 1:
        return 1.0
    return sst.chi2_contingency(table).pvalue


# -- acceptance reporting ------------------------------------------------------

_criteria: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria[number] = (title, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number:>2}: {title}")
