from __future__ import annotations

import pytest

import published as pd
from smallcover import io
from smallcover.combinatorics import dualize, facets_from_points
from smallcover.gf2 import CharMatrixZ2

_criteria: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.outcome == "passed" else "FAIL"
        _criteria.append((str(marker.args[0]), item.name, status))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    by_label: dict[str, list[tuple[str, str]]] = {}
    for label, name, status in _criteria:
        by_label.setdefault(label, []).append((name, status))
    terminalreporter.section("acceptance criteria")
    for label, results in by_label.items():
        failed = [name for name, status in results if status == "FAIL"]
        status = "FAIL" if failed else "PASS"
        line = f"{status}  criterion {label:<6} {len(results) - len(failed)}/{len(results)} checks passed"
        if failed:
            line += "; failing: " + ", ".join(failed)
        terminalreporter.write_line(line)


def _hull_polytope(points, name):
    return dualize(facets_from_points(io.points_from_dict(io.read_json(points))), name)


@pytest.fixture(scope="session")
def p0_hull():
    """P0 as the hull labels it."""
    return _hull_polytope(pd.P0_POINTS, "P0_4_8")


@pytest.fixture(scope="session")
def p1_hull():
    return _hull_polytope(pd.P1_POINTS, "P1_4_8")


def to_printed(hull, labels):
    """Relabel a hull so coordinate point i becomes facet labels[i]."""
    prior = hull.relabel or tuple(range(hull.num_facets))
    images = [0] * hull.num_facets
    for i, label in enumerate(labels):
        images[prior[i]] = label
    return hull.relabeled(images)


@pytest.fixture(scope="session")
def p0(p0_hull):
    """P0 with the printed facet labels."""
    return to_printed(p0_hull, pd.P0_PRINTED_LABELS)


@pytest.fixture(scope="session")
def p1(p1_hull):
    return to_printed(p1_hull, pd.P1_PRINTED_LABELS)


@pytest.fixture(scope="session")
def p0_matrices():
    return {k: CharMatrixZ2.from_rows(v) for k, v in pd.P0_MATRICES.items()}


@pytest.fixture(scope="session")
def p1_matrices():
    return {k: CharMatrixZ2.from_rows(v) for k, v in pd.P1_MATRICES.items()}
