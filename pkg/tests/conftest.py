import itertools

import pytest
from hypothesis import strategies as st

from skyfill import Composition, Filling, compositions, enumerate_ssf

SMALL_FAMILY = list(compositions(4, 3))


def brute_force_ssf(alpha: Composition) -> list[Filling]:
    """Every assignment of 1..n to the boxes, kept when it meets the four conditions.

    The conditions are checked here from scratch, independently of the package.
    """
    cells = [(i, j) for i, a in enumerate(alpha.parts, start=1) for j in range(1, a + 1)]
    out = []
    for values in itertools.product(range(1, alpha.n + 1), repeat=len(cells)):
        g = dict(zip(cells, values))
        ok = True
        for (i, j), v in g.items():
            if v > i or ((i, j + 1) in g and g[(i, j + 1)] > v):
                ok = False
                break
            for (i2, j2), v2 in g.items():
                if j2 != j or i2 <= i:
                    continue
                # v2 sits below v in column j
                if v2 == v or (v2 < v and g.get((i, j + 1), 0) <= v2):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            rows = [[g[(i, j)] for j in range(1, a + 1)] for i, a in enumerate(alpha.parts, start=1)]
            out.append(Filling.from_rows(rows, alpha))
    return out


@st.composite
def ssf_fillings(draw, max_n=4, max_part=3):
    n = draw(st.integers(1, max_n))
    parts = tuple(draw(st.lists(st.integers(0, max_part), min_size=n, max_size=n)))
    fillings = enumerate_ssf(Composition(parts))
    return draw(st.sampled_from(fillings))


# one PASS/FAIL line per acceptance criterion at the end of the run

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture(scope="session")
def small_family():
    return SMALL_FAMILY
